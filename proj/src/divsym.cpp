#include "dsym/divsym.hpp"

#include "dsym/kernels.hpp"

#include <map>

namespace dsym {

Polynomial vandermonde_complement(int n) {
    Polynomial v = Polynomial::constant(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            v *= Polynomial::variable(n, i) - Polynomial::variable(n, j);
    return v;
}

namespace {

void require_homogeneous(const Polynomial& f, const char* op) {
    if (!f.is_homogeneous())
        throw PreconditionError(std::string(op) + ": input is not homogeneous");
    if (f.ambient() < 1) throw PreconditionError(std::string(op) + ": ambient must be positive");
}

template <typename Anti>
Polynomial ds_bruteforce_with(const Polynomial& f, Anti anti) {
    require_homogeneous(f, "ds_bruteforce");
    const int n = f.ambient();
    if (f.is_zero()) return f;
    Polynomial numerator = anti(f * vandermonde_complement(n));
    return exact_divide(numerator, vandermonde(n));
}

} // namespace

Polynomial ds_bruteforce(const Polynomial& f) {
    return ds_bruteforce_with(f, [](const Polynomial& p) { return antisymmetrize(p); });
}

Polynomial ds_bruteforce_serial(const Polynomial& f) {
    return ds_bruteforce_with(f, [](const Polynomial& p) { return kernels::antisymmetrize_serial(p); });
}

BigInt ds_monomial(const WeakComposition& c) {
    const int n = c.length();
    if (n < 1) throw PreconditionError("ds_monomial: empty weak composition");
    if (c.size() != n - 1)
        throw PreconditionError("ds_monomial: degree " + std::to_string(c.size()) +
                                " differs from n-1 = " + std::to_string(n - 1));
    const DescentSet s = s_set(c);
    BigInt b = beta(n, s);
    return s.cardinality() % 2 == 0 ? b : BigInt(-b);
}

Rational ds_scalar(const Polynomial& f) {
    require_homogeneous(f, "ds_scalar");
    const int n = f.ambient();
    if (f.is_zero()) return 0;
    if (*f.degree() != n - 1)
        throw PreconditionError("ds_scalar: degree " + std::to_string(*f.degree()) +
                                " differs from n-1 = " + std::to_string(n - 1));
    // Monomials sharing an S-set share a value; memoize on the set.
    std::map<std::vector<int>, BigInt> memo;
    Rational total = 0;
    for (const auto& t : f.terms()) {
        WeakComposition c{t.mono.exponents(n)};
        const DescentSet s = s_set(c);
        auto it = memo.find(s.elements());
        if (it == memo.end()) {
            BigInt b = beta(n, s);
            if (s.cardinality() % 2) b = -b;
            it = memo.emplace(s.elements(), b).first;
        }
        total += t.coeff * Rational(it->second);
    }
    return total;
}

DsResult divided_symmetrization(const Polynomial& f, DsMethod method) {
    require_homogeneous(f, "divided_symmetrization");
    const int n = f.ambient();
    const bool scalar_degree = f.is_zero() || *f.degree() == n - 1;
    if (method == DsMethod::automatic) method = scalar_degree ? DsMethod::fast : DsMethod::oracle;
    if (method == DsMethod::fast) {
        if (!scalar_degree)
            throw PreconditionError("fast method requires degree n-1 = " + std::to_string(n - 1));
        return {Polynomial::constant(n, ds_scalar(f)), DsMethod::fast};
    }
    return {ds_bruteforce(f), DsMethod::oracle};
}

Polynomial ds_symmetry_transform(const Polynomial& f, const SymmetryTransform& kind) {
    const int n = f.ambient();
    if (std::holds_alternative<transform::Reverse>(kind)) {
        Permutation w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
        return apply_permutation(f, w);
    }
    if (std::holds_alternative<transform::Negate>(kind)) {
        std::vector<Term> terms(f.terms().begin(), f.terms().end());
        for (auto& t : terms)
            if (t.mono.degree() % 2) t.coeff = -t.coeff;
        return Polynomial::from_terms(n, std::move(terms));
    }
    const Rational c = canonical(std::get<transform::Shift>(kind).c);
    std::vector<Polynomial> shifted;
    shifted.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) shifted.push_back(Polynomial::variable(n, i) + Polynomial::constant(n, c));
    Polynomial out(n);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(n, t.coeff);
        for (int i = 0; i < n; ++i)
            if (t.mono[i]) term *= pow(shifted[static_cast<std::size_t>(i)], t.mono[i]);
        out += term;
    }
    return out;
}

Rational ds_factored(const Polynomial& g, const Polynomial& h, int i) {
    const int n = g.ambient();
    if (h.ambient() != n) throw PreconditionError("ds_factored: ambient mismatch");
    if (i < 1 || i > n - 1) throw PreconditionError("ds_factored: split index out of range");
    if (g.max_variable() > i)
        throw PreconditionError("ds_factored: g uses a variable beyond x_" + std::to_string(i));
    for (const auto& t : h.terms())
        for (int j = 0; j < i; ++j)
            if (t.mono[j]) throw PreconditionError("ds_factored: h uses a variable among x_1..x_i");
    if (!g.is_homogeneous() || !h.is_homogeneous())
        throw PreconditionError("ds_factored: g and h must be homogeneous");
    if (g.is_zero() || h.is_zero()) return 0;
    if (*g.degree() + *h.degree() + 1 != n - 1)
        throw PreconditionError("ds_factored: total degree differs from n-1");
    if (*g.degree() != i - 1) return 0;
    const Rational left = ds_scalar(with_ambient(g, i));
    const Rational right = ds_scalar(shift_variables(h, -i, n - i));
    return Rational(binomial(n, i)) * left * right;
}

bool normalize_step(WeakComposition& c) {
    const auto ps = psums(c);
    const int n = c.length();
    int k = -1;
    for (int i = n - 1; i >= 0; --i) {
        const int p = ps[static_cast<std::size_t>(i)];
        if (p != 0 && p != -1) {
            k = i;
            break;
        }
    }
    if (k < 0) return false;
    if (k == n - 1) throw InvariantError("normalize_moves: psum_n must be -1");
    auto& parts = c.parts;
    if (ps[static_cast<std::size_t>(k)] > 0) {
        // Move one unit from the last nonzero part at or before k to k+1.
        // Parts strictly between carry zero, so their psums stay positive.
        int j = k;
        while (parts[static_cast<std::size_t>(j)] == 0) --j;
        --parts[static_cast<std::size_t>(j)];
        ++parts[static_cast<std::size_t>(k + 1)];
    } else {
        // Maximality of k and psum_n = -1 force c_{k+1} >= 1.
        ++parts[static_cast<std::size_t>(k)];
        --parts[static_cast<std::size_t>(k + 1)];
    }
    return true;
}

WeakComposition normalize_moves(const WeakComposition& c) {
    const int n = c.length();
    if (n < 1 || c.size() != n - 1)
        throw PreconditionError("normalize_moves: size must be n-1");
    WeakComposition out = c;
    while (normalize_step(out)) {
    }
    return out;
}

Rational volume_permutahedron(std::span<const Rational> vertex) {
    std::vector<Rational> a;
    for (const auto& v : vertex) a.push_back(canonical(v));
    const int n = static_cast<int>(a.size());
    if (n < 1) throw PreconditionError("volume_permutahedron: empty vertex");
    for (int i = 0; i + 1 < n; ++i)
        if (a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)])
            throw PreconditionError("volume_permutahedron: coordinates must be weakly decreasing");
    Polynomial linear(n);
    for (int i = 1; i <= n; ++i) linear += a[static_cast<std::size_t>(i - 1)] * Polynomial::variable(n, i);
    const Rational value = ds_scalar(pow(linear, n - 1));
    return value / Rational(factorial(n - 1));
}

} // namespace dsym
