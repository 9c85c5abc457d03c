#include "dsym/qsym.hpp"

#include <algorithm>

#include <json.hpp>

namespace dsym {

std::string to_string(Basis b) { return b == Basis::M ? "M" : "F"; }

Basis parse_basis(std::string_view text) {
    if (text == "M" || text == "m") return Basis::M;
    if (text == "F" || text == "f") return Basis::F;
    throw ParseError("basis must be M or F", 0);
}

QSymExpansion QSymExpansion::single(Basis basis, const Composition& alpha, const Rational& c) {
    QSymExpansion e(basis, alpha.size());
    e.add(alpha, c);
    return e;
}

void QSymExpansion::add(const Composition& alpha, const Rational& c) {
    if (alpha.size() != degree_)
        throw PreconditionError("composition " + to_string(alpha) + " has size " +
                                std::to_string(alpha.size()) + ", expansion degree is " +
                                std::to_string(degree_));
    const Rational k = canonical(c);
    if (k == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational QSymExpansion::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

int resolve_ambient(int m, int ambient) {
    if (m < 0) throw PreconditionError("variable count must be nonnegative");
    if (ambient == 0) ambient = m;
    if (ambient < m) throw PreconditionError("ambient smaller than variable count");
    return ambient;
}

} // namespace

Polynomial monomial_qsym(const Composition& alpha, int m, int ambient) {
    ambient = resolve_ambient(m, ambient);
    const int len = alpha.length();
    if (len == 0) return Polynomial::constant(ambient, 1);
    if (len > m) return Polynomial(ambient);
    std::vector<Term> terms;
    std::vector<int> pos(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        Monomial mono;
        for (int i = 0; i < len; ++i) mono.set(pos[static_cast<std::size_t>(i)], alpha[i]);
        terms.push_back({mono, Rational(1)});
        int i = len - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - len + i) --i;
        if (i < 0) break;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < len; ++j)
            pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Polynomial::from_terms(ambient, std::move(terms));
}

Polynomial fundamental_qsym(const Composition& alpha, int m, int ambient) {
    ambient = resolve_ambient(m, ambient);
    Polynomial out(ambient);
    for (const auto& beta : refinements(alpha)) {
        if (beta.length() > m) continue;
        out += monomial_qsym(beta, m, ambient);
    }
    return out;
}

Polynomial to_polynomial(const QSymExpansion& e, int m, int ambient) {
    ambient = resolve_ambient(m, ambient);
    Polynomial out(ambient);
    for (const auto& [alpha, c] : e.terms()) {
        const Polynomial basis = e.basis() == Basis::M ? monomial_qsym(alpha, m, ambient)
                                                       : fundamental_qsym(alpha, m, ambient);
        out += c * basis;
    }
    return out;
}

QSymExpansion mf_convert(const QSymExpansion& e, Basis target) {
    if (e.basis() == target) return e;
    QSymExpansion out(target, e.degree());
    for (const auto& [alpha, c] : e.terms()) {
        for (const auto& beta : refinements(alpha)) {
            if (target == Basis::M) {
                // F_alpha = sum_{alpha <= beta} M_beta
                out.add(beta, c);
            } else {
                // M_alpha = sum_{alpha <= beta} (-1)^{l(beta)-l(alpha)} F_beta
                out.add(beta, (beta.length() - alpha.length()) % 2 ? Rational(-c) : c);
            }
        }
    }
    return out;
}

QSymExpansion qsym_from_polynomial(const Polynomial& f) {
    if (!f.is_homogeneous()) throw PreconditionError("qsym_from_polynomial: not homogeneous");
    if (!is_quasisymmetric(f)) throw PreconditionError("qsym_from_polynomial: not quasisymmetric");
    QSymExpansion out(Basis::M, f.degree().value_or(0));
    for (const auto& t : f.terms()) {
        std::vector<int> parts;
        bool packed = true;
        for (int i = 0; i < f.ambient(); ++i) {
            if (t.mono[i] == 0) continue;
            if (static_cast<int>(parts.size()) != i) packed = false;
            parts.push_back(t.mono[i]);
        }
        if (packed) out.add(Composition(std::move(parts)), t.coeff);
    }
    return out;
}

Rational specialize_ones(const QSymExpansion& e, int j) {
    if (j < 0) throw PreconditionError("specialize_ones: negative variable count");
    Rational total = 0;
    for (const auto& [alpha, c] : e.terms()) {
        const BigInt v = e.basis() == Basis::M
                             ? binomial(j, alpha.length())
                             : binomial(j - alpha.length() + e.degree(), e.degree());
        total += c * Rational(v);
    }
    return total;
}

Rational ds_M_closed(const Composition& alpha, int m, int n) {
    if (alpha.size() != n - 1)
        throw PreconditionError("ds_M_closed: |alpha| must equal n-1");
    const int len = alpha.length();
    if (m < len || m > n) throw PreconditionError("ds_M_closed: need len(alpha) <= m <= n");
    if (m == n) return 0;
    const Rational mag(binomial(n - 1 - len, m - len));
    return (m - len) % 2 ? Rational(-mag) : mag;
}

Rational ds_F_closed(const Composition& gamma, int m, int n) {
    if (gamma.size() != n - 1) throw PreconditionError("ds_F_closed: |gamma| must equal n-1");
    if (m < 0 || m > n) throw PreconditionError("ds_F_closed: need 0 <= m <= n");
    return m == gamma.length() ? 1 : 0;
}

Rational ds_qsym(const QSymExpansion& e, int m, int n) {
    if (e.degree() != n - 1 && !e.is_zero())
        throw PreconditionError("ds_qsym: expansion degree must equal n-1");
    if (m < 1 || m > n) throw PreconditionError("ds_qsym: need 1 <= m <= n");
    Rational total = 0;
    for (int i = 0; i <= m - 1; ++i) {
        const Rational term = Rational(binomial(n, i)) * specialize_ones(e, m - i);
        if (i % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

PhiEulerianVector phi_eulerian(const QSymExpansion& e, int n) {
    if (e.degree() != n - 1 && !e.is_zero())
        throw PreconditionError("phi_eulerian: expansion degree must equal n-1");
    PhiEulerianVector out;
    out.n = n;
    out.h.assign(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) {
        Rational v = specialize_ones(e, j);
        for (int i = 1; i <= j; ++i)
            v -= Rational(binomial(n - 1 + i, i)) * out.h[static_cast<std::size_t>(j - i)];
        out.h[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

Rational ds_powersum(const Composition& lambda, int m, int n) {
    if (lambda.size() != n - 1) throw PreconditionError("ds_powersum: |lambda| must equal n-1");
    if (m < 1 || m > n) throw PreconditionError("ds_powersum: need 1 <= m <= n");
    if (!std::is_sorted(lambda.parts().rbegin(), lambda.parts().rend()))
        throw PreconditionError("ds_powersum: lambda must be a partition");
    const int len = lambda.length();
    Rational total = 0;
    for (int i = 1; i <= std::min(len, m); ++i) {
        const Rational term = Rational(eulerian(len, i) * binomial(n - 1 - len, m - i));
        if ((m - i) % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

Polynomial power_sum(const Composition& lambda, int m, int ambient) {
    ambient = resolve_ambient(m, ambient);
    Polynomial out = Polynomial::constant(ambient, 1);
    for (int part : lambda.parts()) out *= monomial_qsym(Composition{part}, m, ambient);
    return out;
}

std::vector<CompositionSplit> concat_splits(const Composition& alpha) {
    std::vector<CompositionSplit> out;
    const auto& p = alpha.parts();
    const int len = alpha.length();
    for (int cut = 0; cut <= len; ++cut) {
        out.push_back({Composition(std::vector<int>(p.begin(), p.begin() + cut)),
                       Composition(std::vector<int>(p.begin() + cut, p.end())), SplitKind::concat});
    }
    for (int k = 0; k < len; ++k) {
        for (int a = 1; a < p[static_cast<std::size_t>(k)]; ++a) {
            std::vector<int> g(p.begin(), p.begin() + k + 1);
            std::vector<int> d(p.begin() + k, p.end());
            g.back() = a;
            d.front() = p[static_cast<std::size_t>(k)] - a;
            out.push_back({Composition(std::move(g)), Composition(std::move(d)), SplitKind::near_concat});
        }
    }
    return out;
}

Composition transpose_composition(const Composition& delta) {
    const int k = delta.size();
    if (k == 0) throw PreconditionError("transpose_composition: empty composition");
    const DescentSet s = set_of(delta);
    std::vector<int> complement;
    for (int i = 1; i < k; ++i)
        if (!s.contains(i)) complement.push_back(i);
    return comp_of(complement, k);
}

std::vector<DifferenceTerm> difference_expansion(const Composition& alpha) {
    std::vector<DifferenceTerm> out;
    for (const auto& split : concat_splits(alpha)) {
        const Composition dt =
            split.delta.length() == 0 ? Composition{} : transpose_composition(split.delta);
        out.push_back({split.gamma, dt, split.delta.size() % 2 ? -1 : 1});
    }
    return out;
}

Polynomial evaluate_difference_expansion(const Composition& alpha, int n, int m) {
    if (m < 0 || m > n) throw PreconditionError("evaluate_difference_expansion: need 0 <= m <= n");
    const int ylen = n - m;
    Polynomial out(n);
    for (const auto& term : difference_expansion(alpha)) {
        if (term.gamma.length() > n || term.delta_t.length() > ylen) continue;
        const Polynomial fx = fundamental_qsym(term.gamma, n, n);
        // F_{delta^t}(x_n, x_{n-1}, ..., x_{m+1})
        Polynomial fy_local = fundamental_qsym(term.delta_t, ylen, ylen);
        Permutation rev(static_cast<std::size_t>(ylen));
        for (int i = 0; i < ylen; ++i) rev[static_cast<std::size_t>(i)] = ylen - i;
        fy_local = apply_permutation(fy_local, rev);
        const Polynomial fy = shift_variables(fy_local, m, n);
        Polynomial prod = fx * fy;
        if (term.sign < 0)
            out -= prod;
        else
            out += prod;
    }
    return out;
}

std::string qsym_to_json(const QSymExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : e.terms())
        terms.push_back({{"comp", alpha.parts()}, {"coeff", to_string(c)}});
    nlohmann::json j = {{"basis", to_string(e.basis())}, {"degree", e.degree()}, {"terms", terms}};
    return j.dump();
}

QSymExpansion qsym_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
    }
    try {
        QSymExpansion e(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
        for (const auto& t : j.at("terms")) {
            Composition alpha(t.at("comp").get<std::vector<int>>());
            const auto& c = t.at("coeff");
            e.add(alpha, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
        }
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed expansion: ") + ex.what(), 0);
    }
}

} // namespace dsym
