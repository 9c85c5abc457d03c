#include "dsym/polynomial.hpp"

#include "dsym/permutation.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace dsym {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const int> exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
        throw PreconditionError("too many variables (max " + std::to_string(kMaxVariables) + ")");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

void Monomial::set(int i, int e) {
    if (i < 0 || i >= kMaxVariables) throw PreconditionError("variable index out of range");
    if (e < 0 || e > kMaxExponent) throw PreconditionError("exponent out of range");
    auto& slot = exp_[static_cast<std::size_t>(i)];
    degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
    slot = static_cast<std::uint8_t>(e);
}

std::vector<int> Monomial::exponents(int n) const {
    return {exp_.begin(), exp_.begin() + n};
}

Monomial Monomial::permuted(std::span<const int> w) const {
    Monomial r;
    for (std::size_t i = 0; i < w.size(); ++i)
        r.exp_[static_cast<std::size_t>(w[i] - 1)] = exp_[i];
    r.degree_ = degree_;
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
        const int e = a.exp_[i] + b.exp_[i];
        if (e > kMaxExponent) throw PreconditionError("exponent overflow in product");
        r.exp_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.exp_.begin(), a.exp_.end(), b.exp_.begin(),
                                                  b.exp_.end());
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t w[2];
    std::memcpy(w, exp_.data(), sizeof w);
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w[1] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return grlex(a.mono, b.mono) > 0; }

std::vector<Term> collect(std::unordered_map<Monomial, Rational, MonomialHash>&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), term_before);
    return out;
}

void check_ambient(int n) {
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("ambient variable count must be in 0.." +
                                std::to_string(kMaxVariables));
}

} // namespace

Polynomial::Polynomial(int ambient_n) : n_(ambient_n) { check_ambient(ambient_n); }

Polynomial Polynomial::constant(int ambient_n, const Rational& c) {
    Polynomial p(ambient_n);
    if (c != 0) p.terms_.push_back({Monomial{}, canonical(c)});
    return p;
}

Polynomial Polynomial::variable(int ambient_n, int i) {
    if (i < 1 || i > ambient_n) throw PreconditionError("variable index out of range");
    Polynomial p(ambient_n);
    Monomial m;
    m.set(i - 1, 1);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(int ambient_n, std::span<const int> exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != ambient_n)
        throw PreconditionError("exponent vector length differs from ambient variable count");
    Polynomial p(ambient_n);
    if (c != 0) p.terms_.push_back({Monomial(exponents), canonical(c)});
    return p;
}

Polynomial Polynomial::from_terms(int ambient_n, std::vector<Term> terms) {
    Polynomial p(ambient_n);
    for (auto& t : terms) {
        for (int i = ambient_n; i < kMaxVariables; ++i)
            if (t.mono[i] != 0) throw PreconditionError("term uses a variable beyond ambient");
        t.coeff.canonicalize();
    }
    std::sort(terms.begin(), terms.end(), term_before);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

int Polynomial::max_variable() const {
    int mv = 0;
    for (const auto& t : terms_)
        for (int i = n_; i > mv; --i)
            if (t.mono[i - 1] != 0) {
                mv = i;
                break;
            }
    return mv;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex(t.mono, key) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_.front().mono.degree() == 0) return terms_.front().coeff;
    throw PreconditionError("polynomial is not a constant");
}

void Polynomial::require_same_ambient(const Polynomial& g, const char* op) const {
    if (n_ != g.n_)
        throw PreconditionError(std::string(op) + ": ambient mismatch (" + std::to_string(n_) +
                                " vs " + std::to_string(g.n_) + ")");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_ambient(g, "add");
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end() || (a != terms_.end() && grlex(a->mono, b->mono) > 0)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || grlex(a->mono, b->mono) < 0) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_ambient(g, "sub");
    return *this += -g;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.require_same_ambient(g, "mul");
    Polynomial r(f.n_);
    if (f.is_zero() || g.is_zero()) return r;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& s : f.terms_)
        for (const auto& t : g.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    r.terms_ = collect(std::move(acc));
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
    *this = *this * g;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    const Rational k = canonical(c);
    for (auto& t : terms_) t.coeff *= k;
    return *this;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.n_ != g.n_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
        if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
    switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    }
    throw InvariantError("unknown ArithOp");
}

Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }

Polynomial pow(const Polynomial& f, int k) {
    if (k < 0) throw PreconditionError("negative power");
    Polynomial result = Polynomial::constant(f.ambient(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial with_ambient(const Polynomial& f, int m) {
    if (f.max_variable() > m)
        throw PreconditionError("polynomial uses x_" + std::to_string(f.max_variable()) +
                                " beyond the requested ambient " + std::to_string(m));
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(m, std::move(terms));
}

Polynomial shift_variables(const Polynomial& f, int offset, int m) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial mono;
        for (int i = 0; i < f.ambient(); ++i) {
            if (t.mono[i] == 0) continue;
            const int j = i + offset;
            if (j < 0 || j >= m) throw PreconditionError("shift_variables: variable out of range");
            mono.set(j, t.mono[i]);
        }
        terms.push_back({mono, t.coeff});
    }
    return Polynomial::from_terms(m, std::move(terms));
}

Polynomial apply_permutation(const Polynomial& f, std::span<const int> w) {
    if (static_cast<int>(w.size()) != f.ambient())
        throw PreconditionError("permutation size differs from ambient variable count");
    validate_permutation(w);
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial mono;
        for (int i = 0; i < f.ambient(); ++i)
            if (t.mono[i] != 0) mono.set(w[static_cast<std::size_t>(i)] - 1, t.mono[i]);
        terms.push_back({mono, t.coeff});
    }
    return Polynomial::from_terms(f.ambient(), std::move(terms));
}

Polynomial vandermonde(int n) {
    if (n < 1) throw PreconditionError("vandermonde: n must be positive");
    Polynomial v = Polynomial::constant(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            v *= Polynomial::variable(n, i) - Polynomial::variable(n, j);
    return v;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (f.ambient() != g.ambient()) throw PreconditionError("exact_divide: ambient mismatch");
    if (g.is_zero()) throw PreconditionError("exact_divide: division by zero");
    const Term& lead = g.terms().front();
    Polynomial rem = f;
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& r = rem.terms().front();
        Monomial qm;
        for (int i = 0; i < f.ambient(); ++i) {
            const int e = r.mono[i] - lead.mono[i];
            if (e < 0) throw InvariantError("exact_divide: divisor does not divide dividend");
            qm.set(i, e);
        }
        Rational qc = r.coeff / lead.coeff;
        std::vector<Term> st;
        st.reserve(g.size());
        for (const auto& t : g.terms()) st.push_back({qm * t.mono, qc * t.coeff});
        rem -= Polynomial::from_terms(f.ambient(), std::move(st));
        qterms.push_back({qm, std::move(qc)});
    }
    return Polynomial::from_terms(f.ambient(), std::move(qterms));
}

Rational eval_ones(const Polynomial& f, int m) {
    if (m < 0 || m > f.ambient()) throw PreconditionError("eval_ones: m out of range");
    Rational sum = 0;
    for (const auto& t : f.terms()) {
        bool survives = true;
        for (int i = m; i < f.ambient(); ++i)
            if (t.mono[i] != 0) {
                survives = false;
                break;
            }
        if (survives) sum += t.coeff;
    }
    return sum;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != f.ambient())
        throw PreconditionError("evaluate: point length differs from ambient");
    std::vector<Rational> p;
    for (const auto& x : point) p.push_back(canonical(x));
    Rational sum = 0;
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (int i = 0; i < f.ambient(); ++i) {
            for (int e = 0; e < t.mono[i]; ++e) v *= p[static_cast<std::size_t>(i)];
        }
        sum += v;
    }
    return sum;
}

bool is_symmetric(const Polynomial& f) {
    const int n = f.ambient();
    for (int i = 1; i < n; ++i) {
        Permutation s = identity_permutation(n);
        std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
        if (!(apply_permutation(f, s) == f)) return false;
    }
    return true;
}

bool is_quasisymmetric(const Polynomial& f) {
    // Every term must carry the same coefficient as the left-packed monomial
    // with the same nonzero exponent sequence, and every such shift must exist.
    const int n = f.ambient();
    std::vector<int> positions;
    for (const auto& t : f.terms()) {
        Monomial packed;
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (t.mono[i] != 0) packed.set(k++, t.mono[i]);
        if (f.coefficient(packed) != t.coeff) return false;
    }
    // Count check: each packed representative with length l must have C(n,l) images.
    for (const auto& t : f.terms()) {
        int len = 0;
        bool packed = true;
        for (int i = 0; i < n; ++i) {
            if (t.mono[i] != 0) {
                if (len != i) packed = false;
                ++len;
            }
        }
        if (!packed) continue;
        // Enumerate all strictly increasing position sets of size len.
        positions.assign(static_cast<std::size_t>(len), 0);
        for (int i = 0; i < len; ++i) positions[static_cast<std::size_t>(i)] = i;
        while (true) {
            Monomial m;
            for (int i = 0; i < len; ++i) m.set(positions[static_cast<std::size_t>(i)], t.mono[i]);
            if (f.coefficient(m) != t.coeff) return false;
            int i = len - 1;
            while (i >= 0 && positions[static_cast<std::size_t>(i)] == n - len + i) --i;
            if (i < 0) break;
            ++positions[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < len; ++j)
                positions[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return true;
}

Polynomial homogeneous_part(const Polynomial& f, int d) {
    std::vector<Term> terms;
    for (const auto& t : f.terms())
        if (t.mono.degree() == d) terms.push_back(t);
    return Polynomial::from_terms(f.ambient(), std::move(terms));
}

} // namespace dsym
