#pragma once

// Exact sparse multivariate polynomials over Q.
//
// A Polynomial lives in Q[x_1..x_n] for a fixed ambient n. Terms are kept as a
// flat vector sorted in descending graded-lex order with no zero coefficients,
// so equality is structural and serialization is deterministic.

#include "dsym/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsym {

inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

/// Exponent vector of a monomial x^c. Positions past the ambient n are zero.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::span<const int> exponents);
    Monomial(std::initializer_list<int> exponents)
        : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

    int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
    int degree() const { return degree_; }

    /// Sets exponent of x_{i+1}; keeps the cached degree in sync.
    void set(int i, int e);

    std::vector<int> exponents(int n) const;

    /// Image under x_i -> x_{w(i)}; w is one-line with values 1..w.size().
    Monomial permuted(std::span<const int> w) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic comparison: degree first, then x_1 exponent, ...
    friend std::strong_ordering grlex(const Monomial& a, const Monomial& b);

    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, kMaxVariables> exp_{};
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

class Polynomial {
public:
    explicit Polynomial(int ambient_n);

    static Polynomial constant(int ambient_n, const Rational& c);
    /// x_i, 1-based.
    static Polynomial variable(int ambient_n, int i);
    static Polynomial monomial(int ambient_n, std::span<const int> exponents,
                               const Rational& c = 1);
    static Polynomial monomial(int ambient_n, std::initializer_list<int> exponents,
                               const Rational& c = 1) {
        return monomial(ambient_n, std::span<const int>(exponents.begin(), exponents.size()), c);
    }
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(int ambient_n, std::vector<Term> terms);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// nullopt for the zero polynomial.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    /// Highest index i with x_i present, 0 for constants.
    int max_variable() const;

    Rational coefficient(const Monomial& m) const;
    /// The value when the polynomial is a constant; throws otherwise.
    Rational constant_value() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

    friend bool operator==(const Polynomial& f, const Polynomial& g);

private:
    void require_same_ambient(const Polynomial& g, const char* op) const;

    int n_;
    std::vector<Term> terms_;
};

/// The four ring operations under one name; the Rational overload is `scale`.
enum class ArithOp { add, sub, mul };
Polynomial arith(ArithOp op, const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& c);

Polynomial pow(const Polynomial& f, int k);

/// Reinterprets f in Q[x_1..x_m]; m must cover every variable f uses.
Polynomial with_ambient(const Polynomial& f, int m);

/// x_i -> x_{i+offset}, in a new ambient of size m.
Polynomial shift_variables(const Polynomial& f, int offset, int m);

/// x_i -> x_{w(i)}. w must be a permutation of [ambient].
Polynomial apply_permutation(const Polynomial& f, std::span<const int> w);

/// Sum over S_n of w.f, respectively with the sign of w.
Polynomial symmetrize(const Polynomial& f);
Polynomial antisymmetrize(const Polynomial& f);

/// prod_{i<j} (x_i - x_j), expanded.
Polynomial vandermonde(int n);

/// q with f = q*g; throws InvariantError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// x_1 = ... = x_m = 1, remaining variables 0.
Rational eval_ones(const Polynomial& f, int m);

/// Exact evaluation at a point of length ambient.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

bool is_symmetric(const Polynomial& f);
bool is_quasisymmetric(const Polynomial& f);

/// Homogeneous component of degree d.
Polynomial homogeneous_part(const Polynomial& f, int d);

Polynomial parse_polynomial(std::string_view text, int n);
std::string to_string(const Polynomial& f);

} // namespace dsym
