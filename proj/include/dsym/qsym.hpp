#pragma once

// Quasisymmetric polynomials in the monomial (M) and fundamental (F) bases,
// their specializations at 1^j, and closed forms for divided symmetrization.

#include "dsym/combinat.hpp"
#include "dsym/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace dsym {

enum class Basis { M, F };

std::string to_string(Basis b);
Basis parse_basis(std::string_view text);

/// Finite linear combination of basis elements indexed by compositions of a
/// common size.
class QSymExpansion {
public:
    QSymExpansion(Basis basis, int degree) : basis_(basis), degree_(degree) {}
    static QSymExpansion single(Basis basis, const Composition& alpha, const Rational& c = 1);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Composition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Composition& alpha, const Rational& c);
    Rational coefficient(const Composition& alpha) const;

    friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;

private:
    Basis basis_;
    int degree_;
    std::map<Composition, Rational> terms_;
};

/// M_alpha(x_1..x_m) inside ambient variables (ambient >= m; 0 means m).
Polynomial monomial_qsym(const Composition& alpha, int m, int ambient = 0);
/// F_alpha(x_1..x_m) as the sum of M_beta over refinements beta of alpha.
Polynomial fundamental_qsym(const Composition& alpha, int m, int ambient = 0);
/// The expansion restricted to x_1..x_m.
Polynomial to_polynomial(const QSymExpansion& e, int m, int ambient = 0);

QSymExpansion mf_convert(const QSymExpansion& e, Basis target);

/// Reads off the M-expansion of a quasisymmetric polynomial of one degree.
QSymExpansion qsym_from_polynomial(const Polynomial& f);

/// e(1^j).
Rational specialize_ones(const QSymExpansion& e, int j);

/// (-1)^{m-l} C(n-1-l, m-l) with l = len(alpha); 0 at m = n.
Rational ds_M_closed(const Composition& alpha, int m, int n);
/// 1 if m = len(gamma), else 0.
Rational ds_F_closed(const Composition& gamma, int m, int n);
/// sum_{i=0}^{m-1} (-1)^i C(n,i) e(1^{m-i}).
Rational ds_qsym(const QSymExpansion& e, int m, int n);

struct PhiEulerianVector {
    int n = 0;
    std::vector<Rational> h;  // h_0 .. h_{n-1}
};

/// Solves phi(j) = sum_{i<=j} C(n-1+i, i) h_{j-i} for j = 0..n-1, with
/// phi(j) = e(1^j).
PhiEulerianVector phi_eulerian(const QSymExpansion& e, int n);

/// Power sum p_lambda restricted to m variables: closed form via Eulerian numbers.
Rational ds_powersum(const Composition& lambda, int m, int n);
/// p_lambda(x_1..x_m) as a polynomial.
Polynomial power_sum(const Composition& lambda, int m, int ambient = 0);

/// {"basis":"M","degree":3,"terms":[{"comp":[2,1],"coeff":"1"}]}
std::string qsym_to_json(const QSymExpansion& e);
QSymExpansion qsym_from_json(std::string_view text);

enum class SplitKind { concat, near_concat };

struct CompositionSplit {
    Composition gamma;
    Composition delta;
    SplitKind kind;

    friend bool operator==(const CompositionSplit&, const CompositionSplit&) = default;
};

/// All (gamma, delta) with gamma.delta = alpha or gamma (.) delta = alpha;
/// gamma or delta may be empty for plain concatenation.
std::vector<CompositionSplit> concat_splits(const Composition& alpha);

/// comp([|delta|-1] \ set(delta)); rejects the empty composition.
Composition transpose_composition(const Composition& delta);

struct DifferenceTerm {
    Composition gamma;       // F_gamma on the x-alphabet
    Composition delta_t;     // F_{delta^t} on the y-alphabet
    int sign;                // (-1)^{|delta|}
};

/// Signed expansion of F_alpha(x - y) over the splits of alpha. The F_{delta^t}
/// factors are to be read on the y-alphabet taken in decreasing order; see
/// evaluate_difference_expansion.
std::vector<DifferenceTerm> difference_expansion(const Composition& alpha);

/// Evaluates the difference expansion with x = x_1..x_n and y = x_{m+1}..x_n
/// read in decreasing order, as a polynomial in n variables. Equals
/// F_alpha(x_1..x_m).
Polynomial evaluate_difference_expansion(const Composition& alpha, int n, int m);

} // namespace dsym
