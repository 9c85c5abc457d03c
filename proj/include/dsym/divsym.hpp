#pragma once

// Divided symmetrization
//
//   <f>_n = sum_{w in S_n} w . ( f / prod_{i<n} (x_i - x_{i+1}) )
//
// evaluated two ways: a brute-force route that stays inside polynomial
// arithmetic (antisymmetrize f times the missing Vandermonde factors, then
// divide by the Vandermonde), and a fast route for degree n-1 that sums the
// signed descent-class count of each monomial.

#include "dsym/combinat.hpp"
#include "dsym/polynomial.hpp"

#include <variant>

namespace dsym {

/// prod over pairs (i,j), j >= i+2, of (x_i - x_j) in n variables.
Polynomial vandermonde_complement(int n);

/// <f>_n for homogeneous f in ambient n; a symmetric polynomial of degree
/// deg f - (n-1), zero when deg f < n-1.
Polynomial ds_bruteforce(const Polynomial& f);
/// Same with the serial antisymmetrization kernel.
Polynomial ds_bruteforce_serial(const Polynomial& f);

/// (-1)^{|S_c|} beta_n(S_c) for c of size n-1.
BigInt ds_monomial(const WeakComposition& c);

/// <f>_n for f homogeneous of degree exactly n-1 (zero allowed).
Rational ds_scalar(const Polynomial& f);

enum class DsMethod { automatic, oracle, fast };

struct DsResult {
    Polynomial value;
    DsMethod method_used;
};

/// Fast route when deg f = n-1 (or f = 0), oracle otherwise, unless forced.
DsResult divided_symmetrization(const Polynomial& f, DsMethod method = DsMethod::automatic);

namespace transform {
struct Reverse {};
struct Negate {};
struct Shift {
    Rational c;
};
} // namespace transform

using SymmetryTransform = std::variant<transform::Reverse, transform::Negate, transform::Shift>;

/// x_i -> x_{n+1-i}, x_i -> -x_i, or x_i -> x_i + c applied to f.
Polynomial ds_symmetry_transform(const Polynomial& f, const SymmetryTransform& kind);

/// C(n,i) <g>_i <h'>_{n-i} for f = (x_i - x_{i+1}) g(x_1..x_i) h(x_{i+1}..x_n),
/// where h' is h moved onto x_1..x_{n-i}. g and h live in ambient n.
Rational ds_factored(const Polynomial& g, const Polynomial& h, int i);

/// Repeatedly fixes the largest index whose psum leaves {0,-1} until every
/// psum lies in {0,-1}; preserves S_c and the monomial's value.
WeakComposition normalize_moves(const WeakComposition& c);

/// One normalization move; returns false when c is already normalized.
bool normalize_step(WeakComposition& c);

/// Volume of the permutahedron with vertex orbit a, a weakly decreasing.
Rational volume_permutahedron(std::span<const Rational> a);

} // namespace dsym
