#include "doctest.h"

#include "dsym/permutation.hpp"
#include "dsym/polynomial.hpp"
#include "oracle.hpp"

#include <random>

using namespace dsym;

namespace {
Polynomial P(const char* s, int n) { return parse_polynomial(s, n); }
}

TEST_CASE("parse_polynomial reads the grammar") {
    const auto f = P("x1^2*x2 - 3/2*x3", 3);
    CHECK(f.size() == 2);
    CHECK(f.coefficient(Monomial(std::vector<int>{2, 1, 0})) == Rational(1));
    CHECK(f.coefficient(Monomial(std::vector<int>{0, 0, 1})) == Rational(-3, 2));
    CHECK(P("0", 4).is_zero());
    CHECK(P("x1*x3", 3) == oracle::mono(3, {1, 0, 1}));
}

TEST_CASE("parse_polynomial rejects bad input") {
    CHECK_THROWS_AS(P("x1 +", 2), ParseError);
    CHECK_THROWS_AS(P("x1 * * x2", 2), ParseError);
    CHECK_THROWS_AS(P("x4", 3), ParseError);
    CHECK_THROWS_AS(P("1/0", 1), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    for (const char* s : {"x1^2*x2 - 3/2*x3", "0", "-7", "x1*x2*x3 + 1/3*x2^4"}) {
        const auto f = P(s, 3);
        CHECK(P(to_string(f).c_str(), 3) == f);
    }
}

TEST_CASE("arithmetic") {
    CHECK((P("x1", 2) + P("-x1", 2)).is_zero());
    CHECK(P("x1 - x2", 2) * P("x1 + x2", 2) == P("x1^2 - x2^2", 2));
    CHECK(scale(P("x1*x2", 2), Rational(3, 2)) == P("3/2*x1*x2", 2));
    CHECK(pow(P("x1 + x2", 2), 2) == P("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), PreconditionError);
}

TEST_CASE("apply_permutation") {
    CHECK(apply_permutation(P("x1^2*x2", 2), std::vector<int>{2, 1}) == P("x2^2*x1", 2));
    for (const auto& w : Permutations(3)) CHECK(apply_permutation(P("x1+x2+x3", 3), w) == P("x1+x2+x3", 3));
    CHECK(apply_permutation(P("x1*x3", 3), std::vector<int>{3, 2, 1}) == P("x1*x3", 3));
    CHECK_THROWS_AS(apply_permutation(P("x1", 2), std::vector<int>{1, 1}), PreconditionError);
}

TEST_CASE("symmetrize, antisymmetrize and the Vandermonde") {
    CHECK(symmetrize(P("x1", 2)) == P("x1 + x2", 2));
    CHECK(antisymmetrize(P("x1", 2)) == P("x1 - x2", 2));
    CHECK(vandermonde(1) == Polynomial::constant(1, 1));
    CHECK(vandermonde(2) == P("x1 - x2", 2));
    const auto v3 = P("x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2", 3);
    CHECK(vandermonde(3) == v3);
    CHECK(vandermonde(3) == P("x1-x2", 3) * P("x1-x3", 3) * P("x2-x3", 3));
    CHECK(antisymmetrize(P("x1^2*x2", 3)) == v3);
}

TEST_CASE("antisymmetrize agrees with a direct signed sum") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial f(n);
            for (const auto& c : oracle::weak(n, n))
                if (rng() % 3 == 0) f += oracle::mono(n, c, static_cast<long>(rng() % 7) - 3);
            Polynomial want(n);
            for (const auto& w : Permutations(n)) {
                const auto g = apply_permutation(f, w);
                want += permutation_sign(w) > 0 ? g : scale(g, -1);
            }
            CHECK(antisymmetrize(f) == want);
        }
}

TEST_CASE("exact_divide") {
    CHECK(exact_divide(P("x1^2 - x2^2", 2), P("x1 - x2", 2)) == P("x1 + x2", 2));
    CHECK(exact_divide(P("0", 2), P("x1", 2)).is_zero());
    CHECK(exact_divide(antisymmetrize(P("x1^2*x2", 3)), vandermonde(3)) == Polynomial::constant(3, 1));
    CHECK_THROWS(exact_divide(P("x1 + 1", 2), P("x1 - x2", 2)));
    CHECK_THROWS(exact_divide(P("x1", 2), P("0", 2)));
}

TEST_CASE("eval_ones and evaluate") {
    CHECK(eval_ones(P("x1*x2 + x1*x3", 3), 2) == Rational(1));
    CHECK(eval_ones(P("x1*x2 + 5", 3), 0) == Rational(5));
    CHECK(eval_ones(P("x1^2*x2 + x1^2*x3 + x2^2*x3", 3), 3) == Rational(3));
    const std::vector<Rational> pt{Rational(1, 2), 3};
    CHECK(evaluate(P("x1*x2 + x2", 2), pt) == Rational(9, 2));
}

TEST_CASE("symmetry predicates") {
    CHECK(is_quasisymmetric(P("x1^2*x2 + x1^2*x3 + x2^2*x3 + x1*x2*x3", 3)));
    CHECK_FALSE(is_symmetric(P("x1^2*x2 + x1^2*x3 + x2^2*x3", 3)));
    CHECK(is_symmetric(P("x1 + x2 + x3", 3)));
    CHECK(is_quasisymmetric(P("x1 + x2 + x3", 3)));
    CHECK_FALSE(is_quasisymmetric(P("x1^2*x2 + x1^2*x3", 3)));
}

TEST_CASE("degree bookkeeping") {
    CHECK_FALSE(P("0", 2).degree().has_value());
    CHECK(P("x1^3 + x2", 2).degree() == 3);
    CHECK_FALSE(P("x1^3 + x2", 2).is_homogeneous());
    CHECK(homogeneous_part(P("x1^3 + x2 + 4", 2), 1) == P("x2", 2));
    CHECK(P("x1 + x3", 4).max_variable() == 3);
    CHECK(shift_variables(P("x1*x2", 2), 2, 4) == P("x3*x4", 4));
    CHECK(with_ambient(P("x1", 1), 3) == P("x1", 3));
}

TEST_CASE("permutations") {
    int count = 0;
    for ([[maybe_unused]] const auto& w : Permutations(3)) ++count;
    CHECK(count == 6);
    CHECK(permutation_sign(std::vector<int>{2, 1, 3}) == -1);
    CHECK(inversions(std::vector<int>{3, 2, 1}) == 3);
    CHECK(unrank_permutation(3, 0) == identity_permutation(3));
    CHECK(compose(std::vector<int>{2, 1, 3}, std::vector<int>{2, 1, 3}) == identity_permutation(3));
    CHECK_THROWS_AS(validate_permutation(std::vector<int>{1, 3}), PreconditionError);
}
