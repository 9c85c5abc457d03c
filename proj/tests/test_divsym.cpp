#include "doctest.h"

#include "dsym/divsym.hpp"
#include "oracle.hpp"

#include <random>

using namespace dsym;

namespace {
Polynomial P(const char* s, int n) { return parse_polynomial(s, n); }

Polynomial random_homogeneous(int n, int d, std::mt19937_64& rng) {
    Polynomial f(n);
    for (const auto& c : oracle::weak(d, n))
        if (rng() % 2) f += oracle::mono(n, c, static_cast<long>(rng() % 11) - 5);
    return f;
}
} // namespace

TEST_CASE("ds_bruteforce on the basic examples") {
    CHECK(ds_bruteforce(P("x1*x3", 3)) == Polynomial::constant(3, -2));
    CHECK(ds_bruteforce(P("x1", 3)).is_zero());
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> e(static_cast<std::size_t>(n), 1);
        e[0] = 0;
        CHECK(ds_bruteforce(oracle::mono(n, e)).constant_value() == Rational(n % 2 ? 1 : -1));
    }
}

TEST_CASE("ds_bruteforce above degree n-1 is symmetric") {
    const auto g = ds_bruteforce(P("x1^2*x2", 3));
    CHECK(is_symmetric(g));
    CHECK(g.degree() == 1);
    // Compare against the rational-function sum at a sample point.
    std::vector<Rational> pt{Rational(2), Rational(-1, 3), Rational(5, 7)};
    CHECK(evaluate(g, pt) == oracle::ds_at(P("x1^2*x2", 3), pt));
}

TEST_CASE("ds_bruteforce and the serial reference agree") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        const auto f = random_homogeneous(n, n, rng);
        CHECK(ds_bruteforce(f) == ds_bruteforce_serial(f));
    }
}

TEST_CASE("ds_monomial") {
    CHECK(ds_monomial(WeakComposition{{1, 0, 1}}) == -2);
    for (int n = 1; n <= 7; ++n)
        for (const auto& c : catalan_compositions(n)) {
            CHECK(ds_monomial(c) == 1);
            CHECK(ds_monomial(WeakComposition{{c.parts.rbegin(), c.parts.rend()}}) == (n % 2 ? 1 : -1));
        }
    for (int n = 2; n <= 5; ++n)
        for (const auto& c : weak_compositions(n - 1, n))
            CHECK(Rational(ds_monomial(c)) == oracle::ds(oracle::mono(n, c.parts)));
    CHECK_THROWS_AS(ds_monomial(WeakComposition{{1, 1, 1}}), PreconditionError);
}

TEST_CASE("ds_scalar") {
    for (int n = 2; n <= 6; ++n) {
        Polynomial e(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> x(static_cast<std::size_t>(n), 1);
            x[static_cast<std::size_t>(i)] = 0;
            e += oracle::mono(n, x);
        }
        CHECK(ds_scalar(e) == Rational(0));
        std::vector<int> top(static_cast<std::size_t>(n), 0);
        top[0] = n - 1;
        CHECK(ds_scalar(oracle::mono(n, top)) == Rational(1));
    }
    CHECK_THROWS_AS(ds_scalar(P("x1^2 + x2", 3)), PreconditionError);
    CHECK_THROWS_AS(ds_scalar(P("x1", 3)), PreconditionError);
}

TEST_CASE("divided_symmetrization dispatch") {
    const auto f = P("x1*x3 - 1/2*x2^2", 3);
    const auto fast = divided_symmetrization(f, DsMethod::fast);
    const auto slow = divided_symmetrization(f, DsMethod::oracle);
    CHECK(fast.value == slow.value);
    CHECK(divided_symmetrization(f).method_used == DsMethod::fast);
    CHECK(divided_symmetrization(P("x1^2*x2", 3)).method_used == DsMethod::oracle);
    CHECK_THROWS_AS(divided_symmetrization(P("x1^2*x2", 3), DsMethod::fast), PreconditionError);
}

TEST_CASE("symmetric factors vanish") {
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            const auto s = symmetrize(random_homogeneous(n, 1, rng));
            const auto g = random_homogeneous(n, n - 2, rng);
            CHECK(ds_scalar(s * g) == Rational(0));
        }
}

TEST_CASE("reversal, negation and shift transforms") {
    const auto f = P("x1*x3", 3);
    CHECK(ds_symmetry_transform(f, transform::Reverse{}) == f);
    CHECK(ds_symmetry_transform(f, transform::Negate{}) == f);
    CHECK(ds_symmetry_transform(P("5", 3), transform::Shift{Rational(2)}) == P("5", 3));
    CHECK(ds_symmetry_transform(P("x1", 2), transform::Shift{Rational(2)}) == P("x1 + 2", 2));
    CHECK(ds_scalar(ds_symmetry_transform(P("x1", 2), transform::Negate{})) == Rational(-1));
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const auto g = random_homogeneous(n, n - 1, rng);
            const Rational d = ds_scalar(g);
            CHECK(ds_scalar(ds_symmetry_transform(g, transform::Reverse{})) == (n % 2 ? d : -d));
            // x -> -x flips the numerator by (-1)^deg and leaves the scalar otherwise alone.
            CHECK(ds_scalar(ds_symmetry_transform(g, transform::Negate{})) == (n % 2 ? d : -d));
            // Translation: <f(x+c)>(p) = g(p+c), and g is a constant here.
            const auto shifted = ds_symmetry_transform(g, transform::Shift{Rational(3, 2)});
            CHECK(oracle::ds(shifted) == d);
        }
}

TEST_CASE("ds_factored") {
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i < n; ++i) {
            // f = X_{i+1} - X_i = (x_i - x_{i+1}) * prod_{j != i, i+1} x_j splits as g*(x_i - x_{i+1})*h.
            std::vector<int> ge(static_cast<std::size_t>(n), 0), he(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < i - 1; ++j) ge[static_cast<std::size_t>(j)] = 1;
            for (int j = i + 1; j < n; ++j) he[static_cast<std::size_t>(j)] = 1;
            const Rational want = ((n - i - 1) % 2 ? -1 : 1) * Rational(binomial(n, i));
            CHECK(ds_factored(oracle::mono(n, ge), oracle::mono(n, he), i) == want);
        }
    CHECK(ds_factored(P("1", 2), P("1", 2), 1) == Rational(2));
    CHECK(ds_factored(P("x1^2", 4), P("1", 4), 2) == Rational(0));
    CHECK_THROWS_AS(ds_factored(P("x1^2", 3), P("1", 3), 2), PreconditionError);
    CHECK_THROWS_AS(ds_factored(P("x3", 3), P("1", 3), 1), PreconditionError);
}

TEST_CASE("normalize_moves") {
    CHECK(normalize_moves(WeakComposition{{0, 3, 0, 0, 0, 1, 3, 0}}) == WeakComposition{{0, 2, 1, 0, 1, 1, 2, 0}});
    CHECK(normalize_moves(WeakComposition{{1, 1, 1, 0}}) == WeakComposition{{1, 1, 1, 0}});
    CHECK(normalize_moves(WeakComposition{{3, 0, 0, 0}}) == WeakComposition{{1, 1, 1, 0}});
    WeakComposition c{{0, 3, 0, 0, 0, 1, 3, 0}};
    CHECK(normalize_step(c));
    CHECK(c == WeakComposition{{0, 3, 0, 0, 0, 2, 2, 0}});
    CHECK(normalize_step(c));
    CHECK(c == WeakComposition{{0, 3, 0, 0, 1, 1, 2, 0}});
    CHECK(normalize_step(c));
    CHECK(c == WeakComposition{{0, 2, 1, 0, 1, 1, 2, 0}});
    CHECK_FALSE(normalize_step(c));
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : weak_compositions(n - 1, n)) {
            const auto out = normalize_moves(w);
            CHECK(s_set(out) == s_set(w));
            CHECK(ds_monomial(out) == ds_monomial(w));
        }
}

TEST_CASE("volume_permutahedron") {
    CHECK(volume_permutahedron(std::vector<Rational>{1, 0}) == Rational(1));
    CHECK(volume_permutahedron(std::vector<Rational>{2, 1, 0}) == Rational(3));
    CHECK(volume_permutahedron(std::vector<Rational>{5, 5}) == Rational(0));
    CHECK(volume_permutahedron(std::vector<Rational>{3, 2, 1, 0}) == Rational(16));
    CHECK_THROWS_AS(volume_permutahedron(std::vector<Rational>{0, 1}), PreconditionError);
    // Hexagon with vertex (a,b,c): area a^2... checked against the oracle sum.
    const std::vector<Rational> a{Rational(7, 2), 1, Rational(-1, 3)};
    Polynomial lin(3);
    for (int i = 0; i < 3; ++i) lin += scale(Polynomial::variable(3, i + 1), a[static_cast<std::size_t>(i)]);
    CHECK(volume_permutahedron(a) == oracle::ds(lin * lin) / 2);
}
