#include "doctest.h"

#include "dsym/divsym.hpp"
#include "dsym/kernels.hpp"
#include "oracle.hpp"

#include <omp.h>
#include <random>

using namespace dsym;
using namespace dsym::kernels;

namespace {

Polynomial random_poly(int n, int d, std::mt19937_64& rng) {
    Polynomial f(n);
    for (const auto& c : oracle::weak(d, n))
        if (rng() % 3 == 0) f += oracle::mono(n, c, Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 5)));
    return f;
}

// Runs body with the OpenMP team size forced to k, then restores it.
template <typename F>
void with_threads(int k, F&& body) {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(k);
    body();
    omp_set_num_threads(saved);
}

} // namespace

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(2024);
    for (int threads : {1, 2, 4, 7})
        with_threads(threads, [&] {
            for (int n = 1; n <= 6; ++n)
                for (int trial = 0; trial < 3; ++trial) {
                    const auto f = random_poly(n, n, rng);
                    CHECK(symmetrize_parallel(f) == symmetrize_serial(f));
                    CHECK(antisymmetrize_parallel(f) == antisymmetrize_serial(f));
                }
        });
}

TEST_CASE("parallel brute force matches the serial reference") {
    std::mt19937_64 rng(77);
    with_threads(4, [&] {
        for (int n = 2; n <= 5; ++n) {
            const auto f = random_poly(n, n - 1, rng);
            CHECK(ds_bruteforce(f) == ds_bruteforce_serial(f));
        }
        const auto g = random_poly(6, 5, rng);
        CHECK(ds_bruteforce(g) == ds_bruteforce_serial(g));
    });
}

TEST_CASE("block counts") {
    with_threads(1, [] {
        CHECK(available_threads() == 1);
        CHECK(block_count(2) == 2);
        CHECK(block_count(6) == 4);
    });
    with_threads(4, [] { CHECK(block_count(6) == 16); });
}

TEST_CASE("zero and constant inputs") {
    with_threads(3, [] {
        CHECK(antisymmetrize_parallel(Polynomial(4)).is_zero());
        CHECK(symmetrize_parallel(Polynomial::constant(4, 1)) == Polynomial::constant(4, 24));
        CHECK(antisymmetrize_parallel(Polynomial::constant(3, 1)).is_zero());
    });
}
