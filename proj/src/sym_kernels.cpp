#include "dsym/kernels.hpp"

#include "dsym/permutation.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsym {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

// Adds sum_{w in block} sign(w)^signed * w.f into acc, where the block is the
// lexicographic rank range [first, last).
void accumulate_block(const Polynomial& f, bool signed_sum, std::uint64_t first,
                      std::uint64_t last, Accumulator& acc) {
    const int n = f.ambient();
    Permutation w = unrank_permutation(n, first);
    for (std::uint64_t r = first; r < last; ++r) {
        const bool negate = signed_sum && permutation_sign(w) < 0;
        for (const auto& t : f.terms()) {
            auto& slot = acc[t.mono.permuted(w)];
            if (negate)
                slot -= t.coeff;
            else
                slot += t.coeff;
        }
        std::next_permutation(w.begin(), w.end());
    }
}

Polynomial finish(int n, Accumulator&& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, std::move(c)});
    return Polynomial::from_terms(n, std::move(terms));
}

Polynomial sum_serial(const Polynomial& f, bool signed_sum) {
    const int n = f.ambient();
    if (f.is_zero()) return f;
    Accumulator acc;
    acc.reserve(f.size() * 8);
    accumulate_block(f, signed_sum, 0, factorial_u64(n), acc);
    return finish(n, std::move(acc));
}

Polynomial sum_parallel(const Polynomial& f, bool signed_sum) {
    const int n = f.ambient();
    if (f.is_zero()) return f;
    const std::uint64_t total = factorial_u64(n);
    const int blocks = kernels::block_count(n);
    std::vector<Accumulator> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic, 1)
    for (int b = 0; b < blocks; ++b) {
        const std::uint64_t first = total * static_cast<std::uint64_t>(b) / static_cast<std::uint64_t>(blocks);
        const std::uint64_t last = total * static_cast<std::uint64_t>(b + 1) / static_cast<std::uint64_t>(blocks);
        accumulate_block(f, signed_sum, first, last, partial[static_cast<std::size_t>(b)]);
    }

    // Blocks merge in index order.
    Accumulator acc = std::move(partial.front());
    for (std::size_t b = 1; b < partial.size(); ++b) {
        for (auto& [m, c] : partial[b]) acc[m] += c;
        Accumulator().swap(partial[b]);
    }
    return finish(n, std::move(acc));
}

} // namespace

namespace kernels {

int available_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int block_count(int n) {
    const std::uint64_t total = factorial_u64(n);
    const auto wanted = static_cast<std::uint64_t>(4 * available_threads());
    return static_cast<int>(std::min(total, wanted));
}

Polynomial symmetrize_serial(const Polynomial& f) { return sum_serial(f, false); }
Polynomial symmetrize_parallel(const Polynomial& f) { return sum_parallel(f, false); }
Polynomial antisymmetrize_serial(const Polynomial& f) { return sum_serial(f, true); }
Polynomial antisymmetrize_parallel(const Polynomial& f) { return sum_parallel(f, true); }

} // namespace kernels

namespace {

bool use_parallel(const Polynomial& f) {
    return f.ambient() >= kernels::kParallelThreshold && kernels::available_threads() > 1;
}

} // namespace

Polynomial symmetrize(const Polynomial& f) {
    return use_parallel(f) ? kernels::symmetrize_parallel(f) : kernels::symmetrize_serial(f);
}

Polynomial antisymmetrize(const Polynomial& f) {
    return use_parallel(f) ? kernels::antisymmetrize_parallel(f) : kernels::antisymmetrize_serial(f);
}

} // namespace dsym
