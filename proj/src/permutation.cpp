#include "dsym/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace dsym {

void validate_permutation(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw PreconditionError("not a permutation of [" + std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

int permutation_sign(std::span<const int> w) {
    return inversions(w) % 2 == 0 ? 1 : -1;
}

int inversions(std::span<const int> w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw PreconditionError("factorial_u64 out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
    if (rank >= factorial_u64(n)) throw PreconditionError("permutation rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    Permutation w;
    w.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial_u64(i - 1);
        const auto idx = static_cast<std::ptrdiff_t>(rank / block);
        rank %= block;
        w.push_back(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + idx);
    }
    return w;
}

Permutation identity_permutation(int n) {
    Permutation w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Permutation compose(std::span<const int> v, std::span<const int> u) {
    if (v.size() != u.size()) throw PreconditionError("compose: size mismatch");
    Permutation r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = v[static_cast<std::size_t>(u[i] - 1)];
    return r;
}

Permutations::iterator::iterator(int n) : w_(identity_permutation(n)), done_(n < 0) {}

Permutations::iterator& Permutations::iterator::operator++() {
    if (!std::next_permutation(w_.begin(), w_.end())) {
        done_ = true;
        w_.clear();
    }
    return *this;
}

} // namespace dsym
