#pragma once

#include "dsym/polynomial.hpp"

#include <cstdint>
#include <span>

namespace dsym {

/// Throws PreconditionError unless w is a bijection on [w.size()] in one-line form.
void validate_permutation(std::span<const int> w);

/// +1 or -1.
int permutation_sign(std::span<const int> w);

/// The rank-th permutation of [n] in lexicographic order, rank < n!.
Permutation unrank_permutation(int n, std::uint64_t rank);

/// n! as a machine integer; n must be at most 20.
std::uint64_t factorial_u64(int n);

Permutation identity_permutation(int n);

/// (v o u)(i) = v(u(i)).
Permutation compose(std::span<const int> v, std::span<const int> u);

/// Number of inversions (Coxeter length).
int inversions(std::span<const int> w);

/// Forward range over all of S_n in lexicographic order.
class Permutations {
public:
    explicit Permutations(int n) : n_(n) {}

    class iterator {
    public:
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(int n);

        const Permutation& operator*() const { return w_; }
        const Permutation* operator->() const { return &w_; }
        iterator& operator++();
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || w_ == o.w_); }

    private:
        Permutation w_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return {}; }

private:
    int n_;
};

} // namespace dsym
