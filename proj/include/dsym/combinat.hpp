#pragma once

// Compositions, descent sets, descent-class counts and Catalan compositions.

#include "dsym/polynomial.hpp"
#include "dsym/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace dsym {

/// Sequence of positive parts. The empty composition (of 0) is allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Nonnegative parts; the length is the ambient n.
struct WeakComposition {
    std::vector<int> parts;

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// The composition obtained by dropping zero parts.
    Composition positive_part() const;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;
};

/// A subset of [n-1], stored sorted, together with n.
class DescentSet {
public:
    DescentSet() = default;
    DescentSet(int n, std::vector<int> elements);

    int ambient() const { return n_; }
    const std::vector<int>& elements() const { return elements_; }
    int cardinality() const { return static_cast<int>(elements_.size()); }
    bool contains(int i) const;

    friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
    int n_ = 0;
    std::vector<int> elements_;
};

/// {a1, a1+a2, ...} inside [|alpha|-1].
DescentSet set_of(const Composition& alpha);
/// Inverse of set_of; k is the size of the resulting composition.
Composition comp_of(const DescentSet& s);
Composition comp_of(const std::vector<int>& elements, int k);

/// True iff beta refines alpha, i.e. set(alpha) is contained in set(beta).
bool refines(const Composition& alpha, const Composition& beta);

/// psum_k(c) = sum_{i<=k} (c_i - 1) for k = 1..n.
std::vector<int> psums(const WeakComposition& c);

/// {k in [n-1] : psum_k(c) < 0}; requires |c| = n-1.
DescentSet s_set(const WeakComposition& c);

/// Number of permutations of [n] with descent set exactly S, by
/// inclusion-exclusion over multinomial counts.
BigInt beta(int n, const DescentSet& s);
/// Same count by enumerating S_n; n <= 10.
BigInt beta_by_enumeration(int n, const DescentSet& s);

/// Permutations of [n] with i-1 descents, 1 <= i <= n.
BigInt eulerian(int n, int i);

/// Weak compositions of n-1 with n parts whose proper prefix psums are >= 0,
/// in lexicographic order (largest first part first).
std::vector<WeakComposition> catalan_compositions(int n);
bool is_catalan(const WeakComposition& c);
/// Image of a Catalan composition under x_i -> x_{n+1-i}.
bool is_anti_catalan(const WeakComposition& c);

BigInt catalan_number(int k);

DescentSet descent_set(std::span<const int> w);

/// All weak compositions of k with n parts, lexicographically descending.
std::vector<WeakComposition> weak_compositions(int k, int n);
/// All compositions of k, in lexicographic order.
std::vector<Composition> compositions(int k);
/// All partitions of k, weakly decreasing parts.
std::vector<Composition> partitions(int k);
/// All compositions beta with alpha <= beta in refinement order.
std::vector<Composition> refinements(const Composition& alpha);

std::string to_string(const Composition& alpha);
std::string to_string(const WeakComposition& c);
std::string to_string(const DescentSet& s);
/// Accepts "1,3,2,2" or "[1,3,2,2]"; "[]" and "" give the empty composition.
Composition parse_composition(std::string_view text);

} // namespace dsym
