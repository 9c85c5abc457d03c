#pragma once

// Labeled posets, (P,omega)-partitions via their Jordan-Holder sets, edge-labeled
// posets and reduced words. Elements are indexed from 0.

#include "dsym/permutation.hpp"
#include "dsym/qsym.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace dsym {

inline constexpr int kDefaultPosetCap = 10;

class LabeledPoset {
public:
    /// covers are pairs (a,b) with a covered by b; omega[e] is the label of e in [size].
    LabeledPoset(int size, std::vector<std::pair<int, int>> covers, std::vector<int> omega);
    /// Accepts any acyclic relation list and keeps only its cover relations.
    static LabeledPoset from_relations(int size, const std::vector<std::pair<int, int>>& relations,
                                       std::vector<int> omega);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& omega() const { return omega_; }
    /// a <= b in P.
    bool leq(int a, int b) const;

private:
    int size_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> omega_;
    std::vector<std::vector<bool>> below_;  // below_[b][a]: a <= b
};

/// Antichain and chain helpers; the chain is 0 < 1 < ... with omega(e) = e+1.
LabeledPoset antichain_poset(int size);
LabeledPoset chain_poset(int size);

/// Young diagram of lambda, cell (r,c) below (r+1,c) and (r,c+1); labels run
/// along rows from the bottom row up, left to right.
LabeledPoset young_diagram_poset(const Composition& lambda);

/// Permutations pi of [size] such that e -> position of omega(e) in pi is a
/// linear extension; sorted lexicographically.
std::vector<Permutation> linear_extensions(const LabeledPoset& p, int cap = kDefaultPosetCap);

/// Entry d counts permutations with exactly d descents; length max(k,1).
std::vector<long long> descent_histogram(const std::vector<Permutation>& perms, int k);

/// K_{P,omega} = sum over the Jordan-Holder set of F_{comp(pi)}.
QSymExpansion kpw_expansion(const LabeledPoset& p, int cap = kDefaultPosetCap);

/// Number of extensions with m-1 descents; requires |P| = n-1 and 1 <= m <= n.
Rational ds_kpw(const LabeledPoset& p, int m, int n, int cap = kDefaultPosetCap);

/// Descent histogram of the standard Young tableaux of shape lambda.
std::vector<long long> syt_descent_histogram(const Composition& lambda, int cap = kDefaultPosetCap);

struct LabeledEdge {
    int from;
    int to;
    int label;
};

class EdgeLabeledPoset {
public:
    EdgeLabeledPoset(int size, std::vector<LabeledEdge> edges);

    int size() const { return size_; }
    int rank() const { return rank_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }
    const std::vector<std::vector<LabeledEdge>>& out_edges() const { return out_; }

private:
    int size_;
    std::vector<LabeledEdge> edges_;
    std::vector<std::vector<LabeledEdge>> out_;
    int bottom_ = 0;
    int top_ = 0;
    int rank_ = 0;
};

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// Label words of the maximal chains read bottom to top, sorted.
std::vector<std::vector<int>> maximal_chain_words(const EdgeLabeledPoset& p,
                                                  std::size_t cap = kDefaultChainCap);

/// Descent histogram of integer words; length max(k,1) for words of length k.
std::vector<long long> word_descent_histogram(const std::vector<std::vector<int>>& words, int k);

/// F_P = sum over maximal chains of F_{comp(rho)}.
QSymExpansion edge_labeled_expansion(const EdgeLabeledPoset& p);

/// Number of chain words with m-1 descents; requires rank = n-1.
Rational ds_edge_labeled(const EdgeLabeledPoset& p, int m, int n);

/// The interval [e,w] of the right weak order, cover u < u s_i labeled i.
EdgeLabeledPoset weak_order_interval(std::span<const int> w, int cap = kDefaultPosetCap);

/// Reduced words of w (s_{a_1} ... s_{a_k} = w), sorted.
std::vector<std::vector<int>> reduced_words(std::span<const int> w, int cap = kDefaultPosetCap);

/// Reduced words of w with m-1 descents; requires inv(w) = n-1.
Rational ds_stanley(std::span<const int> w, int m, int n, int cap = kDefaultPosetCap);

/// {"elements":k,"covers":[[a,b],...],"omega":[...]}
LabeledPoset labeled_poset_from_json(std::string_view text);
/// {"elements":k,"labels":[[a,b,l],...]}; "covers" may be present and must agree.
EdgeLabeledPoset edge_labeled_poset_from_json(std::string_view text);

} // namespace dsym
