#include "doctest.h"

#include "dsym/divsym.hpp"
#include "dsym/posets.hpp"
#include "dsym/qsym.hpp"
#include "oracle.hpp"

#include <map>
#include <random>

using namespace dsym;

namespace {

long hook_count(const Composition& lambda) {
    const int k = lambda.size();
    std::vector<int> conj;
    for (int c = 0; c < lambda[0]; ++c) {
        int h = 0;
        for (int r = 0; r < lambda.length(); ++r) h += lambda[r] > c;
        conj.push_back(h);
    }
    long num = 1, den = 1;
    for (int i = 2; i <= k; ++i) num *= i;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) den *= (lambda[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
    return num / den;
}

Composition conjugate(const Composition& lambda) {
    std::vector<int> out;
    for (int c = 0; c < lambda[0]; ++c) {
        int h = 0;
        for (int r = 0; r < lambda.length(); ++r) h += lambda[r] > c;
        out.push_back(h);
    }
    return Composition(out);
}

} // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(LabeledPoset(2, {{0, 1}, {1, 0}}, {1, 2}), PreconditionError);
    CHECK_THROWS_AS(LabeledPoset(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(LabeledPoset(2, {}, {1, 1}), PreconditionError);
    CHECK_THROWS_AS(LabeledPoset(2, {{0, 5}}, {1, 2}), PreconditionError);
    const auto p = LabeledPoset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 2, 3});
    CHECK(p.covers().size() == 2);
    CHECK(p.leq(0, 2));
    CHECK_FALSE(p.leq(2, 0));
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(antichain_poset(3)).size() == 6);
    CHECK(linear_extensions(chain_poset(4)) == std::vector<Permutation>{{1, 2, 3, 4}});
    CHECK(linear_extensions(young_diagram_poset(Composition{2, 1})) == std::vector<Permutation>{{2, 1, 3}, {2, 3, 1}});
    CHECK_THROWS_AS(linear_extensions(antichain_poset(11)), PreconditionError);
}

TEST_CASE("descent histograms") {
    CHECK(descent_histogram({{1, 2, 3}}, 3) == std::vector<long long>{1, 0, 0});
    std::vector<Permutation> s3;
    for (const auto& w : Permutations(3)) s3.push_back(w);
    CHECK(descent_histogram(s3, 3) == std::vector<long long>{1, 4, 1});
    CHECK(syt_descent_histogram(Composition{2, 1}) == std::vector<long long>{0, 2, 0});
    CHECK(syt_descent_histogram(Composition{4}) == std::vector<long long>{1, 0, 0, 0});
    CHECK(syt_descent_histogram(Composition{1, 1, 1, 1}) == std::vector<long long>{0, 0, 0, 1});
    CHECK(syt_descent_histogram(Composition{3, 2}) == std::vector<long long>{0, 2, 3, 0, 0});
    CHECK(syt_descent_histogram(Composition{2, 2, 1}) == std::vector<long long>{0, 0, 3, 2, 0});
    for (int k = 1; k <= 6; ++k)
        for (const auto& lambda : partitions(k)) {
            const auto h = syt_descent_histogram(lambda);
            long total = 0;
            for (auto x : h) total += x;
            CHECK(total == hook_count(lambda));
            auto rev = syt_descent_histogram(conjugate(lambda));
            std::reverse(rev.begin(), rev.end());
            CHECK(std::vector<long long>(h.begin(), h.begin() + k) == std::vector<long long>(rev.end() - k, rev.end()));
        }
}

TEST_CASE("kpw expansions") {
    CHECK(kpw_expansion(chain_poset(3)) == QSymExpansion::single(Basis::F, Composition{3}));
    QSymExpansion p21(Basis::F, 3);
    p21.add(Composition{1, 2}, 1);
    p21.add(Composition{2, 1}, 1);
    CHECK(kpw_expansion(young_diagram_poset(Composition{2, 1})) == p21);
    QSymExpansion anti(Basis::F, 2);
    anti.add(Composition{2}, 1);
    anti.add(Composition{1, 1}, 1);
    CHECK(kpw_expansion(antichain_poset(2)) == anti);
}

TEST_CASE("ds_kpw") {
    CHECK(ds_kpw(chain_poset(3), 1, 4) == Rational(1));
    CHECK(ds_kpw(young_diagram_poset(Composition{2, 1}), 2, 4) == Rational(2));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (rng() % 2) rel.emplace_back(i, j);
        std::vector<int> omega(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) omega[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(omega.begin(), omega.end(), rng);
        const auto p = LabeledPoset::from_relations(k, rel, omega);
        const int n = k + 1;
        Rational total = 0;
        for (int m = 1; m <= n; ++m) {
            const Rational v = ds_kpw(p, m, n);
            total += v;
            CHECK(v == ds_qsym(kpw_expansion(p), m, n));
            CHECK(v == ds_bruteforce(to_polynomial(kpw_expansion(p), m, n)).constant_value());
        }
        CHECK(ds_kpw(p, n, n) == Rational(0));
        CHECK(total == Rational(static_cast<long>(linear_extensions(p).size())));
    }
    CHECK_THROWS_AS(ds_kpw(chain_poset(3), 1, 5), PreconditionError);
}

TEST_CASE("edge-labeled posets") {
    const EdgeLabeledPoset chain(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}});
    CHECK(maximal_chain_words(chain) == std::vector<std::vector<int>>{{3, 1, 2}});
    CHECK(ds_edge_labeled(chain, 2, 4) == Rational(1));
    const EdgeLabeledPoset diamond(4, {{0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 1}});
    CHECK(maximal_chain_words(diamond) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
    CHECK(ds_edge_labeled(diamond, 1, 3) == Rational(1));
    CHECK(ds_edge_labeled(diamond, 2, 3) == Rational(1));
    CHECK_THROWS_AS(EdgeLabeledPoset(3, {{0, 1, 1}, {0, 2, 1}}), PreconditionError);
    CHECK_THROWS_AS(EdgeLabeledPoset(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 1, 1}, {2, 3, 1}}), PreconditionError);
}

TEST_CASE("reduced words and Stanley symmetric functions") {
    CHECK(reduced_words(std::vector<int>{1, 2, 3}) == std::vector<std::vector<int>>{{}});
    CHECK(reduced_words(std::vector<int>{1, 3, 2}) == std::vector<std::vector<int>>{{2}});
    CHECK(reduced_words(std::vector<int>{3, 2, 1}) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
    CHECK(ds_stanley(std::vector<int>{2, 1}, 1, 2) == Rational(1));
    CHECK(ds_stanley(std::vector<int>{3, 2, 1}, 2, 4) == Rational(2));
    CHECK(ds_stanley(std::vector<int>{3, 2, 1}, 4, 4) == Rational(0));
    // Every reduced word multiplies back to w.
    for (const auto& w : Permutations(4))
        for (const auto& word : reduced_words(w)) {
            std::vector<int> u{1, 2, 3, 4};
            for (int i : word) std::swap(u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(i)]);
            CHECK(u == w);
            CHECK(static_cast<int>(word.size()) == inversions(w));
        }
}

TEST_CASE("poset JSON") {
    const auto p = labeled_poset_from_json(R"({"elements":3,"covers":[[0,1],[1,2]],"omega":[1,2,3]})");
    CHECK(linear_extensions(p).size() == 1);
    CHECK(labeled_poset_from_json(R"({"elements":2})").omega() == std::vector<int>{1, 2});
    const auto e = edge_labeled_poset_from_json(R"({"elements":4,"labels":[[0,1,1],[0,2,2],[1,3,2],[2,3,1]]})");
    CHECK(maximal_chain_words(e).size() == 2);
    CHECK_THROWS_AS(labeled_poset_from_json("{"), ParseError);
    CHECK_THROWS_AS(labeled_poset_from_json(R"({"covers":[]})"), ParseError);
    CHECK_THROWS_AS(edge_labeled_poset_from_json(R"({"elements":2,"labels":[[0,1,1]],"covers":[[1,0]]})"), PreconditionError);
}
