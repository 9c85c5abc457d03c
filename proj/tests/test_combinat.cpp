#include "doctest.h"

#include "dsym/combinat.hpp"
#include "oracle.hpp"

#include <set>

using namespace dsym;

TEST_CASE("set_of and comp_of") {
    CHECK(set_of(Composition{1, 3, 2, 2}).elements() == std::vector<int>{1, 4, 6});
    CHECK(comp_of(std::vector<int>{}, 5) == Composition{5});
    CHECK(comp_of(std::vector<int>{1, 2, 3}, 4) == Composition{1, 1, 1, 1});
    for (int k = 1; k <= 7; ++k)
        for (const auto& a : compositions(k)) CHECK(comp_of(set_of(a)) == a);
}

TEST_CASE("refinement") {
    CHECK(refines(Composition{1, 3, 2, 2}, Composition{1, 2, 1, 1, 1, 2}));
    CHECK(refines(Composition{2, 1}, Composition{2, 1}));
    CHECK_FALSE(refines(Composition{2, 1}, Composition{1, 2}));
    CHECK(refinements(Composition{3}).size() == 4);
}

TEST_CASE("psums and s_set") {
    const WeakComposition c{{0, 3, 0, 0, 0, 1, 3, 0}};
    CHECK(psums(c) == std::vector<int>{-1, 1, 0, -1, -2, -2, 0, -1});
    CHECK(s_set(c).elements() == std::vector<int>{1, 4, 5, 6});
    CHECK(psums(WeakComposition{{2, 0, 0}}) == std::vector<int>{1, 0, -1});
    CHECK(psums(WeakComposition{{1, 1, 1}}) == std::vector<int>{0, 0, 0});
    // psums of (0,1,1) are (-1,-1,-1), so both proper prefixes are negative.
    CHECK(s_set(WeakComposition{{0, 1, 1}}).elements() == std::vector<int>{1, 2});
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : weak_compositions(n - 1, n)) {
            CHECK(s_set(w).elements() == oracle::s_set(w.parts));
            CHECK(s_set(w).elements().empty() == is_catalan(w));
            CHECK((s_set(w).cardinality() == n - 1) == is_anti_catalan(w));
        }
}

TEST_CASE("beta") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n - 1; ++i)
                if (mask >> i & 1) s.push_back(i + 1);
            const DescentSet d(n, s);
            const BigInt b = beta(n, d);
            CHECK(b == beta_by_enumeration(n, d));
            if (n <= 7) CHECK(b == BigInt(oracle::beta(n, s)));
            total += b;
        }
        CHECK(total == factorial(n));
    }
    for (int n = 2; n <= 7; ++n)
        for (int i = 1; i <= n; ++i) {
            std::vector<int> s;
            for (int j = 1; j < i; ++j) s.push_back(j);
            CHECK(beta(n, DescentSet(n, s)) == binomial(n - 1, i - 1));
        }
    CHECK(beta(5, DescentSet(5, {})) == 1);
    CHECK(beta(3, DescentSet(3, {2})) == 2);
    CHECK_THROWS_AS(DescentSet(3, {3}), PreconditionError);
}

TEST_CASE("eulerian numbers") {
    CHECK(eulerian(5, 1) == 1);
    CHECK(eulerian(3, 2) == 4);
    BigInt sum = 0;
    for (int i = 1; i <= 4; ++i) sum += eulerian(4, i);
    CHECK(sum == 24);
    CHECK_THROWS_AS(eulerian(3, 4), PreconditionError);
}

TEST_CASE("catalan compositions") {
    const auto c4 = catalan_compositions(4);
    const std::set<std::vector<int>> got = [&] {
        std::set<std::vector<int>> s;
        for (const auto& c : c4) s.insert(c.parts);
        return s;
    }();
    CHECK(got == std::set<std::vector<int>>{{3, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {1, 2, 0, 0}, {1, 1, 1, 0}});
    CHECK(catalan_compositions(5).size() == 14);
    CHECK(catalan_compositions(1).size() == 1);
    const bool lex = std::is_sorted(c4.begin(), c4.end(), [](const auto& a, const auto& b) { return a.parts > b.parts; }) ||
                     std::is_sorted(c4.begin(), c4.end());
    CHECK(lex);
    for (int n = 1; n <= 12; ++n) CHECK(BigInt(static_cast<long>(catalan_compositions(n).size())) == catalan_number(n - 1));
}

TEST_CASE("descent sets") {
    CHECK(descent_set(std::vector<int>{3, 4, 1, 2}).elements() == std::vector<int>{2});
    CHECK(descent_set(std::vector<int>{1, 2, 3}).elements().empty());
}

TEST_CASE("enumeration and parsing") {
    CHECK(compositions(4).size() == 8);
    CHECK(partitions(5).size() == 7);
    CHECK(weak_compositions(2, 3).size() == 6);
    CHECK(parse_composition("[1,3,2,2]") == Composition{1, 3, 2, 2});
    CHECK(parse_composition("2,1") == Composition{2, 1});
    CHECK(to_string(Composition{1, 3, 2, 2}) == "[1,3,2,2]");
    CHECK_THROWS_AS(parse_composition("1,,2"), ParseError);
    CHECK_THROWS(parse_composition("1,0"));
}
