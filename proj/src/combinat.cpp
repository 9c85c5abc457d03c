#include "dsym/combinat.hpp"

#include "dsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dsym {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw PreconditionError("composition parts must be positive");
        size_ += p;
    }
}

int WeakComposition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Composition WeakComposition::positive_part() const {
    std::vector<int> out;
    for (int p : parts)
        if (p > 0) out.push_back(p);
    return Composition(std::move(out));
}

DescentSet::DescentSet(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw PreconditionError("descent set has repeated elements");
    for (int e : elements_)
        if (e < 1 || e > n - 1)
            throw PreconditionError("descent set element " + std::to_string(e) + " outside [" +
                                    std::to_string(n - 1) + "]");
}

bool DescentSet::contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
}

DescentSet set_of(const Composition& alpha) {
    std::vector<int> s;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha[i];
        s.push_back(acc);
    }
    return DescentSet(alpha.size(), std::move(s));
}

Composition comp_of(const std::vector<int>& elements, int k) {
    return comp_of(DescentSet(k, elements));
}

Composition comp_of(const DescentSet& s) {
    const int k = s.ambient();
    if (k == 0) return {};
    std::vector<int> parts;
    int prev = 0;
    for (int e : s.elements()) {
        parts.push_back(e - prev);
        prev = e;
    }
    parts.push_back(k - prev);
    return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw PreconditionError("refines: size mismatch");
    const auto a = set_of(alpha);
    const auto b = set_of(beta);
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                         a.elements().end());
}

std::vector<int> psums(const WeakComposition& c) {
    std::vector<int> out;
    out.reserve(c.parts.size());
    int acc = 0;
    for (int p : c.parts) {
        acc += p - 1;
        out.push_back(acc);
    }
    return out;
}

DescentSet s_set(const WeakComposition& c) {
    const int n = c.length();
    if (c.size() != n - 1)
        throw PreconditionError("s_set: weak composition " + to_string(c) + " must have size n-1 = " +
                                std::to_string(n - 1));
    const auto ps = psums(c);
    std::vector<int> s;
    for (int k = 1; k <= n - 1; ++k)
        if (ps[static_cast<std::size_t>(k - 1)] < 0) s.push_back(k);
    return DescentSet(n, std::move(s));
}

BigInt beta(int n, const DescentSet& s) {
    if (s.ambient() != n) throw PreconditionError("beta: descent set ambient differs from n");
    const auto& elems = s.elements();
    const std::size_t m = elems.size();
    if (m > 30) throw PreconditionError("beta: descent set too large for inclusion-exclusion");
    // count(des(w) subset of T) = multinomial(n; comp(T)).
    BigInt total = 0;
    const BigInt nfact = factorial(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        BigInt count = nfact;
        int prev = 0;
        int chosen = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            count /= factorial(elems[j] - prev);
            prev = elems[j];
            ++chosen;
        }
        count /= factorial(n - prev);
        if ((m - static_cast<std::size_t>(chosen)) % 2 == 0)
            total += count;
        else
            total -= count;
    }
    return total;
}

BigInt beta_by_enumeration(int n, const DescentSet& s) {
    if (n > 10) throw PreconditionError("beta_by_enumeration: n too large");
    if (s.ambient() != n) throw PreconditionError("beta: descent set ambient differs from n");
    long count = 0;
    for (const auto& w : Permutations(n))
        if (descent_set(w) == s) ++count;
    return count;
}

BigInt eulerian(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw PreconditionError("eulerian: index out of range");
    // A(n,i) = sum_{j=0}^{i} (-1)^j C(n+1, j) (i-j)^n
    BigInt total = 0;
    for (int j = 0; j <= i; ++j) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i - j), static_cast<unsigned long>(n));
        BigInt term = binomial(n + 1, j) * power;
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

namespace {

void catalan_rec(int n, int pos, int prefix, std::vector<int>& cur, std::vector<WeakComposition>& out) {
    const int remaining = (n - 1) - prefix;
    if (pos == n - 1) {
        // Last part is forced.
        cur.push_back(remaining);
        out.push_back({cur});
        cur.pop_back();
        return;
    }
    // psum_{pos+1} = prefix + c - (pos+1) >= 0
    const int lo = std::max(0, pos + 1 - prefix);
    for (int c = remaining; c >= lo; --c) {
        cur.push_back(c);
        catalan_rec(n, pos + 1, prefix + c, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<WeakComposition> catalan_compositions(int n) {
    if (n < 1) throw PreconditionError("catalan_compositions: n must be positive");
    std::vector<WeakComposition> out;
    if (n == 1) {
        out.push_back({{0}});
        return out;
    }
    std::vector<int> cur;
    catalan_rec(n, 0, 0, cur, out);
    return out;
}

bool is_catalan(const WeakComposition& c) {
    const int n = c.length();
    if (c.size() != n - 1) return false;
    const auto ps = psums(c);
    for (int k = 0; k + 1 < n; ++k)
        if (ps[static_cast<std::size_t>(k)] < 0) return false;
    return true;
}

bool is_anti_catalan(const WeakComposition& c) {
    WeakComposition r{std::vector<int>(c.parts.rbegin(), c.parts.rend())};
    return is_catalan(r);
}

BigInt catalan_number(int k) {
    if (k < 0) throw PreconditionError("catalan_number: negative index");
    return binomial(2 * k, k) / (k + 1);
}

DescentSet descent_set(std::span<const int> w) {
    validate_permutation(w);
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return DescentSet(static_cast<int>(w.size()), std::move(d));
}

namespace {

void weak_rec(int k, int n, std::vector<int>& cur, std::vector<WeakComposition>& out) {
    if (n == 1) {
        cur.push_back(k);
        out.push_back({cur});
        cur.pop_back();
        return;
    }
    for (int c = k; c >= 0; --c) {
        cur.push_back(c);
        weak_rec(k - c, n - 1, cur, out);
        cur.pop_back();
    }
}

void partitions_rec(int k, int max_part, std::vector<int>& cur, std::vector<Composition>& out) {
    if (k == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(k - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<WeakComposition> weak_compositions(int k, int n) {
    if (k < 0 || n < 0) throw PreconditionError("weak_compositions: negative argument");
    std::vector<WeakComposition> out;
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    weak_rec(k, n, cur, out);
    return out;
}

std::vector<Composition> compositions(int k) {
    if (k < 0) throw PreconditionError("compositions: negative size");
    std::vector<Composition> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        std::vector<int> s;
        for (int i = 1; i < k; ++i)
            if (mask >> (i - 1) & 1) s.push_back(i);
        out.push_back(comp_of(s, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> partitions(int k) {
    std::vector<Composition> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
    const int k = alpha.size();
    if (k == 0) return {alpha};
    const auto base = set_of(alpha);
    std::vector<int> free;
    for (int i = 1; i < k; ++i)
        if (!base.contains(i)) free.push_back(i);
    std::vector<Composition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<int> s = base.elements();
        for (std::size_t j = 0; j < free.size(); ++j)
            if (mask >> j & 1) s.push_back(free[j]);
        out.push_back(comp_of(s, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ']';
}

} // namespace

std::string to_string(const Composition& alpha) { return bracket_list(alpha.parts()); }
std::string to_string(const WeakComposition& c) { return bracket_list(c.parts); }
std::string to_string(const DescentSet& s) { return bracket_list(s.elements()); }

Composition parse_composition(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool bracketed = false;
    if (i < text.size() && text[i] == '[') {
        bracketed = true;
        ++i;
    }
    std::vector<int> parts;
    skip();
    while (i < text.size() && text[i] != ']') {
        if (!parts.empty()) {
            if (text[i] != ',') throw ParseError("expected ','", i);
            ++i;
            skip();
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected a positive integer", i);
        if (i - start > 6) throw ParseError("part too large", start);
        const int v = std::stoi(std::string(text.substr(start, i - start)));
        if (v < 1) throw ParseError("composition parts must be positive", start);
        parts.push_back(v);
        skip();
    }
    if (bracketed) {
        if (i >= text.size()) throw ParseError("missing ']'", i);
        ++i;
        skip();
    }
    if (i != text.size()) throw ParseError("trailing characters", i);
    return Composition(std::move(parts));
}

} // namespace dsym
