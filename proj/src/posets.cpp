#include "dsym/posets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace dsym {

namespace {

// Transitive closure of an edge list on k nodes; throws on a cycle.
std::vector<std::vector<bool>> closure(int k, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> below(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) below[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [a, b] : edges) below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    for (int m = 0; m < k; ++m)
        for (int b = 0; b < k; ++b)
            if (below[static_cast<std::size_t>(b)][static_cast<std::size_t>(m)])
                for (int a = 0; a < k; ++a)
                    if (below[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)])
                        below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    for (auto [a, b] : edges)
        if (below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
            throw PreconditionError("poset relations contain a cycle");
    return below;
}

void check_index(int e, int k) {
    if (e < 0 || e >= k)
        throw PreconditionError("poset element " + std::to_string(e) + " outside 0.." + std::to_string(k - 1));
}

} // namespace

LabeledPoset::LabeledPoset(int size, std::vector<std::pair<int, int>> covers, std::vector<int> omega)
    : size_(size), covers_(std::move(covers)), omega_(std::move(omega)) {
    if (size_ < 0) throw PreconditionError("poset size must be nonnegative");
    for (auto [a, b] : covers_) {
        check_index(a, size_);
        check_index(b, size_);
        if (a == b) throw PreconditionError("poset relations contain a cycle");
    }
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
        throw PreconditionError("repeated cover relation");
    below_ = closure(size_, covers_);
    // a < b is a cover only if no c sits strictly between.
    for (auto [a, b] : covers_)
        for (int c = 0; c < size_; ++c)
            if (c != a && c != b && leq(a, c) && leq(c, b))
                throw PreconditionError("cover relations are not transitively reduced: (" + std::to_string(a) +
                                        "," + std::to_string(b) + ") passes through " + std::to_string(c));
    if (static_cast<int>(omega_.size()) != size_) throw PreconditionError("labeling must have one label per element");
    std::vector<int> sorted = omega_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size_; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw PreconditionError("labeling must be a bijection onto 1.." + std::to_string(size_));
}

LabeledPoset LabeledPoset::from_relations(int size, const std::vector<std::pair<int, int>>& relations,
                                          std::vector<int> omega) {
    for (auto [a, b] : relations) {
        check_index(a, size);
        check_index(b, size);
        if (a == b) throw PreconditionError("poset relations contain a cycle");
    }
    const auto below = closure(size, relations);
    auto lt = [&](int a, int b) { return a != b && below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; };
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < size && cover; ++c)
                if (lt(a, c) && lt(c, b)) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return LabeledPoset(size, std::move(covers), std::move(omega));
}

bool LabeledPoset::leq(int a, int b) const {
    check_index(a, size_);
    check_index(b, size_);
    return below_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

LabeledPoset antichain_poset(int size) {
    std::vector<int> omega(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) omega[static_cast<std::size_t>(i)] = i + 1;
    return LabeledPoset(size, {}, std::move(omega));
}

LabeledPoset chain_poset(int size) {
    std::vector<std::pair<int, int>> covers;
    std::vector<int> omega(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        omega[static_cast<std::size_t>(i)] = i + 1;
        if (i + 1 < size) covers.emplace_back(i, i + 1);
    }
    return LabeledPoset(size, std::move(covers), std::move(omega));
}

LabeledPoset young_diagram_poset(const Composition& lambda) {
    const auto& rows = lambda.parts();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r] > rows[r - 1]) throw PreconditionError("young_diagram_poset: shape must be a partition");
    // Cells numbered row by row from the top.
    std::vector<std::vector<int>> id(rows.size());
    int k = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) id[r].push_back(k++);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) {
            const int here = id[r][static_cast<std::size_t>(c)];
            if (c + 1 < rows[r]) covers.emplace_back(here, id[r][static_cast<std::size_t>(c + 1)]);
            if (r + 1 < rows.size() && c < rows[r + 1]) covers.emplace_back(here, id[r + 1][static_cast<std::size_t>(c)]);
        }
    std::vector<int> omega(static_cast<std::size_t>(k));
    int label = 1;
    for (std::size_t r = rows.size(); r-- > 0;)
        for (int c = 0; c < rows[r]; ++c) omega[static_cast<std::size_t>(id[r][static_cast<std::size_t>(c)])] = label++;
    return LabeledPoset(k, std::move(covers), std::move(omega));
}

std::vector<Permutation> linear_extensions(const LabeledPoset& p, int cap) {
    const int k = p.size();
    if (k > cap)
        throw PreconditionError("poset has " + std::to_string(k) + " elements, above the enumeration cap " +
                                std::to_string(cap));
    std::vector<int> indegree(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<int>> up(static_cast<std::size_t>(k));
    for (auto [a, b] : p.covers()) {
        ++indegree[static_cast<std::size_t>(b)];
        up[static_cast<std::size_t>(a)].push_back(b);
    }
    std::vector<Permutation> out;
    Permutation cur;
    // Extend the current down-set by each minimal remaining element.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < k; ++e) {
            if (indegree[static_cast<std::size_t>(e)] != 0) continue;
            indegree[static_cast<std::size_t>(e)] = -1;
            for (int b : up[static_cast<std::size_t>(e)]) --indegree[static_cast<std::size_t>(b)];
            cur.push_back(p.omega()[static_cast<std::size_t>(e)]);
            self(self);
            cur.pop_back();
            for (int b : up[static_cast<std::size_t>(e)]) ++indegree[static_cast<std::size_t>(b)];
            indegree[static_cast<std::size_t>(e)] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> word_descent_histogram(const std::vector<std::vector<int>>& words, int k) {
    std::vector<long long> hist(static_cast<std::size_t>(std::max(k, 1)), 0);
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != k) throw PreconditionError("descent_histogram: word length differs");
        int d = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) ++d;
        ++hist[static_cast<std::size_t>(d)];
    }
    return hist;
}

std::vector<long long> descent_histogram(const std::vector<Permutation>& perms, int k) {
    for (const auto& w : perms) validate_permutation(w);
    return word_descent_histogram(perms, k);
}

namespace {

Composition word_composition(const std::vector<int>& w) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return comp_of(d, static_cast<int>(w.size()));
}

Rational histogram_entry(const std::vector<long long>& hist, int m, int n) {
    if (m < 1 || m > n) throw PreconditionError("need 1 <= m <= n");
    const auto d = static_cast<std::size_t>(m - 1);
    return d < hist.size() ? Rational(static_cast<long>(hist[d])) : Rational(0);
}

} // namespace

QSymExpansion kpw_expansion(const LabeledPoset& p, int cap) {
    QSymExpansion e(Basis::F, p.size());
    for (const auto& pi : linear_extensions(p, cap)) e.add(word_composition(pi), 1);
    return e;
}

Rational ds_kpw(const LabeledPoset& p, int m, int n, int cap) {
    if (p.size() != n - 1)
        throw PreconditionError("ds_kpw: poset has " + std::to_string(p.size()) + " elements, need n-1 = " +
                                std::to_string(n - 1));
    return histogram_entry(descent_histogram(linear_extensions(p, cap), p.size()), m, n);
}

std::vector<long long> syt_descent_histogram(const Composition& lambda, int cap) {
    const LabeledPoset p = young_diagram_poset(lambda);
    return descent_histogram(linear_extensions(p, cap), p.size());
}

EdgeLabeledPoset::EdgeLabeledPoset(int size, std::vector<LabeledEdge> edges)
    : size_(size), edges_(std::move(edges)), out_(static_cast<std::size_t>(std::max(size, 0))) {
    if (size_ < 1) throw PreconditionError("edge-labeled poset needs at least one element");
    std::vector<int> indeg(static_cast<std::size_t>(size_), 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        check_index(e.from, size_);
        check_index(e.to, size_);
        if (e.from == e.to) throw PreconditionError("edge-labeled poset contains a loop");
        if (!seen.emplace(e.from, e.to).second) throw PreconditionError("repeated cover edge");
        ++indeg[static_cast<std::size_t>(e.to)];
        out_[static_cast<std::size_t>(e.from)].push_back(e);
    }
    std::vector<int> bottoms, tops;
    for (int v = 0; v < size_; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) bottoms.push_back(v);
        if (out_[static_cast<std::size_t>(v)].empty()) tops.push_back(v);
    }
    if (bottoms.size() != 1) throw PreconditionError("edge-labeled poset needs a unique minimum");
    if (tops.size() != 1) throw PreconditionError("edge-labeled poset needs a unique maximum");
    bottom_ = bottoms.front();
    top_ = tops.front();
    // Rank by Kahn order; gradedness means every edge raises rank by exactly one.
    std::vector<int> rank(static_cast<std::size_t>(size_), -1);
    std::vector<int> queue{bottom_};
    rank[static_cast<std::size_t>(bottom_)] = 0;
    std::vector<int> remaining = indeg;
    std::size_t visited = 0;
    while (visited < queue.size()) {
        const int v = queue[visited++];
        for (const auto& e : out_[static_cast<std::size_t>(v)]) {
            auto& r = rank[static_cast<std::size_t>(e.to)];
            const int want = rank[static_cast<std::size_t>(v)] + 1;
            if (r == -1)
                r = want;
            else if (r != want)
                throw PreconditionError("edge-labeled poset is not graded");
            if (--remaining[static_cast<std::size_t>(e.to)] == 0) queue.push_back(e.to);
        }
    }
    if (static_cast<int>(queue.size()) != size_) throw PreconditionError("edge-labeled poset contains a cycle");
    rank_ = rank[static_cast<std::size_t>(top_)];
    for (auto& adj : out_)
        std::sort(adj.begin(), adj.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
            return std::tie(a.label, a.to) < std::tie(b.label, b.to);
        });
}

std::vector<std::vector<int>> maximal_chain_words(const EdgeLabeledPoset& p, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == p.top()) {
            if (out.size() >= cap) throw PreconditionError("maximal chain count exceeds cap");
            out.push_back(word);
            return;
        }
        for (const auto& e : p.out_edges()[static_cast<std::size_t>(v)]) {
            word.push_back(e.label);
            self(self, e.to);
            word.pop_back();
        }
    };
    rec(rec, p.bottom());
    std::sort(out.begin(), out.end());
    return out;
}

QSymExpansion edge_labeled_expansion(const EdgeLabeledPoset& p) {
    QSymExpansion e(Basis::F, p.rank());
    for (const auto& w : maximal_chain_words(p)) e.add(word_composition(w), 1);
    return e;
}

Rational ds_edge_labeled(const EdgeLabeledPoset& p, int m, int n) {
    if (p.rank() != n - 1)
        throw PreconditionError("ds_edge_labeled: rank " + std::to_string(p.rank()) + " differs from n-1 = " +
                                std::to_string(n - 1));
    return histogram_entry(word_descent_histogram(maximal_chain_words(p), p.rank()), m, n);
}

EdgeLabeledPoset weak_order_interval(std::span<const int> w, int cap) {
    validate_permutation(w);
    const int len = inversions(w);
    if (len > cap)
        throw PreconditionError("permutation length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
    // Walk down from w: u = v s_i lies below v whenever v has a descent at i.
    std::map<Permutation, int> index;
    std::vector<Permutation> elems;
    std::vector<LabeledEdge> edges;
    const Permutation top(w.begin(), w.end());
    index.emplace(top, 0);
    elems.push_back(top);
    for (std::size_t at = 0; at < elems.size(); ++at) {
        const Permutation v = elems[at];
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] < v[i + 1]) continue;
            Permutation u = v;
            std::swap(u[i], u[i + 1]);
            auto [it, inserted] = index.emplace(u, static_cast<int>(elems.size()));
            if (inserted) elems.push_back(u);
            edges.push_back({it->second, static_cast<int>(at), static_cast<int>(i) + 1});
        }
    }
    return EdgeLabeledPoset(static_cast<int>(elems.size()), std::move(edges));
}

std::vector<std::vector<int>> reduced_words(std::span<const int> w, int cap) {
    return maximal_chain_words(weak_order_interval(w, cap));
}

Rational ds_stanley(std::span<const int> w, int m, int n, int cap) {
    validate_permutation(w);
    if (inversions(w) != n - 1)
        throw PreconditionError("ds_stanley: length of w is " + std::to_string(inversions(w)) +
                                ", need n-1 = " + std::to_string(n - 1));
    return ds_edge_labeled(weak_order_interval(w, cap), m, n);
}

namespace {

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
    }
}

} // namespace

LabeledPoset labeled_poset_from_json(std::string_view text) {
    const auto j = parse_json(text);
    try {
        const int k = j.at("elements").get<int>();
        std::vector<std::pair<int, int>> covers;
        if (j.contains("covers"))
            for (const auto& c : j.at("covers")) {
                if (c.size() != 2) throw ParseError("each cover must be [a,b]", 0);
                covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
            }
        std::vector<int> omega;
        if (j.contains("omega")) {
            omega = j.at("omega").get<std::vector<int>>();
        } else {
            for (int i = 1; i <= k; ++i) omega.push_back(i);
        }
        return LabeledPoset(k, std::move(covers), std::move(omega));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed poset: ") + ex.what(), 0);
    }
}

EdgeLabeledPoset edge_labeled_poset_from_json(std::string_view text) {
    const auto j = parse_json(text);
    try {
        const int k = j.at("elements").get<int>();
        std::vector<LabeledEdge> edges;
        std::set<std::pair<int, int>> labeled;
        for (const auto& e : j.at("labels")) {
            if (e.size() != 3) throw ParseError("each label must be [a,b,l]", 0);
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
            labeled.emplace(edges.back().from, edges.back().to);
        }
        if (j.contains("covers")) {
            std::set<std::pair<int, int>> covers;
            for (const auto& c : j.at("covers")) covers.emplace(c.at(0).get<int>(), c.at(1).get<int>());
            if (covers != labeled) throw PreconditionError("covers and labels disagree");
        }
        return EdgeLabeledPoset(k, std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed edge-labeled poset: ") + ex.what(), 0);
    }
}

} // namespace dsym
