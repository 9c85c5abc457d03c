#include "dsym/abb.hpp"

#include "dsym/qsym.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace dsym {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxKnN)
        throw PreconditionError("K_n is supported for 1 <= n <= " + std::to_string(kMaxKnN) + ", got " +
                                std::to_string(n));
}

Monomial monomial_of(const WeakComposition& c) { return Monomial(std::span<const int>(c.parts)); }

// Monomials of degree n-1: non-Catalan first, Catalan last, each block in
// descending grlex.
std::vector<WeakComposition> column_order(int n) {
    std::vector<WeakComposition> all = weak_compositions(n - 1, n);
    auto desc = [](const WeakComposition& a, const WeakComposition& b) {
        return grlex(monomial_of(a), monomial_of(b)) > 0;
    };
    std::vector<WeakComposition> other, catalan;
    for (auto& c : all) (is_catalan(c) ? catalan : other).push_back(std::move(c));
    std::sort(other.begin(), other.end(), desc);
    std::sort(catalan.begin(), catalan.end(), desc);
    other.insert(other.end(), catalan.begin(), catalan.end());
    return other;
}

// a += s * b
void axpy(SparseRow& a, const Rational& s, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

const Rational* entry(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, int c) { return e.first < c; });
    return it != r.end() && it->first == col ? &it->second : nullptr;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::vector<Polynomial> kn_spanning_set(int n) {
    if (n < 2) throw PreconditionError("kn_spanning_set: n must be at least 2");
    check_n(n);
    std::vector<Polynomial> out;
    for (int k = 1; k <= n - 1; ++k) {
        for (const auto& alpha : compositions(k)) {
            if (alpha.length() > n) continue;
            const Polynomial m = monomial_qsym(alpha, n, n);
            for (const auto& c : weak_compositions(n - 1 - k, n))
                out.push_back(Polynomial::monomial(n, std::span<const int>(c.parts), 1) * m);
        }
    }
    return out;
}

KnBasisCache::KnBasisCache(int n, std::vector<WeakComposition> columns, std::vector<int> pivots,
                           std::vector<SparseRow> rows)
    : n_(n), columns_(std::move(columns)), pivots_(std::move(pivots)), rows_(std::move(rows)) {
    if (pivots_.size() != rows_.size()) throw InvariantError("K_n cache: pivot and row counts differ");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].length() != n_ || columns_[i].size() != n_ - 1)
            throw InvariantError("K_n cache: column of wrong shape");
        column_index_.emplace(monomial_of(columns_[i]), static_cast<int>(i));
    }
    for (std::size_t r = 0; r < pivots_.size(); ++r) pivot_row_.emplace(pivots_[r], static_cast<int>(r));
}

int KnBasisCache::column_of(const Monomial& m) const {
    auto it = column_index_.find(m);
    return it == column_index_.end() ? -1 : it->second;
}

int KnBasisCache::row_of_pivot(int c) const {
    auto it = pivot_row_.find(c);
    return it == pivot_row_.end() ? -1 : it->second;
}

KnBasisCache build_kn_cache(int n) {
    check_n(n);
    std::vector<WeakComposition> columns = column_order(n);
    std::unordered_map<Monomial, int, MonomialHash> index;
    int catalan_start = static_cast<int>(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        index.emplace(monomial_of(columns[i]), static_cast<int>(i));
        if (is_catalan(columns[i])) catalan_start = std::min(catalan_start, static_cast<int>(i));
    }
    // pivot column -> fully reduced row with a leading 1
    std::map<int, SparseRow> reduced;
    if (n >= 2) {
        for (const auto& gen : kn_spanning_set(n)) {
            SparseRow v;
            for (const auto& t : gen.terms()) v.emplace_back(index.at(t.mono), t.coeff);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [p, row] : reduced)
                if (const Rational* e = entry(v, p)) axpy(v, Rational(-*e), row);
            if (v.empty()) continue;
            const int p = v.front().first;
            if (p >= catalan_start)
                throw InvariantError("K_n meets the Catalan span at n = " + std::to_string(n));
            const Rational inv = 1 / v.front().second;
            for (auto& e : v) e.second *= inv;
            for (auto& [q, row] : reduced)
                if (const Rational* e = entry(row, p)) axpy(row, Rational(-*e), v);
            reduced.emplace(p, std::move(v));
        }
    }
    if (static_cast<int>(reduced.size()) != catalan_start)
        throw InvariantError("K_n rank " + std::to_string(reduced.size()) + " differs from the non-Catalan count " +
                             std::to_string(catalan_start));
    std::vector<int> pivots;
    std::vector<SparseRow> rows;
    for (auto& [p, row] : reduced) {
        pivots.push_back(p);
        rows.push_back(std::move(row));
    }
    return KnBasisCache(n, std::move(columns), std::move(pivots), std::move(rows));
}

namespace {

nlohmann::json cache_payload(const KnBasisCache& cache) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : cache.columns()) cols.push_back(c.parts);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : cache.rows()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& [c, v] : r) row.push_back({c, to_string(v)});
        rows.push_back(std::move(row));
    }
    return {{"version", kKnCacheVersion}, {"n", cache.n()},         {"dimension", cache.dimension()},
            {"rank", cache.rank()},       {"columns", cols},         {"pivots", cache.pivots()},
            {"rows", rows}};
}

std::string checksum_hex(const nlohmann::json& payload) {
    std::ostringstream os;
    os << std::hex << fnv1a(payload.dump());
    return os.str();
}

} // namespace

std::string kn_cache_to_json(const KnBasisCache& cache) {
    nlohmann::json j = cache_payload(cache);
    j["checksum"] = checksum_hex(j);
    return j.dump();
}

KnBasisCache kn_cache_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid K_n cache: ") + ex.what(), ex.byte);
    }
    try {
        if (j.at("version").get<int>() != kKnCacheVersion) throw InvariantError("K_n cache version mismatch");
        const std::string stored = j.at("checksum").get<std::string>();
        j.erase("checksum");
        if (stored != checksum_hex(j)) throw InvariantError("K_n cache checksum mismatch");
        const int n = j.at("n").get<int>();
        check_n(n);
        std::vector<WeakComposition> columns;
        for (const auto& c : j.at("columns")) columns.push_back({c.get<std::vector<int>>()});
        std::vector<SparseRow> rows;
        for (const auto& r : j.at("rows")) {
            SparseRow row;
            for (const auto& e : r) row.emplace_back(e.at(0).get<int>(), parse_rational(e.at(1).get<std::string>()));
            rows.push_back(std::move(row));
        }
        KnBasisCache cache(n, std::move(columns), j.at("pivots").get<std::vector<int>>(), std::move(rows));
        if (cache.dimension() != j.at("dimension").get<int>() || cache.rank() != j.at("rank").get<int>())
            throw InvariantError("K_n cache header disagrees with its contents");
        return cache;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed K_n cache: ") + ex.what(), 0);
    }
}

std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("DSYM_CACHE_DIR"); d && *d) return d;
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "dsym";
    if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "dsym";
    return {};
}

std::shared_ptr<const KnBasisCache> get_kn_cache(int n) {
    check_n(n);
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const KnBasisCache>> memory;
    std::lock_guard lock(mu);
    if (auto it = memory.find(n); it != memory.end()) return it->second;

    const auto dir = default_cache_dir();
    const auto file = dir.empty() ? dir : dir / ("kn_" + std::to_string(n) + ".json");
    std::shared_ptr<const KnBasisCache> out;
    if (!file.empty()) {
        std::ifstream in(file);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto loaded = std::make_shared<const KnBasisCache>(kn_cache_from_json(ss.str()));
                if (loaded->n() == n) out = std::move(loaded);
            } catch (const std::exception&) {
                // rebuilt below
            }
        }
    }
    if (!out) {
        out = std::make_shared<const KnBasisCache>(build_kn_cache(n));
        if (!file.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            const auto tmp = file.string() + ".tmp";
            {
                std::ofstream os(tmp);
                if (os) os << kn_cache_to_json(*out);
            }
            std::filesystem::rename(tmp, file, ec);
            if (ec) std::filesystem::remove(tmp, ec);
        }
    }
    memory.emplace(n, out);
    return out;
}

DecompositionResult decompose(const Polynomial& f, const KnBasisCache& cache) {
    const int n = cache.n();
    if (f.ambient() != n)
        throw PreconditionError("decompose: polynomial has ambient " + std::to_string(f.ambient()) +
                                ", cache is for n = " + std::to_string(n));
    if (!f.is_homogeneous() || (!f.is_zero() && *f.degree() != n - 1))
        throw PreconditionError("decompose: input must be homogeneous of degree n-1 = " + std::to_string(n - 1));
    // h = sum over non-Catalan c of f_c * row_c
    std::map<int, Rational> h;
    for (const auto& t : f.terms()) {
        const int col = cache.column_of(t.mono);
        if (col < 0) throw InvariantError("decompose: monomial missing from the cache");
        const int r = cache.row_of_pivot(col);
        if (r < 0) continue;
        for (const auto& [c, v] : cache.rows()[static_cast<std::size_t>(r)]) h[c] += t.coeff * v;
    }
    std::vector<Term> hterms;
    for (const auto& [c, v] : h)
        if (v != 0) hterms.push_back({monomial_of(cache.columns()[static_cast<std::size_t>(c)]), v});
    Polynomial hp = Polynomial::from_terms(n, std::move(hterms));
    Polynomial g = f - hp;
    for (const auto& t : g.terms())
        if (!is_catalan(WeakComposition{t.mono.exponents(n)}))
            throw InvariantError("decompose: complement has a non-Catalan monomial");
    Rational scalar = eval_ones(g, n);
    return {std::move(g), std::move(hp), std::move(scalar)};
}

Rational ds_via_decomposition(const Polynomial& f, const KnBasisCache& cache) { return decompose(f, cache).scalar; }

bool is_in_kn(const Polynomial& f, const KnBasisCache& cache) { return decompose(f, cache).g.is_zero(); }

} // namespace dsym
