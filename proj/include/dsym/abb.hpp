#pragma once

// Degree n-1 slice K_n of the ideal generated by positive-degree
// quasisymmetric polynomials, and the splitting f = g + h with g supported on
// Catalan monomials and h in K_n.

#include "dsym/combinat.hpp"
#include "dsym/polynomial.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dsym {

inline constexpr int kMaxKnN = 7;
inline constexpr int kKnCacheVersion = 1;

/// x^c M_alpha(x_n) with |alpha| >= 1 and |alpha| + |c| = n-1.
std::vector<Polynomial> kn_spanning_set(int n);

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

/// Reduced row echelon form of the spanning set. Columns are the monomials of
/// degree n-1, non-Catalan ones first (descending grlex) and Catalan ones last;
/// the pivot columns are exactly the non-Catalan ones.
class KnBasisCache {
public:
    KnBasisCache(int n, std::vector<WeakComposition> columns, std::vector<int> pivots, std::vector<SparseRow> rows);

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(columns_.size()); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<WeakComposition>& columns() const { return columns_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<SparseRow>& rows() const { return rows_; }

    /// Column of a monomial of degree n-1; -1 if absent.
    int column_of(const Monomial& m) const;
    /// Row whose pivot is column c; -1 if c is not a pivot.
    int row_of_pivot(int c) const;

private:
    int n_;
    std::vector<WeakComposition> columns_;
    std::vector<int> pivots_;
    std::vector<SparseRow> rows_;
    std::unordered_map<Monomial, int, MonomialHash> column_index_;
    std::unordered_map<int, int> pivot_row_;
};

KnBasisCache build_kn_cache(int n);

std::string kn_cache_to_json(const KnBasisCache& cache);
/// Throws ParseError on malformed input, InvariantError on version or checksum mismatch.
KnBasisCache kn_cache_from_json(std::string_view text);

/// $DSYM_CACHE_DIR, else $XDG_CACHE_HOME/dsym, else ~/.cache/dsym; empty if none applies.
std::filesystem::path default_cache_dir();

/// In-memory, then on-disk, then freshly built; a fresh build is written back
/// to disk when the directory is usable. Stale or corrupt files are rebuilt.
std::shared_ptr<const KnBasisCache> get_kn_cache(int n);

struct DecompositionResult {
    Polynomial g;
    Polynomial h;
    Rational scalar;
};

DecompositionResult decompose(const Polynomial& f, const KnBasisCache& cache);
Rational ds_via_decomposition(const Polynomial& f, const KnBasisCache& cache);
bool is_in_kn(const Polynomial& f, const KnBasisCache& cache);

} // namespace dsym
