#pragma once

#include <cstdint>
#include <vector>

#include "core/ring.hpp"
#include "core/vec.hpp"

namespace zprmod {

/// Canonical row-reduced generator matrix of a submodule of Z_{p^r}^n.
///
/// Rows are ordered by pivot level (the valuation i of the pivot entry) and,
/// within a level, by pivot column. Each pivot is normalized to exactly p^i,
/// entries below a pivot are zero, and entries above a level-i pivot are
/// reduced to their canonical residue mod p^i. Grouping the pivot columns
/// level block by level block (the stored permutation) exhibits the familiar
/// block upper-triangular shape with diagonal blocks p^i * I_{k_i}.
///
/// The reduced matrix is uniquely determined by the row span, so two
/// generator sets describe the same submodule exactly when they reduce to
/// identical objects.
class StandardForm {
 public:
  static StandardForm reduce(const Ring& ring, std::size_t n,
                             const std::vector<Vec>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return n_; }

  /// Number of rows, k(M).
  std::size_t row_count() const { return rows_.size(); }

  /// Canonical rows in the original column order; their span is the module.
  const std::vector<Vec>& rows() const { return rows_; }

  /// The same rows with pivot columns grouped block by block.
  const std::vector<Vec>& rows_permuted() const { return rows_permuted_; }

  /// permutation()[j] is the original index of permuted column j.
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  /// (k_0, ..., k_{r-1}): rows with pivot valuation i.
  const std::vector<std::int64_t>& block_counts() const { return block_counts_; }

  /// Pivot valuation of each row, ascending.
  const std::vector<std::int64_t>& row_levels() const { return row_levels_; }

  /// Original column index of each row's pivot.
  const std::vector<std::size_t>& pivot_columns() const { return pivot_columns_; }

  /// rows()[i] == sum_j transform()[i][j] * input_rows[j] over the ring.
  const std::vector<std::vector<std::int64_t>>& transform() const {
    return transform_;
  }

  struct Membership {
    bool member = false;
    /// Coefficients over rows(); the entry for a level-i row is the canonical
    /// residue in [0, p^{r-i}).
    std::vector<std::int64_t> coeffs;
  };

  /// Solve v == sum_j coeffs[j] * rows()[j] by back-substitution.
  Membership membership(const Vec& v) const;

 private:
  StandardForm() = default;

  Ring ring_{2, 1};
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<Vec> rows_permuted_;
  std::vector<std::size_t> permutation_;
  std::vector<std::int64_t> block_counts_;
  std::vector<std::int64_t> row_levels_;
  std::vector<std::size_t> pivot_columns_;
  std::vector<std::vector<std::int64_t>> transform_;
};

}  // namespace zprmod
