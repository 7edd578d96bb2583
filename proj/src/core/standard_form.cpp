#include "core/standard_form.hpp"

#include <utility>

#include "core/error.hpp"

namespace zprmod {

namespace {

void scale_row(const Ring& ring, std::vector<std::int64_t>& row, std::int64_t c) {
  for (auto& x : row) x = ring.mul(x, c);
}

// row -= c * other
void subtract_scaled(const Ring& ring, std::vector<std::int64_t>& row,
                     const std::vector<std::int64_t>& other, std::int64_t c) {
  for (std::size_t i = 0; i < row.size(); ++i)
    row[i] = ring.sub(row[i], ring.mul(c, other[i]));
}

}  // namespace

StandardForm StandardForm::reduce(const Ring& ring, std::size_t n,
                                  const std::vector<Vec>& input) {
  if (n == 0) fail(errc::bad_argument, "ambient length must be at least 1");
  for (const Vec& v : input) {
    if (v.size() != n || !(v.ring() == ring))
      fail(errc::dimension_mismatch, "generator outside the ambient space");
  }

  const std::size_t m = input.size();
  std::vector<std::vector<std::int64_t>> work(m);
  std::vector<std::vector<std::int64_t>> trans(m);
  for (std::size_t i = 0; i < m; ++i) {
    work[i].assign(input[i].coords().begin(), input[i].coords().end());
    trans[i].assign(m, 0);
    trans[i][i] = 1;
  }

  std::vector<char> row_used(m, 0);
  std::vector<char> col_used(n, 0);
  std::vector<std::size_t> piv_row, piv_col;
  std::vector<std::int64_t> piv_level;

  // Sweep level by level: a column receives a level-i pivot when the best
  // remaining entry in it has valuation exactly i. Entries of remaining rows
  // never drop below the current level, so pivot levels come out ascending
  // and every entry of a level-i pivot row is divisible by p^i.
  for (std::int64_t level = 0; level < ring.exponent(); ++level) {
    for (std::size_t col = 0; col < n; ++col) {
      if (col_used[col]) continue;
      std::size_t best = m;
      std::int64_t best_val = ring.exponent();
      for (std::size_t row = 0; row < m; ++row) {
        if (row_used[row]) continue;
        std::int64_t v = ring.valuation(work[row][col]);
        if (v < best_val) {
          best_val = v;
          best = row;
        }
      }
      if (best == m || best_val > level) continue;
      if (best_val < level) fail(errc::internal, "pivot valuation below sweep level");

      const std::int64_t place = ring.pow_p(level);
      std::int64_t inv = ring.unit_inverse(work[best][col] / place);
      scale_row(ring, work[best], inv);
      scale_row(ring, trans[best], inv);

      for (std::size_t row = 0; row < m; ++row) {
        if (row == best || row_used[row]) continue;
        std::int64_t e = work[row][col];
        if (e == 0) continue;
        std::int64_t c = e / place;
        subtract_scaled(ring, work[row], work[best], c);
        subtract_scaled(ring, trans[row], trans[best], c);
      }

      row_used[best] = 1;
      col_used[col] = 1;
      piv_row.push_back(best);
      piv_col.push_back(col);
      piv_level.push_back(level);
    }
  }

  // Canonicalize entries above each pivot to their residue mod p^level.
  // Later pivot rows vanish on earlier pivot columns, so earlier columns
  // stay canonical as we move right.
  for (std::size_t j = 0; j < piv_row.size(); ++j) {
    const std::int64_t place = ring.pow_p(piv_level[j]);
    for (std::size_t i = 0; i < j; ++i) {
      std::int64_t c = work[piv_row[i]][piv_col[j]] / place;
      if (c == 0) continue;
      subtract_scaled(ring, work[piv_row[i]], work[piv_row[j]], c);
      subtract_scaled(ring, trans[piv_row[i]], trans[piv_row[j]], c);
    }
  }

  StandardForm sf;
  sf.ring_ = ring;
  sf.n_ = n;
  sf.row_levels_ = piv_level;
  sf.pivot_columns_ = piv_col;
  sf.block_counts_.assign(static_cast<std::size_t>(ring.exponent()), 0);
  for (std::int64_t level : piv_level)
    ++sf.block_counts_[static_cast<std::size_t>(level)];

  for (std::size_t j = 0; j < piv_row.size(); ++j) {
    sf.rows_.emplace_back(ring, work[piv_row[j]]);
    sf.transform_.push_back(trans[piv_row[j]]);
  }

  sf.permutation_ = piv_col;
  for (std::size_t col = 0; col < n; ++col)
    if (!col_used[col]) sf.permutation_.push_back(col);

  for (const Vec& row : sf.rows_) {
    std::vector<std::int64_t> permuted(n);
    for (std::size_t j = 0; j < n; ++j) permuted[j] = row[sf.permutation_[j]];
    sf.rows_permuted_.emplace_back(ring, std::move(permuted));
  }

  return sf;
}

StandardForm::Membership StandardForm::membership(const Vec& v) const {
  if (v.size() != n_ || !(v.ring() == ring_))
    fail(errc::dimension_mismatch, "vector outside the ambient space");

  std::vector<std::int64_t> w(v.coords().begin(), v.coords().end());
  Membership out;
  out.coeffs.reserve(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::int64_t place = ring_.pow_p(row_levels_[j]);
    std::int64_t e = w[pivot_columns_[j]];
    if (e % place != 0) return {};
    std::int64_t c = e / place;
    if (c != 0) {
      for (std::size_t i = 0; i < n_; ++i)
        w[i] = ring_.sub(w[i], ring_.mul(c, rows_[j][i]));
    }
    out.coeffs.push_back(c);
  }
  for (std::int64_t x : w)
    if (x != 0) return {};
  out.member = true;
  return out;
}

}  // namespace zprmod
