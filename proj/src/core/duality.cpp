#include "core/duality.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace zprmod {

namespace {

// Solve <rows[j], w> == 0 for the pivot coordinates of w, from the last pivot
// upward, fixing at most the pivots below `from`. Rows vanish on earlier
// pivot columns, so each constraint involves only already-known coordinates.
void solve_pivots(const StandardForm& sf, std::vector<std::int64_t>& w,
                  std::size_t from) {
  const Ring& ring = sf.ring();
  for (std::size_t j = from; j-- > 0;) {
    const Vec& row = sf.rows()[j];
    const std::size_t pivot = sf.pivot_columns()[j];
    const std::int64_t place = ring.pow_p(sf.row_levels()[j]);
    std::int64_t s = 0;
    for (std::size_t c = 0; c < sf.length(); ++c)
      if (c != pivot) s = ring.add(s, ring.mul(row[c], w[c]));
    if (s % place != 0) fail(errc::internal, "dual constraint not divisible");
    const std::int64_t cap = ring.pow_p(ring.exponent() - sf.row_levels()[j]);
    w[pivot] = (cap - (s / place) % cap) % cap;
  }
}

Module dual_unchecked(const Module& m) {
  const StandardForm& sf = m.standard_form();
  const Ring& ring = m.ring();
  const std::size_t n = m.length();
  const std::size_t k = sf.row_count();

  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : sf.pivot_columns()) is_pivot[c] = 1;

  std::vector<Vec> gens;
  // one generator per free column, with a unit in that column
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::int64_t> w(n, 0);
    w[c] = 1;
    solve_pivots(sf, w, k);
    gens.emplace_back(ring, std::move(w));
  }
  // one generator per pivot, carrying p^{r - level} in the pivot column
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::int64_t> w(n, 0);
    w[sf.pivot_columns()[j]] =
        ring.reduce(ring.pow_p(ring.exponent() - sf.row_levels()[j]));
    solve_pivots(sf, w, j);
    gens.emplace_back(ring, std::move(w));
  }
  return Module::from_generators(ring, n, gens);
}

bool dual_parameters_hold(const Module& m, const Module& d) {
  const auto& k = m.standard_form().block_counts();
  const auto& kd = d.standard_form().block_counts();
  const std::int64_t n = static_cast<std::int64_t>(m.length());
  const std::int64_t r = m.ring().exponent();

  std::int64_t k_total = 0, kd_total = 0;
  for (std::int64_t x : k) k_total += x;
  for (std::int64_t x : kd) kd_total += x;

  if (kd_total != n - k[0]) return false;
  if (kd[0] != n - k_total) return false;
  for (std::int64_t i = 1; i < r; ++i)
    if (kd[static_cast<std::size_t>(i)] != k[static_cast<std::size_t>(r - i)])
      return false;
  return true;
}

}  // namespace

std::int64_t inner_product(const Vec& u, const Vec& v) {
  Vec::check_compatible(u, v);
  const Ring& ring = u.ring();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc = ring.add(acc, ring.mul(u[i], v[i]));
  return acc;
}

Module dual(const Module& m) {
  Module d = dual_unchecked(m);
  if (!dual_parameters_hold(m, d) ||
      m.p_dimension() + d.p_dimension() !=
          m.ring().exponent() * static_cast<std::int64_t>(m.length()))
    fail(errc::internal, "dual module fails the parameter relations");
  return d;
}

Module sum(const Module& a, const Module& b) {
  if (a.length() != b.length() || !(a.ring() == b.ring()))
    fail(errc::dimension_mismatch, "modules live in different ambient spaces");
  std::vector<Vec> gens = a.standard_form().rows();
  const auto& brows = b.standard_form().rows();
  gens.insert(gens.end(), brows.begin(), brows.end());
  return Module::from_generators(a.ring(), a.length(), gens);
}

Module intersect(const Module& a, const Module& b) {
  if (a.length() != b.length() || !(a.ring() == b.ring()))
    fail(errc::dimension_mismatch, "modules live in different ambient spaces");
  return dual(sum(dual(a), dual(b)));
}

IdentityReport verify_dimension_identities(const Module& m) {
  Module d = dual_unchecked(m);
  IdentityReport report;
  report.pdim = m.p_dimension();
  report.pdim_dual = d.p_dimension();
  report.ambient_pdim = m.ring().exponent() * static_cast<std::int64_t>(m.length());
  report.block_counts = m.standard_form().block_counts();
  report.block_counts_dual = d.standard_form().block_counts();
  report.dim_identity_ok = report.pdim + report.pdim_dual == report.ambient_pdim;

  // multiply the actual cardinalities when everything fits in 128 bits;
  // beyond that the exponent comparison is the same exact statement
  auto pow_u128 = [&](std::int64_t e) {
    unsigned __int128 out = 1;
    for (std::int64_t i = 0; i < e; ++i)
      out *= static_cast<unsigned __int128>(m.ring().prime());
    return out;
  };
  const int prime_bits = 64 - __builtin_clzll(
      static_cast<unsigned long long>(m.ring().prime()));
  const std::int64_t max_exp =
      std::max(report.ambient_pdim, report.pdim + report.pdim_dual);
  if (max_exp * prime_bits <= 120) {
    report.cardinality_identity_ok =
        pow_u128(report.pdim) * pow_u128(report.pdim_dual) ==
        pow_u128(report.ambient_pdim);
  } else {
    report.cardinality_identity_ok =
        report.pdim + report.pdim_dual == report.ambient_pdim;
  }
  report.dual_parameters_ok = dual_parameters_hold(m, d);
  return report;
}

}  // namespace zprmod
