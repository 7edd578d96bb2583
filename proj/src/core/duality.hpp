#pragma once

#include <cstdint>
#include <vector>

#include "core/module.hpp"

namespace zprmod {

/// Coordinatewise symmetric bilinear form sum x_i * y_i in Z_{p^r}.
std::int64_t inner_product(const Vec& u, const Vec& v);

/// The dual submodule {v : <u, v> == 0 for all u in m}. Generators are solved
/// from the standard form of m; the result is checked against the parameter
/// relations k(dual) == n - k_0, k_0(dual) == n - k, k_i(dual) == k_{r-i}.
Module dual(const Module& m);

/// span {u + v : u in a, v in b}.
Module sum(const Module& a, const Module& b);

/// Computed as (dual(a) + dual(b)) taken dual again.
Module intersect(const Module& a, const Module& b);

struct IdentityReport {
  std::int64_t pdim = 0;
  std::int64_t pdim_dual = 0;
  std::int64_t ambient_pdim = 0;  // r * n
  std::vector<std::int64_t> block_counts;
  std::vector<std::int64_t> block_counts_dual;
  bool dim_identity_ok = false;          // pdim + pdim_dual == r * n
  bool cardinality_identity_ok = false;  // |M| * |dual| == p^{r n}
  bool dual_parameters_ok = false;       // the three parameter relations
  bool all_ok() const {
    return dim_identity_ok && cardinality_identity_ok && dual_parameters_ok;
  }
};

/// Consistency report over the duality identities of m.
IdentityReport verify_dimension_identities(const Module& m);

}  // namespace zprmod
