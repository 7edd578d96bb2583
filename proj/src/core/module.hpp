#pragma once

#include <cstdint>
#include <vector>

#include "core/standard_form.hpp"

namespace zprmod {

/// A span-defined submodule of Z_{p^r}^n, represented by its canonical
/// standard form. Immutable after construction.
class Module {
 public:
  static Module from_generators(const Ring& ring, std::size_t n,
                                const std::vector<Vec>& gens);
  static Module zero(const Ring& ring, std::size_t n);
  static Module full(const Ring& ring, std::size_t n);

  const StandardForm& standard_form() const { return sf_; }
  const Ring& ring() const { return sf_.ring(); }
  std::size_t length() const { return sf_.length(); }

  /// sum_i (r - i) * k_i == log_p |M|.
  std::int64_t p_dimension() const { return pdim_; }

  /// p^{p_dimension()}; throws errc::overflow if it does not fit in 64 bits.
  std::uint64_t cardinality() const;
  bool cardinality_fits() const;

  StandardForm::Membership membership(const Vec& v) const {
    return sf_.membership(v);
  }
  bool contains(const Vec& v) const { return sf_.membership(v).member; }
  bool contains_module(const Module& other) const;

  /// Same span: mutual membership of generators plus equal cardinality.
  bool equals(const Module& other) const;

 private:
  explicit Module(StandardForm sf);

  StandardForm sf_;
  std::int64_t pdim_ = 0;
};

}  // namespace zprmod
