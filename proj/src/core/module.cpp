#include "core/module.hpp"

#include <limits>
#include <utility>

#include "core/error.hpp"

namespace zprmod {

Module::Module(StandardForm sf) : sf_(std::move(sf)) {
  for (std::int64_t level : sf_.row_levels()) pdim_ += sf_.ring().exponent() - level;
}

Module Module::from_generators(const Ring& ring, std::size_t n,
                               const std::vector<Vec>& gens) {
  return Module(StandardForm::reduce(ring, n, gens));
}

Module Module::zero(const Ring& ring, std::size_t n) {
  return from_generators(ring, n, {});
}

Module Module::full(const Ring& ring, std::size_t n) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> coords(n, 0);
    coords[i] = 1;
    gens.emplace_back(ring, std::move(coords));
  }
  return from_generators(ring, n, gens);
}

bool Module::cardinality_fits() const {
  unsigned __int128 c = 1;
  for (std::int64_t i = 0; i < pdim_; ++i) {
    c *= static_cast<unsigned __int128>(ring().prime());
    if (c > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  return true;
}

std::uint64_t Module::cardinality() const {
  unsigned __int128 c = 1;
  for (std::int64_t i = 0; i < pdim_; ++i) {
    c *= static_cast<unsigned __int128>(ring().prime());
    if (c > std::numeric_limits<std::uint64_t>::max())
      fail(errc::overflow, "cardinality does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

bool Module::contains_module(const Module& other) const {
  if (length() != other.length() || !(ring() == other.ring()))
    fail(errc::dimension_mismatch, "modules live in different ambient spaces");
  for (const Vec& row : other.standard_form().rows())
    if (!contains(row)) return false;
  return true;
}

bool Module::equals(const Module& other) const {
  return p_dimension() == other.p_dimension() && contains_module(other) &&
         other.contains_module(*this);
}

}  // namespace zprmod
