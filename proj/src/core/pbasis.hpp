#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/module.hpp"

namespace zprmod {

inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 16;

struct SequenceCheck {
  bool ok = false;
  /// Smallest index i (0-based) with p*v_i outside the p-span of the strict
  /// suffix; set only when !ok.
  std::optional<std::size_t> first_violation;
};

/// p-generator sequence test: p*v_last == 0 and every p*v_i is a p-linear
/// combination of the later vectors. While the suffix conditions hold, the
/// suffix p-span equals its span and membership is solved exactly; past the
/// first violation the suffix p-spans are enumerated, subject to the guard.
SequenceCheck is_p_generator_sequence(const Ring& ring, std::size_t n,
                                      const std::vector<Vec>& seq,
                                      std::size_t max_states = kDefaultMaxStates);

struct IndependenceCheck {
  bool independent = false;
  /// A nonzero digit tuple summing to zero. May be absent for dependent
  /// p-generator sequences too large to enumerate.
  std::optional<std::vector<std::int64_t>> witness;
};

/// p-linear independence: only the all-zero digit tuple combines to zero.
/// p-generator sequences are decided through the span cardinality; other
/// families fall back to digit enumeration within the guard.
IndependenceCheck is_p_independent(const Ring& ring, std::size_t n,
                                   const std::vector<Vec>& family,
                                   std::size_t max_states = kDefaultMaxStates);

/// An ordered p-basis: a p-linearly independent p-generator sequence.
/// Digit coordinates over the basis are unique, and the p-span equals the
/// span of the vectors. Validated on construction.
class PBasis {
 public:
  /// Chain construction: each level-i row g of the standard form contributes
  /// g, p*g, ..., p^{r-i-1}*g, in matrix row order.
  static PBasis from_module(const Module& m);

  /// Validates both p-basis predicates; throws errc::bad_argument otherwise.
  static PBasis checked(const Ring& ring, std::size_t n, std::vector<Vec> vectors);

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  std::size_t pdim() const { return vectors_.size(); }
  const std::vector<Vec>& vectors() const { return vectors_; }

  /// The submodule spanned by the basis.
  const Module& spanned_module() const { return suffix_modules_.front(); }

  struct Coordinates {
    bool member = false;
    std::vector<std::int64_t> digits;
  };

  /// The unique digit tuple with sum digits[j] * vectors()[j] == v, solved by
  /// peeling one digit per suffix module; never enumerates.
  Coordinates coordinates(const Vec& v) const;

 private:
  PBasis(const Ring& ring, std::size_t n, std::vector<Vec> vectors);

  Ring ring_;
  std::size_t n_;
  std::vector<Vec> vectors_;
  /// suffix_modules_[i] spans vectors_[i..); the last entry is the zero module.
  std::vector<Module> suffix_modules_;
  /// Smallest t >= 1 with p^t * vectors_[i] inside suffix_modules_[i + 1].
  std::vector<std::int64_t> min_exponents_;
};

/// Soc(M) = {v in M : p*v == 0}, spanned by p^{r-i-1} * g over the level-i
/// standard-form rows g.
Module socle(const Module& m);

/// Extend a p-basis of a submodule of m to a p-basis of m. New vectors are
/// prepended: each round takes the first chain-basis vector of m outside the
/// current span, finds the smallest exponent t >= 1 with p^t * v inside, and
/// inserts p^{t-1} * v at the front.
PBasis extend_p_basis(const PBasis& sub, const Module& m);

}  // namespace zprmod
