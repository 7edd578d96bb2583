#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zprmod {

/// The ring Z_{p^r} with p prime and r >= 1. Scalars are canonical residues
/// in [0, p^r); every operation reduces its result back to that range.
/// Rings with p^r >= 2^63 are rejected so that all arithmetic stays exact
/// in 64 bits (products go through 128-bit intermediates).
class Ring {
 public:
  Ring(std::int64_t p, std::int64_t r);

  std::int64_t prime() const { return p_; }
  std::int64_t exponent() const { return r_; }
  std::int64_t modulus() const { return modulus_; }

  /// p^i for 0 <= i <= r. pow_p(r) equals the modulus.
  std::int64_t pow_p(std::int64_t i) const;

  std::int64_t reduce(std::int64_t a) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;

  /// Digits (d_0, ..., d_{r-1}) with sum d_i * p^i == a and d_i in [0, p).
  std::vector<std::int64_t> padic_digits(std::int64_t a) const;
  std::int64_t compose_digits(std::span<const std::int64_t> digits) const;

  /// Largest i <= r with p^i dividing a; valuation(0) == r.
  std::int64_t valuation(std::int64_t a) const;

  bool is_unit(std::int64_t a) const;
  std::int64_t unit_inverse(std::int64_t a) const;

  friend bool operator==(const Ring&, const Ring&) = default;

  static bool is_prime(std::int64_t m);

 private:
  std::int64_t p_ = 0;
  std::int64_t r_ = 0;
  std::int64_t modulus_ = 0;
};

}  // namespace zprmod
