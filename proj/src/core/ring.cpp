#include "core/ring.hpp"

#include <limits>

#include "core/error.hpp"

namespace zprmod {

namespace {

using u128 = unsigned __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<u128>(a) * static_cast<u128>(b) %
                                   static_cast<u128>(m));
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool Ring::is_prime(std::int64_t m) {
  if (m < 2) return false;
  constexpr std::int64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::int64_t q : small) {
    if (m % q == 0) return m == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::int64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : small) {
    std::int64_t x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Ring::Ring(std::int64_t p, std::int64_t r) : p_(p), r_(r) {
  if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (r < 1) fail(errc::bad_exponent, "exponent must be at least 1");
  u128 m = 1;
  const u128 limit = u128{1} << 63;
  for (std::int64_t i = 0; i < r; ++i) {
    m *= static_cast<u128>(p);
    if (m >= limit)
      fail(errc::overflow, "p^r does not fit in a signed 64-bit integer");
  }
  modulus_ = static_cast<std::int64_t>(m);
}

std::int64_t Ring::pow_p(std::int64_t i) const {
  if (i < 0 || i > r_) fail(errc::bad_argument, "p-power exponent out of range");
  std::int64_t acc = 1;
  for (std::int64_t t = 0; t < i; ++t) acc *= p_;
  return acc;
}

std::int64_t Ring::reduce(std::int64_t a) const {
  std::int64_t m = a % modulus_;
  if (m < 0) m += modulus_;
  return m;
}

std::int64_t Ring::add(std::int64_t a, std::int64_t b) const {
  return static_cast<std::int64_t>(
      (static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)) %
      static_cast<std::uint64_t>(modulus_));
}

std::int64_t Ring::sub(std::int64_t a, std::int64_t b) const {
  std::int64_t d = a - b;
  return d < 0 ? d + modulus_ : d;
}

std::int64_t Ring::mul(std::int64_t a, std::int64_t b) const {
  return mulmod(a, b, modulus_);
}

std::int64_t Ring::neg(std::int64_t a) const { return a == 0 ? 0 : modulus_ - a; }

std::vector<std::int64_t> Ring::padic_digits(std::int64_t a) const {
  a = reduce(a);
  std::vector<std::int64_t> digits(static_cast<std::size_t>(r_));
  for (auto& d : digits) {
    d = a % p_;
    a /= p_;
  }
  return digits;
}

std::int64_t Ring::compose_digits(std::span<const std::int64_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(r_))
    fail(errc::bad_argument, "expected exactly r digits");
  std::int64_t acc = 0;
  std::int64_t place = 1;
  for (std::int64_t d : digits) {
    if (d < 0 || d >= p_) fail(errc::bad_argument, "digit out of range [0, p)");
    acc += d * place;
    place *= p_;
  }
  return acc;
}

std::int64_t Ring::valuation(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) return r_;
  std::int64_t v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

bool Ring::is_unit(std::int64_t a) const { return reduce(a) % p_ != 0; }

std::int64_t Ring::unit_inverse(std::int64_t a) const {
  a = reduce(a);
  if (a % p_ == 0)
    fail(errc::not_a_unit, std::to_string(a) + " is divisible by " +
                               std::to_string(p_) + ", hence not a unit");
  // extended Euclid against the modulus; all intermediates stay below 2^63
  std::int64_t r0 = modulus_, r1 = a;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

}  // namespace zprmod
