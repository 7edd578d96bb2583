#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/ring.hpp"

namespace zprmod {

/// An element of Z_{p^r}^n. Coordinates are stored canonically; construction
/// reduces whatever it is given.
class Vec {
 public:
  Vec(const Ring& ring, std::vector<std::int64_t> coords)
      : ring_(ring), coords_(std::move(coords)) {
    if (coords_.empty())
      fail(errc::bad_argument, "vectors need at least one coordinate");
    for (auto& c : coords_) c = ring_.reduce(c);
  }

  static Vec zero(const Ring& ring, std::size_t n) {
    return Vec(ring, std::vector<std::int64_t>(n, 0));
  }

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const {
    for (std::int64_t c : coords_)
      if (c != 0) return false;
    return true;
  }

  Vec scaled(std::int64_t c) const {
    c = ring_.reduce(c);
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = ring_.mul(coords_[i], c);
    return Vec(ring_, std::move(out));
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_compatible(a, b);
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.ring_.add(a[i], b[i]);
    return Vec(a.ring_, std::move(out));
  }

  friend Vec operator-(const Vec& a, const Vec& b) {
    check_compatible(a, b);
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.ring_.sub(a[i], b[i]);
    return Vec(a.ring_, std::move(out));
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

  /// Lexicographic coordinate order; only meaningful within one ambient space.
  friend bool operator<(const Vec& a, const Vec& b) { return a.coords_ < b.coords_; }

  static void check_compatible(const Vec& a, const Vec& b) {
    if (!(a.ring_ == b.ring_) || a.size() != b.size())
      fail(errc::dimension_mismatch, "vectors live in different ambient spaces");
  }

 private:
  Ring ring_;
  std::vector<std::int64_t> coords_;
};

}  // namespace zprmod
