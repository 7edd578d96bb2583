#include "core/oracle.hpp"

#include <set>

#include "core/error.hpp"

namespace zprmod::oracle {

namespace {

void check_ambient(const Ring& ring, std::size_t n, const std::vector<Vec>& vs) {
  for (const Vec& v : vs)
    if (v.size() != n || !(v.ring() == ring))
      fail(errc::dimension_mismatch, "vector outside the ambient space");
}

// true iff base^exp <= cap
bool pow_within(std::int64_t base, std::size_t exp, std::size_t cap) {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    acc *= static_cast<unsigned __int128>(base);
    if (acc > cap) return false;
  }
  return true;
}

// Odometer over tuples in [0, base)^k, earliest position most significant.
bool advance(std::vector<std::int64_t>& tuple, std::int64_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<Vec> enumerate_span(const Ring& ring, std::size_t n,
                                const std::vector<Vec>& gens,
                                EnumerationGuard guard) {
  check_ambient(ring, n, gens);
  std::set<Vec> seen;
  std::vector<Vec> frontier;
  Vec z = Vec::zero(ring, n);
  seen.insert(z);
  frontier.push_back(z);
  while (!frontier.empty()) {
    Vec cur = frontier.back();
    frontier.pop_back();
    for (const Vec& g : gens) {
      Vec next = cur + g;
      if (seen.insert(next).second) {
        if (seen.size() > guard.max_states)
          fail(errc::too_large, "span enumeration exceeds the state guard");
        frontier.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

PSpanResult enumerate_p_span(const Ring& ring, std::size_t n,
                             const std::vector<Vec>& seq,
                             EnumerationGuard guard) {
  check_ambient(ring, n, seq);
  if (!pow_within(ring.prime(), seq.size(), guard.max_states))
    fail(errc::too_large, "p-span enumeration exceeds the state guard");

  std::set<Vec> out;
  std::size_t tuples = 0;
  std::vector<std::int64_t> digits(seq.size(), 0);
  do {
    Vec sum = Vec::zero(ring, n);
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (digits[j] != 0) sum = sum + seq[j].scaled(digits[j]);
    out.insert(sum);
    ++tuples;
  } while (!seq.empty() && advance(digits, ring.prime()));

  PSpanResult result;
  result.collision = out.size() < tuples;
  result.elements.assign(out.begin(), out.end());
  return result;
}

std::vector<Vec> brute_dual(const Ring& ring, std::size_t n,
                            const std::vector<Vec>& elements,
                            EnumerationGuard guard) {
  check_ambient(ring, n, elements);
  if (!pow_within(ring.modulus(), n, guard.max_states))
    fail(errc::too_large, "ambient enumeration exceeds the state guard");

  std::vector<Vec> out;
  std::vector<std::int64_t> coords(n, 0);
  do {
    Vec candidate(ring, coords);
    bool orthogonal = true;
    for (const Vec& u : elements) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < n; ++i)
        dot = ring.add(dot, ring.mul(u[i], candidate[i]));
      if (dot != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.push_back(candidate);
  } while (advance(coords, ring.modulus()));
  return out;  // odometer order is already lexicographic
}

BruteIndependence brute_p_independent(const Ring& ring, std::size_t n,
                                      const std::vector<Vec>& vectors,
                                      EnumerationGuard guard) {
  check_ambient(ring, n, vectors);
  if (vectors.empty()) return {true, std::nullopt};
  if (!pow_within(ring.prime(), vectors.size(), guard.max_states))
    fail(errc::too_large, "digit enumeration exceeds the state guard");

  std::vector<std::int64_t> digits(vectors.size(), 0);
  while (advance(digits, ring.prime())) {
    Vec sum = Vec::zero(ring, n);
    for (std::size_t j = 0; j < vectors.size(); ++j)
      if (digits[j] != 0) sum = sum + vectors[j].scaled(digits[j]);
    if (sum.is_zero()) return {false, digits};
  }
  return {true, std::nullopt};
}

}  // namespace zprmod::oracle
