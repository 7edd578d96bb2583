#include "core/pbasis.hpp"

#include <set>
#include <utility>

#include "core/error.hpp"
#include "core/oracle.hpp"

namespace zprmod {

namespace {

void check_ambient(const Ring& ring, std::size_t n, const std::vector<Vec>& vs) {
  for (const Vec& v : vs)
    if (v.size() != n || !(v.ring() == ring))
      fail(errc::dimension_mismatch, "vector outside the ambient space");
}

bool pow_within(std::int64_t base, std::size_t exp, std::size_t cap) {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    acc *= static_cast<unsigned __int128>(base);
    if (acc > cap) return false;
  }
  return true;
}

std::set<Vec> enumerate_module(const Module& m, std::size_t max_states) {
  std::set<Vec> seen;
  std::vector<Vec> frontier;
  Vec z = Vec::zero(m.ring(), m.length());
  seen.insert(z);
  frontier.push_back(z);
  const auto& gens = m.standard_form().rows();
  while (!frontier.empty()) {
    Vec cur = frontier.back();
    frontier.pop_back();
    for (const Vec& g : gens) {
      Vec next = cur + g;
      if (seen.insert(next).second) {
        if (seen.size() > max_states)
          fail(errc::too_large, "suffix p-span enumeration exceeds the guard");
        frontier.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

SequenceCheck is_p_generator_sequence(const Ring& ring, std::size_t n,
                                      const std::vector<Vec>& seq,
                                      std::size_t max_states) {
  check_ambient(ring, n, seq);
  if (seq.empty()) return {true, std::nullopt};

  std::optional<std::size_t> violation;
  bool suffix_clean = true;                        // all checks beyond i passed
  Module suffix_module = Module::zero(ring, n);    // span of seq[i+1..]
  std::set<Vec> suffix_pspan;                      // p-span, once materialized

  for (std::size_t i = seq.size(); i-- > 0;) {
    Vec pv = seq[i].scaled(ring.prime());
    bool ok = suffix_clean ? suffix_module.contains(pv)
                           : suffix_pspan.count(pv) > 0;
    if (!ok) {
      violation = i;
      if (suffix_clean) {
        // the suffix is a p-generator sequence, so its p-span is its span
        suffix_pspan = enumerate_module(suffix_module, max_states);
        suffix_clean = false;
      }
    }
    if (i == 0) break;
    if (suffix_clean) {
      std::vector<Vec> gens = suffix_module.standard_form().rows();
      gens.push_back(seq[i]);
      suffix_module = Module::from_generators(ring, n, gens);
    } else {
      std::set<Vec> next;
      for (std::int64_t a = 0; a < ring.prime(); ++a) {
        Vec term = seq[i].scaled(a);
        for (const Vec& s : suffix_pspan) {
          next.insert(term + s);
          if (next.size() > max_states)
            fail(errc::too_large, "suffix p-span enumeration exceeds the guard");
        }
      }
      suffix_pspan = std::move(next);
    }
  }
  return {!violation.has_value(), violation};
}

IndependenceCheck is_p_independent(const Ring& ring, std::size_t n,
                                   const std::vector<Vec>& family,
                                   std::size_t max_states) {
  check_ambient(ring, n, family);
  const std::size_t k = family.size();
  if (k == 0) return {true, std::nullopt};
  if (k == 1) {
    if (family[0].is_zero()) return {false, std::vector<std::int64_t>{1}};
    return {true, std::nullopt};
  }

  bool is_sequence = false;
  try {
    is_sequence = is_p_generator_sequence(ring, n, family, max_states).ok;
  } catch (const error& e) {
    if (e.code() != errc::too_large) throw;
  }

  if (is_sequence) {
    // For a p-generator sequence the digit map is injective exactly when the
    // span has p^k elements.
    Module span = Module::from_generators(ring, n, family);
    if (span.p_dimension() == static_cast<std::int64_t>(k))
      return {true, std::nullopt};
    if (!pow_within(ring.prime(), k, max_states)) return {false, std::nullopt};
    auto brute = oracle::brute_p_independent(ring, n, family, {max_states});
    return {false, brute.witness};
  }

  if (!pow_within(ring.prime(), k, max_states))
    fail(errc::too_large, "independence check exceeds the digit-tuple guard");
  auto brute = oracle::brute_p_independent(ring, n, family, {max_states});
  return {brute.independent, brute.witness};
}

PBasis::PBasis(const Ring& ring, std::size_t n, std::vector<Vec> vectors)
    : ring_(ring), n_(n), vectors_(std::move(vectors)) {
  check_ambient(ring_, n_, vectors_);
  const std::size_t k = vectors_.size();

  suffix_modules_.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    std::vector<Vec> tail(vectors_.begin() + static_cast<std::ptrdiff_t>(i),
                          vectors_.end());
    suffix_modules_.push_back(Module::from_generators(ring_, n_, tail));
  }

  // p-generator sequence: p*v_i must land in the span of the strict suffix,
  // which equals its p-span while the conditions hold from the back.
  for (std::size_t i = k; i-- > 0;) {
    if (!suffix_modules_[i + 1].contains(vectors_[i].scaled(ring_.prime())))
      fail(errc::bad_argument,
           "not a p-generator sequence (violated at index " + std::to_string(i) + ")");
  }

  // Independence: the span of a p-generator sequence has p^k elements
  // exactly when the digit map is injective.
  if (suffix_modules_.front().p_dimension() != static_cast<std::int64_t>(k))
    fail(errc::bad_argument, "not p-linearly independent");

  min_exponents_.resize(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t t = 1;
    while (t < ring_.exponent() &&
           !suffix_modules_[i + 1].contains(vectors_[i].scaled(ring_.pow_p(t))))
      ++t;
    min_exponents_[i] = t;  // p^r * v == 0 lies in every span
  }
}

PBasis PBasis::checked(const Ring& ring, std::size_t n, std::vector<Vec> vectors) {
  return PBasis(ring, n, std::move(vectors));
}

PBasis PBasis::from_module(const Module& m) {
  const StandardForm& sf = m.standard_form();
  const Ring& ring = m.ring();
  std::vector<Vec> chain;
  for (std::size_t j = 0; j < sf.row_count(); ++j) {
    const Vec& g = sf.rows()[j];
    for (std::int64_t t = 0; t < ring.exponent() - sf.row_levels()[j]; ++t)
      chain.push_back(g.scaled(ring.pow_p(t)));
  }
  return PBasis(ring, m.length(), std::move(chain));
}

PBasis::Coordinates PBasis::coordinates(const Vec& v) const {
  if (v.size() != n_ || !(v.ring() == ring_))
    fail(errc::dimension_mismatch, "vector outside the ambient space");

  const std::size_t k = vectors_.size();
  Vec w = v;
  std::vector<std::int64_t> digits(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const StandardForm& sf = suffix_modules_[i].standard_form();
    auto mem = sf.membership(w);
    if (!mem.member) return {};
    // particular ring coefficient of vectors_[i] in w over the suffix system
    std::int64_t particular = 0;
    for (std::size_t j = 0; j < mem.coeffs.size(); ++j)
      particular = ring_.add(particular,
                             ring_.mul(mem.coeffs[j], sf.transform()[j][0]));
    // the unique digit agrees with any ring solution mod p^{min_exponent}
    std::int64_t digit = particular % ring_.pow_p(min_exponents_[i]);
    if (digit >= ring_.prime()) return {};
    digits[i] = digit;
    if (digit != 0) w = w - vectors_[i].scaled(digit);
  }
  if (!w.is_zero()) return {};
  return {true, std::move(digits)};
}

Module socle(const Module& m) {
  const StandardForm& sf = m.standard_form();
  const Ring& ring = m.ring();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < sf.row_count(); ++j)
    gens.push_back(sf.rows()[j].scaled(ring.pow_p(ring.exponent() - 1 - sf.row_levels()[j])));
  return Module::from_generators(ring, m.length(), gens);
}

PBasis extend_p_basis(const PBasis& sub, const Module& m) {
  const Ring& ring = m.ring();
  if (sub.length() != m.length() || !(sub.ring() == ring))
    fail(errc::dimension_mismatch, "basis and module ambient spaces differ");
  for (const Vec& v : sub.vectors())
    if (!m.contains(v))
      fail(errc::not_a_submodule, "basis vector outside the target module");

  std::vector<Vec> current = sub.vectors();
  Module span = Module::from_generators(ring, m.length(), current);
  const std::vector<Vec> candidates = PBasis::from_module(m).vectors();

  while (span.p_dimension() < m.p_dimension()) {
    const Vec* outside = nullptr;
    for (const Vec& c : candidates) {
      if (!span.contains(c)) {
        outside = &c;
        break;
      }
    }
    if (outside == nullptr)
      fail(errc::internal, "no chain vector outside a proper subspan");

    std::int64_t t = 1;
    while (t < ring.exponent() &&
           !span.contains(outside->scaled(ring.pow_p(t))))
      ++t;
    current.insert(current.begin(), outside->scaled(ring.pow_p(t - 1)));
    span = Module::from_generators(ring, m.length(), current);
  }
  return PBasis::checked(ring, m.length(), std::move(current));
}

}  // namespace zprmod
