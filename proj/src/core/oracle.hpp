#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/ring.hpp"
#include "core/vec.hpp"

namespace zprmod::oracle {

/// Cap on enumerated states. Every oracle routine refuses inputs whose
/// enumeration would exceed it.
struct EnumerationGuard {
  std::size_t max_states = std::size_t{1} << 16;
};

/// Exact span {sum c_j v_j : c_j in Z_{p^r}} by additive closure.
/// Output is lexicographically sorted.
std::vector<Vec> enumerate_span(const Ring& ring, std::size_t n,
                                const std::vector<Vec>& gens,
                                EnumerationGuard guard = {});

struct PSpanResult {
  std::vector<Vec> elements;  // sorted, duplicates removed
  bool collision = false;     // two digit tuples produced the same vector
};

/// All p-linear combinations (digits in [0, p)) of the sequence.
PSpanResult enumerate_p_span(const Ring& ring, std::size_t n,
                             const std::vector<Vec>& seq,
                             EnumerationGuard guard = {});

/// All ambient vectors orthogonal to every element of the given set.
std::vector<Vec> brute_dual(const Ring& ring, std::size_t n,
                            const std::vector<Vec>& elements,
                            EnumerationGuard guard = {});

struct BruteIndependence {
  bool independent = false;
  /// First (lexicographically) nonzero digit tuple summing to zero.
  std::optional<std::vector<std::int64_t>> witness;
};

/// Exhaustive p-linear independence check over all digit tuples.
BruteIndependence brute_p_independent(const Ring& ring, std::size_t n,
                                      const std::vector<Vec>& vectors,
                                      EnumerationGuard guard = {});

}  // namespace zprmod::oracle
