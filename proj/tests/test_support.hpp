#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "core/module.hpp"
#include "core/ring.hpp"
#include "core/vec.hpp"

namespace testsupport {

using zprmod::Module;
using zprmod::Ring;
using zprmod::Vec;

inline Ring z8() { return Ring(2, 3); }

inline Vec vec(const Ring& ring, std::vector<std::int64_t> coords) {
  return Vec(ring, std::move(coords));
}

// The 16-element submodule of Z_8^3 generated by (2,0,1) and (0,4,0).
inline std::vector<Vec> demo_generators() {
  Ring ring = z8();
  return {vec(ring, {2, 0, 1}), vec(ring, {0, 4, 0})};
}

inline Module demo_module() {
  return Module::from_generators(z8(), 3, demo_generators());
}

inline std::vector<Vec> demo_elements() {
  Ring ring = z8();
  std::vector<Vec> out;
  for (auto coords : std::initializer_list<std::vector<std::int64_t>>{
           {0, 0, 0}, {2, 0, 1}, {4, 0, 2}, {6, 0, 3}, {0, 0, 4}, {2, 0, 5},
           {4, 0, 6}, {6, 0, 7}, {0, 4, 0}, {2, 4, 1}, {4, 4, 2}, {6, 4, 3},
           {0, 4, 4}, {2, 4, 5}, {4, 4, 6}, {6, 4, 7}})
    out.push_back(vec(ring, std::move(coords)));
  return out;
}

inline std::set<Vec> to_set(const std::vector<Vec>& vs) {
  return {vs.begin(), vs.end()};
}

inline std::vector<Vec> random_generators(const Ring& ring, std::size_t n,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count_dist(0, n + 1);
  std::uniform_int_distribution<std::int64_t> entry_dist(0, ring.modulus() - 1);
  std::vector<Vec> out;
  const std::size_t count = count_dist(rng);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> coords(n);
    for (auto& c : coords) c = entry_dist(rng);
    out.emplace_back(ring, std::move(coords));
  }
  return out;
}

}  // namespace testsupport
