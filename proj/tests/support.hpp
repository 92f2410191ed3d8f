#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "honeycomb/coloring.hpp"
#include "honeycomb/presentation.hpp"
#include "honeycomb/quotient.hpp"
#include "oracle.hpp"

namespace support {

inline honeycomb::ElementId to_id(const honeycomb::TorusGroup& g, const oracle::Affine& a) {
  return g.id({honeycomb::SignedPermutation::from_matrix(a.m), a.t});
}

inline std::set<honeycomb::ElementId> to_ids(const honeycomb::TorusGroup& g,
                                             const std::vector<oracle::Affine>& as) {
  std::set<honeycomb::ElementId> out;
  for (const auto& a : as) out.insert(to_id(g, a));
  return out;
}

inline oracle::V to_v(const honeycomb::TorusVertex& v) { return {v.x(), v.y(), v.z()}; }

inline std::set<honeycomb::ElementId> ids(const honeycomb::TorusSubgroup& s) {
  return {s.elements().begin(), s.elements().end()};
}

// Color classes of a coloring as vertex sets, for partition comparisons.
inline std::set<std::set<oracle::V>> class_sets(const honeycomb::VertexColoring& c) {
  std::set<std::set<oracle::V>> out;
  for (const auto& cls : c.classes()) {
    std::set<oracle::V> s;
    for (const auto& v : cls) s.insert(to_v(v));
    out.insert(std::move(s));
  }
  return out;
}

// Uniform random word over {P,Q,R,S}.
inline std::string random_letters(std::mt19937& rng, std::size_t max_len) {
  static const char kLetters[] = "PQRS";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) out += kLetters[pick(rng)];
  return out;
}

}  // namespace support
