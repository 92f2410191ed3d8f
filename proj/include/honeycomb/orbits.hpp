#pragma once

#include <optional>
#include <vector>

#include "honeycomb/quotient.hpp"

namespace honeycomb {

/*!
 * Orbits of a subgroup acting on the N^3 torus vertices.
 *
 * Orbits are discovered by breadth-first expansion from each unvisited
 * vertex in lexicographic order, using only the subgroup's generators, so
 * each representative is the lexicographically smallest vertex of its orbit
 * and orbit indices are deterministic. witness[v] is a subgroup element
 * sending the representative of v's orbit to v.
 */
struct OrbitDecomposition {
  TorusSubgroup subgroup;
  std::vector<std::vector<TorusVertex>> orbits;  // each sorted
  std::vector<TorusVertex> representatives;
  std::vector<std::size_t> orbit_of;  // by vertex index
  std::vector<ElementId> witness;     // by vertex index

  std::size_t orbit_count() const { return orbits.size(); }
  std::size_t orbit_index(const TorusVertex& v) const;
  ElementId witness_for(const TorusVertex& v) const;
  // Exact when the subgroup carries a translation certificate.
  bool exact() const { return subgroup.certified(); }
};

OrbitDecomposition decompose(const TorusSubgroup& subgroup);

struct Stabilizer {
  TorusVertex vertex;
  std::vector<ElementId> elements;  // canonical order

  std::size_t order() const { return elements.size(); }
};

// All elements of the subgroup fixing v modulo N.
Stabilizer stabilizer(const TorusSubgroup& subgroup, const TorusVertex& v);

// First stabilizer element (canonical order) of v in `subgroup` that is not
// in `j`, if any.
std::optional<ElementId> stabilizer_escape(const TorusSubgroup& subgroup,
                                           const TorusVertex& v,
                                           const TorusSubgroup& j);

bool stabilizer_contained(const TorusSubgroup& subgroup, const TorusVertex& v,
                          const TorusSubgroup& j);

}  // namespace honeycomb
