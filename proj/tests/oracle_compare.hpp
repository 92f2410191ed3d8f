#pragma once

#include <string>
#include <vector>

#include "honeycomb/coloring.hpp"
#include "oracle.hpp"

namespace oracle {

struct PlanCase {
  V vertex;                          // any vertex of the orbit
  std::vector<std::string> j;        // expanded letter words
  std::vector<std::string> labels;   // at most two: later cosets are unordered
};

struct ColoringCase {
  std::string name;
  std::vector<std::string> h;        // expanded letter words
  std::vector<PlanCase> plans;
  std::string background;            // label of unplanned orbits
};

struct Finding {
  std::string check;
  bool passed = false;
};

// Recomputes the coloring described by `expected` at N = 2 by enumeration and
// compares every derived quantity with the library's `coloring`.
std::vector<Finding> compare(const ColoringCase& expected, const honeycomb::VertexColoring& coloring);

}  // namespace oracle
