#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "honeycomb/orbits.hpp"
#include "honeycomb/quotient.hpp"

namespace honeycomb {

using ColorId = std::uint32_t;

struct ColorInfo {
  std::string label;
  std::optional<std::string> element;
  // Vacancy-style color: a genuine color class, excluded from stoichiometry.
  bool background = false;

  friend bool operator==(const ColorInfo&, const ColorInfo&) = default;
};

struct PlanProvenance {
  std::size_t orbit = 0;
  TorusVertex representative;
  std::string subgroup;  // J
  std::vector<std::string> labels;
};

struct ColoringProvenance {
  std::string group;  // H
  std::vector<PlanProvenance> plans;
  std::vector<std::pair<std::string, std::string>> merges;
  std::optional<std::string> background;
};

/*!
 * Surjective map from the N^3 torus vertices to dense color ids, read as an
 * N-periodic coloring of the honeycomb. Immutable once built.
 */
class VertexColoring {
 public:
  // Throws PreconditionError if the assignment is not total over the torus,
  // refers to unknown colors, or leaves a color unused.
  VertexColoring(std::shared_ptr<const TorusGroup> group,
                 std::vector<ColorId> assignment, std::vector<ColorInfo> colors,
                 ColoringProvenance provenance = {});

  int modulus() const { return group_->modulus(); }
  const TorusGroup& group() const { return *group_; }
  const std::shared_ptr<const TorusGroup>& group_ptr() const { return group_; }

  ColorId color(const TorusVertex& v) const;
  ColorId color_at(std::size_t vertex_index) const { return assignment_[vertex_index]; }
  // Color of an arbitrary honeycomb vertex by periodicity.
  ColorId color_of(const Vertex& v) const;

  std::span<const ColorId> assignment() const { return assignment_; }
  std::span<const ColorInfo> colors() const { return colors_; }
  std::size_t color_count() const { return colors_.size(); }
  const ColorInfo& info(ColorId c) const { return colors_[c]; }
  std::optional<ColorId> find(std::string_view label) const;
  ColorId require(std::string_view label) const;  // throws PreconditionError

  // Vertices of each color class, lexicographic.
  std::vector<std::vector<TorusVertex>> classes() const;
  std::vector<std::size_t> class_sizes() const;

  const ColoringProvenance& provenance() const { return provenance_; }

  // Same assignment with a different color table (labels may change,
  // class structure may not).
  VertexColoring with_colors(std::vector<ColorInfo> colors) const;

 private:
  std::shared_ptr<const TorusGroup> group_;
  std::vector<ColorId> assignment_;
  std::vector<ColorInfo> colors_;
  ColoringProvenance provenance_;
};

/// Coloring instructions for one H-orbit: the orbit's vertices in coset
/// hJ.x get labels[coset id]; labels[0] therefore colors J.x itself.
struct OrbitPlan {
  std::size_t orbit = 0;  // index into decompose(H)
  TorusSubgroup j;
  std::vector<std::string> labels;  // exactly [H : J] entries
};

struct ColoringRecipe {
  TorusSubgroup h;
  std::vector<OrbitPlan> plans;
  // (a, b): the classes labelled a and b become one color named after the
  // first slot that carries either label. (a, a) authorizes reusing a on
  // several orbits.
  std::vector<std::pair<std::string, std::string>> merges;
  // Shared color for every orbit without a plan; flagged background.
  std::optional<std::string> background;
  // Planned labels that should also be flagged background.
  std::vector<std::string> background_labels;
};

/*!
 * Builds a coloring by the orbit/coset procedure:
 *
 *  1. decompose X into H-orbits;
 *  2. for each planned orbit with representative x, require
 *     Stab_H(x) <= J;
 *  3. give each set hJx its own color, [H:J] colors per orbit;
 *  4. allow two orbits to share colors only when they use the same J
 *     (which then holds both stabilizers) and whole coset systems are
 *     merged position by position.
 *
 * Unplanned orbits take the background color, equivalent to J = H.
 * Violations throw PreconditionError naming the offending element, label,
 * or orbit.
 */
VertexColoring build_coloring(const ColoringRecipe& recipe);

struct ColorPermutation {
  ElementId element = 0;
  std::vector<ColorId> mapping;  // mapping[c] = image color

  bool is_identity() const;
  friend bool operator==(const ColorPermutation&, const ColorPermutation&) = default;
};

// The permutation g induces on the color classes, or nullopt when some
// class is not carried onto a single class.
std::optional<ColorPermutation> color_action(const VertexColoring& coloring,
                                             ElementId g);

struct ColorGroup {
  TorusSubgroup group;
  std::vector<ColorPermutation> sigma;  // aligned with group.elements()

  const ColorPermutation& of(ElementId e) const;
  // Every element of the full torus group permutes the colors.
  bool perfect() const;
};

ColorGroup color_group(const VertexColoring& coloring);

struct TheoremReport {
  // (1) coset action on {hJ} matches the H-action on the colors of Hx
  bool equivalence = false;
  // (2) colors on Hx == [H:J]
  bool color_count = false;
  // (3) H-orbits of colors <= H-orbits of vertices
  bool orbit_bound = false;
  // (4a) Stab_H(x) <= J
  bool stabilizer_in_j = false;
  // (4b) |Hx| == [H:J] * [J:Stab_H(x)], per torus period
  bool orbit_size = false;

  std::size_t index_hj = 0;
  std::size_t colors_on_orbit = 0;
  std::size_t color_orbits = 0;
  std::size_t vertex_orbits = 0;
  std::size_t orbit_length = 0;
  std::size_t stabilizer_order = 0;
  std::size_t j_order = 0;
  std::vector<std::string> counterexamples;

  bool passed() const {
    return equivalence && color_count && orbit_bound && stabilizer_in_j && orbit_size;
  }
};

TheoremReport verify_theorem(const TorusSubgroup& h, const TorusSubgroup& j,
                             const TorusVertex& x, const VertexColoring& coloring);

struct LabelCount {
  std::string label;
  std::size_t count = 0;
};

struct Stoichiometry {
  std::vector<LabelCount> counts;  // per N^3 box
  std::vector<std::size_t> ratio;  // counts divided by their gcd
  std::string ratio_text() const;  // "1:3"
};

struct StoichiometryOptions {
  bool exclude_background = true;
  // Report only these labels, in this order; empty means every counted
  // color in id order.
  std::vector<std::string> order;
};

Stoichiometry stoichiometry(const VertexColoring& coloring,
                            const StoichiometryOptions& options = {});

// Text form:
//   modulus N
//   color <label> [element <symbol>] [background]     (one per color id)
//   x y z <label>                                     (lexicographic)
std::string serialize(const VertexColoring& coloring);
VertexColoring parse_coloring(std::string_view text);

}  // namespace honeycomb
