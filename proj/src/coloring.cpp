#include "honeycomb/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "honeycomb/errors.hpp"

namespace honeycomb {
namespace {

void check_label(const std::string& label) {
  if (label.empty() ||
      std::any_of(label.begin(), label.end(),
                  [](unsigned char c) { return std::isspace(c) || !std::isprint(c); })) {
    throw PreconditionError("color label must be a nonempty token without whitespace: \"" +
                            label + "\"");
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  // Keeps the smaller root so the earliest slot names the merged color.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Slot {
  std::size_t plan;
  std::size_t coset;
  std::string label;
};

}  // namespace

// --- VertexColoring -------------------------------------------------------

VertexColoring::VertexColoring(std::shared_ptr<const TorusGroup> group,
                               std::vector<ColorId> assignment,
                               std::vector<ColorInfo> colors,
                               ColoringProvenance provenance)
    : group_(std::move(group)),
      assignment_(std::move(assignment)),
      colors_(std::move(colors)),
      provenance_(std::move(provenance)) {
  if (assignment_.size() != group_->vertex_count()) {
    throw PreconditionError("coloring must assign a color to every torus vertex");
  }
  std::vector<bool> used(colors_.size(), false);
  for (ColorId c : assignment_) {
    if (c >= colors_.size()) throw PreconditionError("coloring uses an undefined color id");
    used[c] = true;
  }
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (!used[c]) {
      throw PreconditionError("color '" + colors_[c].label + "' is assigned to no vertex");
    }
  }
  std::set<std::string> labels;
  for (const auto& info : colors_) {
    check_label(info.label);
    if (!labels.insert(info.label).second) {
      throw PreconditionError("duplicate color label '" + info.label + "'");
    }
  }
}

ColorId VertexColoring::color(const TorusVertex& v) const {
  return assignment_[group_->vertex_index(v)];
}

ColorId VertexColoring::color_of(const Vertex& v) const {
  return color(group_->reduce(v));
}

std::optional<ColorId> VertexColoring::find(std::string_view label) const {
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    if (colors_[c].label == label) return static_cast<ColorId>(c);
  }
  return std::nullopt;
}

ColorId VertexColoring::require(std::string_view label) const {
  if (auto c = find(label)) return *c;
  throw PreconditionError("coloring has no color labelled '" + std::string(label) + "'");
}

std::vector<std::vector<TorusVertex>> VertexColoring::classes() const {
  std::vector<std::vector<TorusVertex>> out(colors_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    out[assignment_[v]].push_back(group_->vertex_at(v));
  }
  return out;
}

std::vector<std::size_t> VertexColoring::class_sizes() const {
  std::vector<std::size_t> out(colors_.size(), 0);
  for (ColorId c : assignment_) ++out[c];
  return out;
}

VertexColoring VertexColoring::with_colors(std::vector<ColorInfo> colors) const {
  if (colors.size() != colors_.size()) {
    throw PreconditionError("replacement color table has the wrong size");
  }
  return VertexColoring(group_, assignment_, std::move(colors), provenance_);
}

// --- build_coloring -------------------------------------------------------

VertexColoring build_coloring(const ColoringRecipe& recipe) {
  const TorusSubgroup& h = recipe.h;
  const TorusGroup& g = h.parent();
  const OrbitDecomposition orbits = decompose(h);

  // Planned orbits first, then one implicit J = H plan per unplanned orbit.
  struct ResolvedPlan {
    std::size_t orbit;
    const TorusSubgroup* j;
    std::vector<std::string> labels;
    CosetTable cosets;
    bool background;
  };
  std::vector<ResolvedPlan> plans;
  std::vector<bool> planned(orbits.orbit_count(), false);

  for (const OrbitPlan& plan : recipe.plans) {
    if (plan.orbit >= orbits.orbit_count()) {
      throw PreconditionError("plan refers to orbit " + std::to_string(plan.orbit) +
                              " but H has " + std::to_string(orbits.orbit_count()) +
                              " orbits");
    }
    if (planned[plan.orbit]) {
      throw PreconditionError("orbit " + std::to_string(plan.orbit) + " is planned twice");
    }
    planned[plan.orbit] = true;
    if (plan.j.parent_ptr() != h.parent_ptr()) {
      throw PreconditionError("J and H must live in the same torus group");
    }
    if (!h.contains(plan.j)) {
      throw PreconditionError("J = " + plan.j.description() + " is not contained in H = " +
                              h.description());
    }
    const TorusVertex x = orbits.representatives[plan.orbit];
    if (auto escape = stabilizer_escape(h, x, plan.j)) {
      std::ostringstream os;
      os << "Stab_H" << x << " is not contained in J = " << plan.j.description()
         << ": element " << g.describe(*escape) << " fixes " << x << " but is not in J";
      throw PreconditionError(os.str());
    }
    CosetTable cosets = left_cosets(h, plan.j);
    if (plan.labels.size() != cosets.count()) {
      throw PreconditionError("orbit " + std::to_string(plan.orbit) + " needs " +
                              std::to_string(cosets.count()) + " labels ([H:J] = " +
                              std::to_string(cosets.count()) + "), got " +
                              std::to_string(plan.labels.size()));
    }
    for (const auto& label : plan.labels) check_label(label);
    plans.push_back({plan.orbit, &plan.j, plan.labels, std::move(cosets), false});
  }

  const CosetTable trivial = left_cosets(h, h);
  for (std::size_t o = 0; o < orbits.orbit_count(); ++o) {
    if (planned[o]) continue;
    if (!recipe.background) {
      throw PreconditionError("orbit " + std::to_string(o) + " (representative " +
                              [&] {
                                std::ostringstream os;
                                os << orbits.representatives[o];
                                return os.str();
                              }() +
                              ") has no plan and no background color was given");
    }
    check_label(*recipe.background);
    plans.push_back({o, &h, {*recipe.background}, trivial, true});
  }

  // Slots are (plan, coset) pairs; merging unites slots.
  std::vector<Slot> slots;
  std::vector<std::size_t> first_slot(plans.size());
  for (std::size_t p = 0; p < plans.size(); ++p) {
    first_slot[p] = slots.size();
    std::set<std::string> seen_in_plan;
    for (std::size_t c = 0; c < plans[p].labels.size(); ++c) {
      if (!seen_in_plan.insert(plans[p].labels[c]).second) {
        throw PreconditionError("label '" + plans[p].labels[c] +
                                "' repeats within one orbit; use a larger J instead");
      }
      slots.push_back({p, c, plans[p].labels[c]});
    }
  }

  std::set<std::string> reusable;
  for (const auto& [a, b] : recipe.merges) {
    if (a == b) reusable.insert(a);
  }
  if (recipe.background) reusable.insert(*recipe.background);

  DisjointSets sets(slots.size());
  auto check_merge = [&](std::size_t s1, std::size_t s2) {
    const ResolvedPlan& p1 = plans[slots[s1].plan];
    const ResolvedPlan& p2 = plans[slots[s2].plan];
    const TorusVertex x1 = orbits.representatives[p1.orbit];
    const TorusVertex x2 = orbits.representatives[p2.orbit];
    std::ostringstream why;
    if (!p1.j->same_elements(*p2.j)) {
      why << "orbits " << p1.orbit << " and " << p2.orbit << " use different subgroups J";
    } else if (slots[s1].coset != slots[s2].coset) {
      why << "labels sit on different cosets of J";
    } else if (!stabilizer_contained(h, x1, *p2.j) || !stabilizer_contained(h, x2, *p1.j)) {
      why << "J does not contain the stabilizers of both " << x1 << " and " << x2;
    } else {
      return;
    }
    throw PreconditionError("cannot merge '" + slots[s1].label + "' and '" +
                            slots[s2].label + "': " + why.str());
  };

  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t s = 0; s < slots.size(); ++s) by_label[slots[s].label].push_back(s);
  for (const auto& [label, list] : by_label) {
    if (list.size() > 1 && !reusable.count(label)) {
      throw PreconditionError("duplicate label '" + label + "' without a merge");
    }
    for (std::size_t k = 1; k < list.size(); ++k) {
      check_merge(list[0], list[k]);
      sets.unite(list[0], list[k]);
    }
  }
  for (const auto& [a, b] : recipe.merges) {
    if (a == b) {
      if (!by_label.count(a)) throw PreconditionError("merge names unknown label '" + a + "'");
      continue;
    }
    if (!by_label.count(a) || !by_label.count(b)) {
      throw PreconditionError("merge names unknown label '" + (by_label.count(a) ? b : a) + "'");
    }
    for (std::size_t s1 : by_label[a]) {
      for (std::size_t s2 : by_label[b]) {
        check_merge(s1, s2);
        sets.unite(s1, s2);
      }
    }
  }

  // A merge between two orbits must pair their whole coset systems.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> linked;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (std::size_t t = s + 1; t < slots.size(); ++t) {
      if (slots[s].plan != slots[t].plan && sets.find(s) == sets.find(t)) {
        ++linked[{slots[s].plan, slots[t].plan}];
      }
    }
  }
  for (const auto& [pair, count] : linked) {
    const std::size_t cosets = plans[pair.first].labels.size();
    if (count < cosets) {
      throw PreconditionError("merge between orbits " + std::to_string(plans[pair.first].orbit) +
                              " and " + std::to_string(plans[pair.second].orbit) +
                              " pairs only " + std::to_string(count) + " of " +
                              std::to_string(cosets) +
                              " colors; H would no longer permute the colors");
    }
  }

  std::set<std::string> background_labels(recipe.background_labels.begin(),
                                          recipe.background_labels.end());
  std::vector<ColorId> slot_color(slots.size());
  std::vector<ColorInfo> colors;
  std::map<std::size_t, ColorId> root_color;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const std::size_t root = sets.find(s);
    auto [it, inserted] = root_color.emplace(root, static_cast<ColorId>(colors.size()));
    if (inserted) colors.push_back({slots[root].label, std::nullopt, false});
    slot_color[s] = it->second;
    ColorInfo& info = colors[it->second];
    if (plans[slots[s].plan].background || background_labels.count(slots[s].label)) {
      info.background = true;
    }
  }

  std::vector<ColorId> assignment(g.vertex_count(), 0);
  std::vector<std::size_t> plan_of_orbit(orbits.orbit_count());
  for (std::size_t p = 0; p < plans.size(); ++p) plan_of_orbit[plans[p].orbit] = p;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    const std::size_t p = plan_of_orbit[orbits.orbit_of[v]];
    const auto coset = static_cast<std::size_t>(plans[p].cosets.coset(orbits.witness[v]));
    assignment[v] = slot_color[first_slot[p] + coset];
  }

  ColoringProvenance provenance;
  provenance.group = h.description();
  for (const auto& plan : plans) {
    if (plan.background) continue;
    provenance.plans.push_back({plan.orbit, orbits.representatives[plan.orbit],
                                plan.j->description(), plan.labels});
  }
  provenance.merges = recipe.merges;
  provenance.background = recipe.background;
  return VertexColoring(h.parent_ptr(), std::move(assignment), std::move(colors),
                        std::move(provenance));
}

// --- color action ---------------------------------------------------------

bool ColorPermutation::is_identity() const {
  for (std::size_t c = 0; c < mapping.size(); ++c) {
    if (mapping[c] != c) return false;
  }
  return true;
}

std::optional<ColorPermutation> color_action(const VertexColoring& coloring, ElementId g) {
  const TorusGroup& group = coloring.group();
  constexpr ColorId kUnset = static_cast<ColorId>(-1);
  ColorPermutation out{g, std::vector<ColorId>(coloring.color_count(), kUnset)};
  for (std::size_t v = 0; v < group.vertex_count(); ++v) {
    const ColorId from = coloring.color_at(v);
    const ColorId to = coloring.color_at(group.act(g, v));
    if (out.mapping[from] == kUnset) {
      out.mapping[from] = to;
    } else if (out.mapping[from] != to) {
      return std::nullopt;
    }
  }
  // g is a bijection on vertices, so an injective class map is onto and
  // each class lands exactly on its image class.
  std::vector<bool> hit(coloring.color_count(), false);
  for (ColorId to : out.mapping) {
    if (hit[to]) return std::nullopt;
    hit[to] = true;
  }
  return out;
}

const ColorPermutation& ColorGroup::of(ElementId e) const {
  const auto elems = group.elements();
  const auto it = std::lower_bound(elems.begin(), elems.end(), e);
  if (it == elems.end() || *it != e) {
    throw PreconditionError("element does not permute the colors");
  }
  return sigma[static_cast<std::size_t>(it - elems.begin())];
}

bool ColorGroup::perfect() const { return group.order() == group.parent().order(); }

ColorGroup color_group(const VertexColoring& coloring) {
  const TorusGroup& g = coloring.group();
  std::vector<ElementId> elements;
  std::vector<ColorPermutation> sigma;
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (auto perm = color_action(coloring, static_cast<ElementId>(e))) {
      elements.push_back(static_cast<ElementId>(e));
      sigma.push_back(std::move(*perm));
    }
  }
  ColorGroup out{TorusSubgroup::from_elements(coloring.group_ptr(), elements), std::move(sigma)};
  if (out.group.order() != elements.size()) {
    throw VerificationError("color-permuting elements do not form a group");
  }
  return out;
}

// --- theorem --------------------------------------------------------------

TheoremReport verify_theorem(const TorusSubgroup& h, const TorusSubgroup& j,
                             const TorusVertex& x, const VertexColoring& coloring) {
  const TorusGroup& g = h.parent();
  TheoremReport r;
  const CosetTable cosets = left_cosets(h, j);
  r.index_hj = cosets.count();
  r.j_order = j.order();

  // Coset i <-> color of rep_i . x
  std::vector<ColorId> coset_color(cosets.count());
  for (std::size_t i = 0; i < cosets.count(); ++i) {
    coset_color[i] = coloring.color(g.act(cosets.representatives[i], x));
  }
  std::set<ColorId> orbit_colors;
  const OrbitDecomposition orbits = decompose(h);
  const std::size_t orbit = orbits.orbit_index(x);
  r.orbit_length = orbits.orbits[orbit].size();
  for (const auto& v : orbits.orbits[orbit]) orbit_colors.insert(coloring.color(v));
  r.colors_on_orbit = orbit_colors.size();

  // (1)
  r.equivalence = std::set<ColorId>(coset_color.begin(), coset_color.end()).size() ==
                      cosets.count() &&
                  orbit_colors.size() == cosets.count();
  if (!r.equivalence) {
    r.counterexamples.push_back("coset -> color map on the orbit of x is not a bijection");
  }
  std::vector<std::optional<ColorPermutation>> sigma;
  sigma.reserve(h.order());
  for (ElementId e : h.elements()) {
    sigma.push_back(color_action(coloring, e));
    if (!sigma.back()) {
      r.equivalence = false;
      r.counterexamples.push_back("element " + g.describe(e) + " of H does not permute the colors");
      break;
    }
    for (std::size_t i = 0; i < cosets.count() && r.equivalence; ++i) {
      const auto target = static_cast<std::size_t>(
          cosets.coset(g.compose(e, cosets.representatives[i])));
      if (sigma.back()->mapping[coset_color[i]] != coset_color[target]) {
        r.equivalence = false;
        r.counterexamples.push_back("element " + g.describe(e) + " sends color '" +
                                    coloring.info(coset_color[i]).label +
                                    "' off its coset image");
      }
    }
    if (!r.equivalence) break;
  }

  // (2)
  r.color_count = r.colors_on_orbit == r.index_hj;
  if (!r.color_count) {
    r.counterexamples.push_back("orbit of x carries " + std::to_string(r.colors_on_orbit) +
                                " colors but [H:J] = " + std::to_string(r.index_hj));
  }

  // (3) orbits of sigma(H) on colors
  r.vertex_orbits = orbits.orbit_count();
  if (sigma.size() == h.order()) {
    DisjointSets color_sets(coloring.color_count());
    for (const auto& s : sigma) {
      for (std::size_t c = 0; c < s->mapping.size(); ++c) color_sets.unite(c, s->mapping[c]);
    }
    std::set<std::size_t> roots;
    for (std::size_t c = 0; c < coloring.color_count(); ++c) roots.insert(color_sets.find(c));
    r.color_orbits = roots.size();
    r.orbit_bound = r.color_orbits <= r.vertex_orbits;
  }
  if (!r.orbit_bound) {
    r.counterexamples.push_back("H-orbits of colors exceed H-orbits of vertices or H does not act");
  }

  // (4a), (4b)
  const Stabilizer stab = stabilizer(h, x);
  r.stabilizer_order = stab.order();
  r.stabilizer_in_j = std::all_of(stab.elements.begin(), stab.elements.end(),
                                  [&](ElementId e) { return j.contains(e); });
  if (!r.stabilizer_in_j) {
    for (ElementId e : stab.elements) {
      if (!j.contains(e)) {
        r.counterexamples.push_back("stabilizer element " + g.describe(e) + " is not in J");
        break;
      }
    }
  }
  r.orbit_size = r.stabilizer_in_j &&
                 r.orbit_length == r.index_hj * (r.j_order / r.stabilizer_order);
  if (!r.orbit_size) {
    r.counterexamples.push_back("|Hx| = " + std::to_string(r.orbit_length) +
                                " but [H:J]*[J:Stab] = " + std::to_string(r.index_hj) + "*" +
                                std::to_string(r.j_order / r.stabilizer_order));
  }
  return r;
}

// --- stoichiometry --------------------------------------------------------

std::string Stoichiometry::ratio_text() const {
  std::string out;
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(ratio[i]);
  }
  return out;
}

Stoichiometry stoichiometry(const VertexColoring& coloring,
                            const StoichiometryOptions& options) {
  const auto sizes = coloring.class_sizes();
  Stoichiometry out;
  if (options.order.empty()) {
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (options.exclude_background && coloring.info(static_cast<ColorId>(c)).background) {
        continue;
      }
      out.counts.push_back({coloring.info(static_cast<ColorId>(c)).label, sizes[c]});
    }
  } else {
    for (const auto& label : options.order) {
      out.counts.push_back({label, sizes[coloring.require(label)]});
    }
  }
  std::size_t divisor = 0;
  for (const auto& lc : out.counts) divisor = std::gcd(divisor, lc.count);
  for (const auto& lc : out.counts) out.ratio.push_back(divisor ? lc.count / divisor : 0);
  return out;
}

// --- text form ------------------------------------------------------------

std::string serialize(const VertexColoring& coloring) {
  std::ostringstream os;
  os << "modulus " << coloring.modulus() << '\n';
  for (const auto& info : coloring.colors()) {
    os << "color " << info.label;
    if (info.element) os << " element " << *info.element;
    if (info.background) os << " background";
    os << '\n';
  }
  const TorusGroup& g = coloring.group();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const TorusVertex tv = g.vertex_at(v);
    os << tv.x() << ' ' << tv.y() << ' ' << tv.z() << ' '
       << coloring.info(coloring.color_at(v)).label << '\n';
  }
  return os.str();
}

VertexColoring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("coloring line " + std::to_string(line_no) + ": " + what);
  };

  std::shared_ptr<const TorusGroup> group;
  std::vector<ColorInfo> colors;
  std::map<std::string, ColorId> ids;
  std::vector<ColorId> assignment;
  std::vector<bool> assigned;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "modulus") {
      int n = 0;
      if (group || !(ls >> n)) fail("bad or repeated modulus line");
      try {
        group = build_group(n);
      } catch (const PreconditionError& e) {
        fail(e.what());
      }
      assignment.assign(group->vertex_count(), 0);
      assigned.assign(group->vertex_count(), false);
    } else if (head == "color") {
      ColorInfo info;
      if (!(ls >> info.label)) fail("color line without label");
      std::string word;
      while (ls >> word) {
        if (word == "element") {
          std::string symbol;
          if (!(ls >> symbol)) fail("element keyword without symbol");
          info.element = symbol;
        } else if (word == "background") {
          info.background = true;
        } else {
          fail("unknown color attribute '" + word + "'");
        }
      }
      if (!ids.emplace(info.label, static_cast<ColorId>(colors.size())).second) {
        fail("duplicate color '" + info.label + "'");
      }
      colors.push_back(std::move(info));
    } else {
      if (!group) fail("vertex line before modulus");
      int x = 0, y = 0, z = 0;
      std::string label, extra;
      std::istringstream vs(line);
      if (!(vs >> x >> y >> z >> label) || (vs >> extra)) fail("expected 'x y z label'");
      const int n = group->modulus();
      if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) fail("vertex outside torus");
      const auto it = ids.find(label);
      if (it == ids.end()) fail("unknown color '" + label + "'");
      const std::size_t v = group->vertex_index({x, y, z});
      if (assigned[v]) fail("vertex listed twice");
      assigned[v] = true;
      assignment[v] = it->second;
    }
  }
  if (!group) throw ParseError("coloring has no modulus line");
  if (std::find(assigned.begin(), assigned.end(), false) != assigned.end()) {
    throw ParseError("coloring does not cover every torus vertex");
  }
  try {
    return VertexColoring(group, std::move(assignment), std::move(colors));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace honeycomb
