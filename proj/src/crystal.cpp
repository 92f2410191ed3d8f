#include "honeycomb/crystal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "honeycomb/errors.hpp"

namespace honeycomb {
namespace {

struct PresetDefinition {
  const char* name;
  const std::vector<std::string>* group;
  struct Plan {
    Vertex vertex;
    const std::vector<std::string>* j;
    std::vector<std::string> labels;
  };
  std::vector<Plan> plans;
  std::vector<std::pair<std::string, std::string>> merges;
  std::optional<std::string> background;
  std::vector<std::string> background_labels;
  std::vector<ElementSite> sites;
};

const std::vector<PresetDefinition>& presets() {
  using namespace subgroups;
  static const std::vector<PresetDefinition> defs = {
      {"rock-salt", &kFull,
       {{{0, 0, 0}, &kParity, {"light-blue", "white"}}},
       {}, std::nullopt, {},
       {{"light-blue", "Na"}, {"white", "Cl"}}},
      {"NbO", &kBodyCentred,
       {{{1, 0, 1}, &kDoubledCell, {"dark-blue", "green"}}},
       {}, "white", {},
       {{"green", "Nb"}, {"dark-blue", "O"}}},
      {"ReO3", &kDoubledCell,
       {{{0, 0, 0}, &kDoubledCell, {"red"}},
        {{1, 0, 0}, &kDoubledCell, {"orange"}},
        {{1, 1, 0}, &kDoubledCell, {"white"}},
        {{1, 1, 1}, &kDoubledCell, {"white"}}},
       {{"white", "white"}}, std::nullopt, {"white"},
       {{"red", "Re"}, {"orange", "O"}}},
      {"perovskite", &kDoubledCell,
       {{{0, 0, 0}, &kDoubledCell, {"black"}},
        {{1, 0, 0}, &kDoubledCell, {"white"}},
        {{1, 1, 0}, &kDoubledCell, {"brown"}},
        {{1, 1, 1}, &kDoubledCell, {"yellow"}}},
       {}, std::nullopt, {"white"},
       {{"black", "Ca"}, {"yellow", "Ti"}, {"brown", "O"}}},
  };
  return defs;
}

const PresetDefinition& find_preset(std::string_view name) {
  for (const auto& def : presets()) {
    if (name == def.name) return def;
  }
  std::string known;
  for (const auto& def : presets()) known += std::string(known.empty() ? "" : ", ") + def.name;
  throw PreconditionError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

void compute_formula(CrystalModel& model) {
  const auto sizes = model.coloring.class_sizes();
  // Same symbol on several sites is summed at its first position.
  std::vector<std::pair<std::string, std::size_t>> totals;
  for (const auto& site : model.sites) {
    const std::size_t n = sizes[model.coloring.require(site.label)];
    auto it = std::find_if(totals.begin(), totals.end(),
                           [&](const auto& t) { return t.first == site.element; });
    if (it == totals.end()) {
      totals.emplace_back(site.element, n);
    } else {
      it->second += n;
    }
  }
  std::size_t divisor = 0;
  for (const auto& t : totals) divisor = std::gcd(divisor, t.second);
  model.formula.clear();
  model.subscripts.clear();
  for (const auto& [symbol, count] : totals) {
    const std::size_t k = divisor ? count / divisor : 0;
    model.subscripts.push_back(k);
    model.formula += symbol;
    if (k != 1) model.formula += std::to_string(k);
  }
}

bool valid_symbol(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) &&
         std::all_of(s.begin() + 1, s.end(),
                     [](unsigned char c) { return std::islower(c); });
}

}  // namespace

TorusSubgroup certified_subgroup(std::shared_ptr<const TorusGroup> group,
                                 const std::vector<std::string>& words, std::size_t radius) {
  auto outcome = certify_translations(build_subgroup(std::move(group), parse_words(words)), radius);
  if (!outcome.found) {
    throw VerificationError("no translation certificate for " +
                            outcome.subgroup.description() + " within radius " +
                            std::to_string(radius));
  }
  return std::move(outcome.subgroup);
}

std::string CrystalModel::element_of(ColorId c) const {
  const auto& label = coloring.info(c).label;
  for (const auto& site : sites) {
    if (site.label == label) return site.element;
  }
  return {};
}

CrystalModel make_model(std::string family, TorusSubgroup group,
                        const VertexColoring& coloring, std::vector<ElementSite> sites) {
  std::set<std::string> expected;
  for (const auto& info : coloring.colors()) {
    if (!info.background) expected.insert(info.label);
  }
  std::set<std::string> given;
  for (const auto& site : sites) {
    if (!expected.count(site.label)) {
      throw PreconditionError("element map names '" + site.label +
                              "', which is not a non-background color");
    }
    if (!given.insert(site.label).second) {
      throw PreconditionError("element map lists '" + site.label + "' twice");
    }
    if (!valid_symbol(site.element)) {
      throw PreconditionError("'" + site.element + "' is not an element symbol");
    }
  }
  for (const auto& label : expected) {
    if (!given.count(label)) {
      throw PreconditionError("element map is missing color '" + label + "'");
    }
  }

  std::vector<ColorInfo> colors(coloring.colors().begin(), coloring.colors().end());
  for (auto& info : colors) {
    info.element.reset();
    for (const auto& site : sites) {
      if (site.label == info.label) info.element = site.element;
    }
  }
  CrystalModel model{std::move(family), std::move(group), coloring.with_colors(std::move(colors)),
                     std::move(sites), {}, {}};
  compute_formula(model);
  return model;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& def : presets()) out.emplace_back(def.name);
  return out;
}

ColoringRecipe preset_recipe(std::string_view name, std::shared_ptr<const TorusGroup> group) {
  const PresetDefinition& def = find_preset(name);
  ColoringRecipe recipe;
  recipe.h = certified_subgroup(group, *def.group);
  const OrbitDecomposition orbits = decompose(recipe.h);
  for (const auto& plan : def.plans) {
    recipe.plans.push_back({orbits.orbit_index(group->reduce(plan.vertex)),
                            certified_subgroup(group, *plan.j), plan.labels});
  }
  recipe.merges = def.merges;
  recipe.background = def.background;
  recipe.background_labels = def.background_labels;
  return recipe;
}

CrystalModel preset(std::string_view name, int modulus) {
  const PresetDefinition& def = find_preset(name);
  auto group = build_group(modulus);
  ColoringRecipe recipe = preset_recipe(name, group);
  const VertexColoring coloring = build_coloring(recipe);
  return make_model(def.name, recipe.h, coloring, def.sites);
}

CrystalModel substitute(const CrystalModel& model, std::vector<ElementSite> sites) {
  return make_model(model.family, model.group, model.coloring, std::move(sites));
}

}  // namespace honeycomb
