#include "honeycomb/job.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"

#include "honeycomb/errors.hpp"
#include "honeycomb/orbits.hpp"
#include "honeycomb/presentation.hpp"

namespace honeycomb {
namespace {

using nlohmann::json;

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(std::string(where) + ": unknown key '" + key + "'");
  }
}

template <typename T>
T get(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) {
    throw ParseError(std::string(where) + ": missing key '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(where) + ": key '" + key + "' has the wrong type");
  }
}

Vertex to_vertex(const json& j, std::string_view where) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(std::string(where) + ": expected [x, y, z]");
  }
  std::array<Coord, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw ParseError(std::string(where) + ": coordinates must be integers");
    c[i] = j[i].get<Coord>();
  }
  return Vertex{c[0], c[1], c[2]};
}

std::vector<std::pair<std::string, std::string>> to_pairs(const json& j, std::string_view where) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected a list of pairs");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw ParseError(std::string(where) + ": expected [\"a\", \"b\"]");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

PlanConfig parse_plan(const json& j, const std::string& where) {
  check_keys(j, where, {"vertex", "orbit", "subgroup", "labels"});
  PlanConfig plan;
  if (j.contains("vertex") == j.contains("orbit")) {
    throw ParseError(where + ": give exactly one of 'vertex' or 'orbit'");
  }
  if (j.contains("vertex")) plan.vertex = to_vertex(j.at("vertex"), where + ".vertex");
  if (j.contains("orbit")) plan.orbit = get<std::size_t>(j, "orbit", where);
  plan.subgroup = get<std::string>(j, "subgroup", where);
  plan.labels = get<std::vector<std::string>>(j, "labels", where);
  return plan;
}

ColoringConfig parse_coloring_config(const json& j, const std::string& where) {
  check_keys(j, where, {"name", "group", "plans", "merges", "background", "background_labels",
                        "family", "elements"});
  ColoringConfig c;
  c.name = get<std::string>(j, "name", where);
  c.group = get<std::string>(j, "group", where);
  const json& plans = j.contains("plans") ? j.at("plans") : json::array();
  if (!plans.is_array()) throw ParseError(where + ".plans: expected a list");
  for (std::size_t i = 0; i < plans.size(); ++i) {
    c.plans.push_back(parse_plan(plans[i], where + ".plans[" + std::to_string(i) + "]"));
  }
  if (j.contains("merges")) c.merges = to_pairs(j.at("merges"), where + ".merges");
  if (j.contains("background")) c.background = get<std::string>(j, "background", where);
  if (j.contains("background_labels")) {
    c.background_labels = get<std::vector<std::string>>(j, "background_labels", where);
  }
  c.family = j.contains("family") ? get<std::string>(j, "family", where) : c.name;
  if (j.contains("elements")) {
    for (auto& [label, symbol] : to_pairs(j.at("elements"), where + ".elements")) {
      c.elements.push_back({std::move(label), std::move(symbol)});
    }
  }
  return c;
}

ExportConfig parse_export(const json& j, const std::string& where) {
  check_keys(j, where, {"coloring", "format", "periods", "region", "path"});
  ExportConfig e;
  e.coloring = get<std::string>(j, "coloring", where);
  e.format = parse_export_format(get<std::string>(j, "format", where));
  e.path = get<std::string>(j, "path", where);
  if (j.contains("periods") && j.contains("region")) {
    throw ParseError(where + ": give at most one of 'periods' or 'region'");
  }
  if (j.contains("region")) {
    const json& r = j.at("region");
    check_keys(r, where + ".region", {"lo", "hi"});
    if (!r.contains("lo") || !r.contains("hi")) throw ParseError(where + ".region: needs lo and hi");
    e.region = {to_vertex(r.at("lo"), where + ".region.lo"), to_vertex(r.at("hi"), where + ".region.hi")};
  } else {
    std::array<int, 3> p{1, 1, 1};
    if (j.contains("periods")) {
      const Vertex v = to_vertex(j.at("periods"), where + ".periods");
      for (std::size_t i = 0; i < 3; ++i) {
        if (v[i] < 0 || v[i] > 64) throw ParseError(where + ".periods: expected 0..64");
        p[i] = static_cast<int>(v[i]);
      }
    }
    e.periods = p;
  }
  const std::filesystem::path path(e.path);
  if (e.path.empty() || path.is_absolute()) {
    throw ParseError(where + ".path: must be a nonempty relative path");
  }
  for (const auto& part : path) {
    if (part == "..") throw ParseError(where + ".path: must not leave the output directory");
  }
  return e;
}

struct Built {
  TorusSubgroup h;
  OrbitDecomposition orbits;
  std::vector<std::pair<std::size_t, TorusSubgroup>> plan_js;  // orbit, J
  VertexColoring coloring;
};

class Session {
 public:
  Session(const JobConfig& config, int modulus)
      : config_(config), group_(build_group(modulus)) {}

  const std::shared_ptr<const TorusGroup>& group() const { return group_; }

  const TorusSubgroup& subgroup(const std::string& name) {
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    const auto def = config_.subgroups.find(name);
    if (def == config_.subgroups.end()) {
      throw PreconditionError("undefined subgroup '" + name + "'");
    }
    auto outcome = certify_translations(build_subgroup(group_, parse_words(def->second)),
                                        config_.radius);
    if (!outcome.found) {
      throw VerificationError(
          "subgroup '" + name + "' = " + outcome.subgroup.description() +
          " has no translation certificate within radius " + std::to_string(config_.radius) +
          (outcome.exhausted ? " (its exact closure is finite, so it never will)"
                             : "; retry with a larger --radius"));
    }
    return cache_.emplace(name, std::move(outcome.subgroup)).first->second;
  }

  Built build(const ColoringConfig& c) {
    ColoringRecipe recipe;
    recipe.h = subgroup(c.group);
    OrbitDecomposition orbits = decompose(recipe.h);
    std::vector<std::pair<std::size_t, TorusSubgroup>> plan_js;
    for (const auto& p : c.plans) {
      std::size_t orbit = 0;
      if (p.vertex) {
        orbit = orbits.orbit_index(group_->reduce(*p.vertex));
      } else {
        orbit = *p.orbit;
        if (orbit >= orbits.orbit_count()) {
          throw PreconditionError("coloring '" + c.name + "': orbit " + std::to_string(orbit) +
                                  " out of range (H has " + std::to_string(orbits.orbit_count()) +
                                  " orbits)");
        }
      }
      const TorusSubgroup& j = subgroup(p.subgroup);
      recipe.plans.push_back({orbit, j, p.labels});
      plan_js.emplace_back(orbit, j);
    }
    recipe.merges = c.merges;
    recipe.background = c.background;
    recipe.background_labels = c.background_labels;
    VertexColoring coloring = build_coloring(recipe);
    return {recipe.h, std::move(orbits), std::move(plan_js), std::move(coloring)};
  }

 private:
  const JobConfig& config_;
  std::shared_ptr<const TorusGroup> group_;
  std::map<std::string, TorusSubgroup> cache_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

// J used for each orbit: the plan's J, or H for unplanned orbits.
TorusSubgroup j_for(const Built& b, std::size_t orbit) {
  for (const auto& [o, j] : b.plan_js) {
    if (o == orbit) return j;
  }
  return b.h;
}

struct Summary {
  std::size_t index_h = 0;
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::size_t> class_sizes;
  std::size_t color_group_index = 0;
  bool perfect = false;
};

Summary summarize(const Built& b, const ColorGroup& cg) {
  Summary s;
  s.index_h = index(b.h.parent(), b.h).value;
  s.orbit_count = b.orbits.orbit_count();
  for (const auto& o : b.orbits.orbits) s.orbit_sizes.push_back(o.size());
  s.class_sizes = b.coloring.class_sizes();
  s.color_group_index = index(b.h.parent(), cg.group).value;
  s.perfect = cg.perfect();
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

JobConfig parse_job(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  check_keys(root, "config", {"modulus", "cross_check", "radius", "subgroups", "colorings", "exports"});
  JobConfig config;
  if (root.contains("modulus")) config.modulus = get<int>(root, "modulus", "config");
  if (root.contains("cross_check")) config.cross_check = get<bool>(root, "cross_check", "config");
  if (root.contains("radius")) config.radius = get<std::size_t>(root, "radius", "config");
  if (root.contains("subgroups")) {
    const json& subs = root.at("subgroups");
    if (!subs.is_object()) throw ParseError("config.subgroups: expected an object");
    for (const auto& [name, words] : subs.items()) {
      if (!words.is_array()) throw ParseError("config.subgroups." + name + ": expected a list of words");
      auto list = get<std::vector<std::string>>(subs, name.c_str(), "config.subgroups");
      for (std::size_t i = 0; i < list.size(); ++i) {
        try {
          (void)GeneratorWord::parse(list[i]);
        } catch (const ParseError& e) {
          throw ParseError("config.subgroups." + name + "[" + std::to_string(i) + "]: " + e.what());
        }
      }
      config.subgroups.emplace(name, std::move(list));
    }
  }
  if (root.contains("colorings")) {
    const json& cs = root.at("colorings");
    if (!cs.is_array()) throw ParseError("config.colorings: expected a list");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      config.colorings.push_back(parse_coloring_config(cs[i], "config.colorings[" + std::to_string(i) + "]"));
    }
  }
  if (root.contains("exports")) {
    const json& es = root.at("exports");
    if (!es.is_array()) throw ParseError("config.exports: expected a list");
    for (std::size_t i = 0; i < es.size(); ++i) {
      config.exports.push_back(parse_export(es[i], "config.exports[" + std::to_string(i) + "]"));
    }
  }

  std::set<std::string> names;
  for (const auto& c : config.colorings) {
    if (!names.insert(c.name).second) throw PreconditionError("duplicate coloring name '" + c.name + "'");
    if (!config.subgroups.count(c.group)) {
      throw PreconditionError("coloring '" + c.name + "' uses undefined subgroup '" + c.group + "'");
    }
    for (const auto& p : c.plans) {
      if (!config.subgroups.count(p.subgroup)) {
        throw PreconditionError("coloring '" + c.name + "' uses undefined subgroup '" + p.subgroup + "'");
      }
    }
  }
  std::set<std::string> paths;
  for (const auto& e : config.exports) {
    const auto it = std::find_if(config.colorings.begin(), config.colorings.end(),
                                 [&](const ColoringConfig& c) { return c.name == e.coloring; });
    if (it == config.colorings.end()) {
      throw PreconditionError("export refers to undefined coloring '" + e.coloring + "'");
    }
    if (it->elements.empty()) {
      throw PreconditionError("export of '" + e.coloring + "' needs an element map");
    }
    if (!paths.insert(e.path).second) throw PreconditionError("duplicate export path '" + e.path + "'");
  }
  return config;
}

JobResult run_job(const JobConfig& config) {
  JobResult result;
  std::ostringstream log;
  Session session(config, config.modulus);
  const TorusGroup& g = *session.group();
  log << "modulus " << g.modulus() << ", |G| = " << g.order() << '\n';

  std::map<std::string, CrystalModel> models;
  for (const auto& c : config.colorings) {
    const Built b = session.build(c);
    const IndexResult ih = index(g, b.h);
    log << "\ncoloring " << c.name << '\n';
    log << "  H = " << b.h.description() << " (" << c.group << "): order " << b.h.order()
        << ", index " << ih.value << " (" << ih.label() << ")\n";
    log << "  H-orbits: " << b.orbits.orbit_count() << '\n';

    for (std::size_t o = 0; o < b.orbits.orbit_count(); ++o) {
      const TorusVertex& x = b.orbits.representatives[o];
      const TorusSubgroup j = j_for(b, o);
      const TheoremReport r = verify_theorem(b.h, j, x, b.coloring);
      log << "  orbit " << o << " x = " << x << " |Hx| = " << b.orbits.orbits[o].size()
          << " J = " << j.description() << " [H:J] = " << r.index_hj
          << " |Stab_H(x)| = " << r.stabilizer_order << '\n';
      log << "    theorem: (1) " << pass_fail(r.equivalence) << "  (2) " << pass_fail(r.color_count)
          << "  (3) " << pass_fail(r.orbit_bound) << "  (4a) " << pass_fail(r.stabilizer_in_j)
          << "  (4b) " << pass_fail(r.orbit_size) << "  " << r.orbit_length << " = "
          << r.index_hj << "*" << r.j_order / r.stabilizer_order << '\n';
      for (const auto& ce : r.counterexamples) log << "    counterexample: " << ce << '\n';
      result.verified = result.verified && r.passed();
    }

    const ColorGroup cg = color_group(b.coloring);
    const IndexResult icg = index(g, cg.group);
    log << "  colors: " << b.coloring.color_count() << '\n';
    const auto sizes = b.coloring.class_sizes();
    for (std::size_t k = 0; k < b.coloring.color_count(); ++k) {
      const ColorInfo& info = b.coloring.info(static_cast<ColorId>(k));
      log << "    " << info.label << ": " << sizes[k] << (info.background ? " (background)" : "") << '\n';
    }
    log << "  color group: order " << cg.group.order() << ", index " << icg.value
        << ", equals H: " << yes_no(cg.group.same_elements(b.h))
        << ", perfect: " << yes_no(cg.perfect()) << '\n';
    for (Generator gen : {Generator::P, Generator::Q, Generator::R, Generator::S}) {
      const auto action = color_action(b.coloring, g.project_id(generator(gen)));
      log << "    " << to_char(gen) << ": ";
      if (!action) {
        log << "undefined\n";
        continue;
      }
      for (std::size_t k = 0; k < action->mapping.size(); ++k) {
        log << (k ? " " : "") << b.coloring.info(static_cast<ColorId>(k)).label << "->"
            << b.coloring.info(action->mapping[k]).label;
      }
      log << '\n';
    }
    StoichiometryOptions so;
    for (const auto& site : c.elements) so.order.push_back(site.label);
    const Stoichiometry st = stoichiometry(b.coloring, so);
    log << "  ratio (";
    for (std::size_t k = 0; k < st.counts.size(); ++k) log << (k ? ":" : "") << st.counts[k].label;
    log << "): " << st.ratio_text() << '\n';

    result.files.push_back({c.name + ".coloring", serialize(b.coloring), JobFile::Kind::coloring});
    if (!c.elements.empty()) {
      CrystalModel model = make_model(c.family, b.h, b.coloring, c.elements);
      log << "  formula: " << model.formula << '\n';
      models.emplace(c.name, std::move(model));
    }

    if (config.cross_check) {
      Session wide(config, 2 * config.modulus);
      const Built w = wide.build(c);
      const Summary at_n = summarize(b, cg);
      const Summary at_2n = summarize(w, color_group(w.coloring));
      std::vector<std::string> mismatches;
      if (at_n.index_h != at_2n.index_h) mismatches.push_back("index of H");
      if (at_n.orbit_count != at_2n.orbit_count) mismatches.push_back("orbit count");
      std::vector<std::size_t> scaled;
      for (auto s : at_n.orbit_sizes) scaled.push_back(8 * s);
      if (scaled != at_2n.orbit_sizes) mismatches.push_back("orbit sizes");
      scaled.clear();
      for (auto s : at_n.class_sizes) scaled.push_back(8 * s);
      if (scaled != at_2n.class_sizes) mismatches.push_back("color class sizes");
      if (at_n.color_group_index != at_2n.color_group_index) mismatches.push_back("color group index");
      if (at_n.perfect != at_2n.perfect) mismatches.push_back("perfection");
      log << "  cross-check N=" << 2 * config.modulus << ": index " << at_2n.index_h
          << ", orbit sizes " << join(at_2n.orbit_sizes) << ", class sizes "
          << join(at_2n.class_sizes) << ", color group index " << at_2n.color_group_index << ": ";
      if (mismatches.empty()) {
        log << "agree\n";
      } else {
        log << "DISAGREE on";
        for (const auto& m : mismatches) log << ' ' << m;
        log << '\n';
        result.verified = false;
      }
    }
  }

  if (!config.exports.empty()) log << '\n';
  for (const auto& e : config.exports) {
    const CrystalModel& model = models.at(e.coloring);
    const Box region = e.periods ? Box::periods(config.modulus, (*e.periods)[0], (*e.periods)[1], (*e.periods)[2])
                                 : e.region;
    result.files.push_back({e.path, export_model(model, e.format, region), JobFile::Kind::model});
    log << "export " << e.coloring << " as " << to_string(e.format) << " -> " << e.path << '\n';
  }
  log << "\nverification: " << (result.verified ? "passed" : "FAILED") << '\n';
  result.log = log.str();
  return result;
}

void write_files(const std::vector<JobFile>& files, const std::string& out_dir) {
  namespace fs = std::filesystem;
  for (const auto& f : files) {
    const fs::path target = fs::path(out_dir) / f.path;
    std::error_code ec;
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create " + target.parent_path().string() + ": " + ec.message());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out << f.content;
    out.close();
    if (!out) throw IoError("cannot write " + target.string());
  }
}

}  // namespace honeycomb
