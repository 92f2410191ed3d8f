#include "honeycomb/export.hpp"

#include <array>
#include <iomanip>
#include <map>
#include <sstream>

#include "honeycomb/errors.hpp"
#include "honeycomb/orbits.hpp"

namespace honeycomb {
namespace {

template <typename F>
void for_each_vertex(const Box& box, F&& f) {
  for (Coord x = box.lo.x(); x < box.hi.x(); ++x) {
    for (Coord y = box.lo.y(); y < box.hi.y(); ++y) {
      for (Coord z = box.lo.z(); z < box.hi.z(); ++z) f(Vertex{x, y, z});
    }
  }
}

std::string box_text(const Box& box) {
  std::ostringstream os;
  os << '[' << box.lo.x() << ',' << box.lo.y() << ',' << box.lo.z() << ")-("
     << box.hi.x() << ',' << box.hi.y() << ',' << box.hi.z() << ')';
  return os.str();
}

}  // namespace

bool Box::empty() const {
  return hi.x() <= lo.x() || hi.y() <= lo.y() || hi.z() <= lo.z();
}

std::size_t Box::vertex_count() const {
  if (empty()) return 0;
  return static_cast<std::size_t>((hi.x() - lo.x()) * (hi.y() - lo.y()) * (hi.z() - lo.z()));
}

Box Box::periods(int modulus, int a, int b, int c) {
  return {{0, 0, 0}, {Coord{a} * modulus, Coord{b} * modulus, Coord{c} * modulus}};
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "xyz") return ExportFormat::xyz;
  if (text == "off") return ExportFormat::off;
  if (text == "report") return ExportFormat::report;
  throw ParseError("unknown export format '" + std::string(text) + "' (xyz, off, report)");
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::xyz: return "xyz";
    case ExportFormat::off: return "off";
    case ExportFormat::report: return "report";
  }
  return "?";
}

RGB palette_color(std::string_view label, std::size_t color_id) {
  static const std::map<std::string, RGB, std::less<>> kNamed = {
      {"light-blue", {0.530, 0.810, 0.980}}, {"white", {1.000, 1.000, 1.000}},
      {"dark-blue", {0.000, 0.000, 0.545}},  {"green", {0.000, 0.502, 0.000}},
      {"red", {0.863, 0.078, 0.235}},        {"orange", {1.000, 0.549, 0.000}},
      {"black", {0.000, 0.000, 0.000}},      {"brown", {0.545, 0.271, 0.075}},
      {"yellow", {1.000, 0.843, 0.000}},
  };
  static const std::array<RGB, 6> kCycle = {{{0.500, 0.500, 0.500},
                                             {0.800, 0.400, 0.800},
                                             {0.400, 0.800, 0.800},
                                             {0.800, 0.800, 0.400},
                                             {0.300, 0.300, 0.700},
                                             {0.700, 0.300, 0.300}}};
  if (auto it = kNamed.find(label); it != kNamed.end()) return it->second;
  return kCycle[color_id % kCycle.size()];
}

std::string export_xyz(const CrystalModel& model, const Box& region) {
  std::vector<std::pair<std::string, Vertex>> atoms;
  if (!region.empty()) {
    for_each_vertex(region, [&](const Vertex& v) {
      std::string symbol = model.element_of(model.coloring.color_of(v));
      if (!symbol.empty()) atoms.emplace_back(std::move(symbol), v);
    });
  }
  std::ostringstream os;
  os << atoms.size() << '\n';
  os << model.formula << " family=" << model.family << " modulus=" << model.coloring.modulus()
     << " H=" << model.coloring.provenance().group << " region=" << box_text(region) << '\n';
  for (const auto& [symbol, v] : atoms) {
    os << symbol << ' ' << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  }
  return os.str();
}

std::string export_off(const CrystalModel& model, const Box& region, const OffOptions& options) {
  std::vector<std::pair<Vertex, ColorId>> sites;
  if (!region.empty()) {
    for_each_vertex(region, [&](const Vertex& v) {
      sites.emplace_back(v, model.coloring.color_of(v));
    });
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  auto rgb = [&](ColorId c) {
    const RGB col = palette_color(model.coloring.info(c).label, c);
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << col.r << ' ' << col.g << ' ' << col.b;
    return s.str();
  };

  if (!options.cube_faces) {
    os << "COFF\n" << sites.size() << " 0 0\n";
    for (const auto& [v, c] : sites) {
      os << static_cast<double>(v.x()) << ' ' << static_cast<double>(v.y()) << ' '
         << static_cast<double>(v.z()) << ' ' << rgb(c) << " 1.000\n";
    }
    return os.str();
  }

  // Cube corners in bit order (dx, dy, dz), faces wound outward.
  static constexpr std::array<std::array<int, 4>, 6> kFaces = {{
      {0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}}};
  os << "OFF\n" << sites.size() * 8 << ' ' << sites.size() * 6 << " 0\n";
  const double h = options.half_size;
  for (const auto& [v, c] : sites) {
    for (int corner = 0; corner < 8; ++corner) {
      os << static_cast<double>(v.x()) + ((corner & 4) ? h : -h) << ' '
         << static_cast<double>(v.y()) + ((corner & 2) ? h : -h) << ' '
         << static_cast<double>(v.z()) + ((corner & 1) ? h : -h) << '\n';
    }
  }
  for (std::size_t s = 0; s < sites.size(); ++s) {
    const std::size_t base = s * 8;
    for (const auto& face : kFaces) {
      os << 4;
      for (int k : face) os << ' ' << base + static_cast<std::size_t>(k);
      os << ' ' << rgb(sites[s].second) << '\n';
    }
  }
  return os.str();
}

std::string export_report(const CrystalModel& model) {
  const VertexColoring& coloring = model.coloring;
  const TorusGroup& g = coloring.group();
  const int n = g.modulus();
  std::ostringstream os;
  os << "model: " << model.family << '\n';
  os << "formula: " << model.formula << '\n';
  os << "modulus: " << n << " (period " << n << "x" << n << "x" << n << ", "
     << g.vertex_count() << " vertices)\n";
  os << "|G_" << n << "|: " << g.order() << '\n';

  const TorusSubgroup& h = model.group;
  const IndexResult ih = index(g, h);
  os << "H = " << h.description() << ": order " << h.order() << ", index " << ih.value << " ("
     << ih.label() << ")\n";

  const OrbitDecomposition orbits = decompose(h);
  os << "H-orbits: " << orbits.orbit_count() << '\n';
  for (std::size_t o = 0; o < orbits.orbit_count(); ++o) {
    const TorusVertex& x = orbits.representatives[o];
    os << "  orbit " << o << ": representative " << x << ", size " << orbits.orbits[o].size()
       << ", |Stab_H| " << stabilizer(h, x).order() << '\n';
  }

  const ColorGroup cg = color_group(coloring);
  const IndexResult icg = index(g, cg.group);
  os << "color group: order " << cg.group.order() << ", index " << icg.value << ", "
     << (cg.perfect() ? "perfect" : "not perfect") << ", equals H: "
     << (cg.group.same_elements(h) ? "yes" : "no") << '\n';

  os << "colors:\n";
  const auto sizes = coloring.class_sizes();
  for (std::size_t c = 0; c < coloring.color_count(); ++c) {
    const auto& info = coloring.info(static_cast<ColorId>(c));
    os << "  " << info.label << ": " << sizes[c] << " per period, ";
    if (info.background) {
      os << "vacancy";
    } else {
      os << "element " << (info.element ? *info.element : std::string("?"));
    }
    os << '\n';
  }
  StoichiometryOptions opts;
  for (const auto& site : model.sites) opts.order.push_back(site.label);
  const Stoichiometry st = stoichiometry(coloring, opts);
  os << "ratio (";
  for (std::size_t i = 0; i < model.sites.size(); ++i) {
    os << (i ? ":" : "") << model.sites[i].element;
  }
  os << "): " << st.ratio_text() << '\n';
  return os.str();
}

std::string export_model(const CrystalModel& model, ExportFormat format, const Box& region) {
  switch (format) {
    case ExportFormat::xyz: return export_xyz(model, region);
    case ExportFormat::off: return export_off(model, region);
    case ExportFormat::report: return export_report(model);
  }
  return {};
}

XyzDocument parse_xyz(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  XyzDocument doc;
  std::size_t count = 0;
  if (!std::getline(in, line)) throw ParseError("xyz: missing atom count");
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> count) || (ls >> extra)) throw ParseError("xyz: bad atom count line");
  }
  if (!std::getline(in, doc.comment)) throw ParseError("xyz: missing comment line");
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("xyz: fewer atoms than announced");
    std::istringstream ls(line);
    XyzAtom atom;
    Coord x = 0, y = 0, z = 0;
    if (!(ls >> atom.symbol >> x >> y >> z)) {
      throw ParseError("xyz: bad atom line " + std::to_string(i + 1));
    }
    atom.position = {x, y, z};
    doc.atoms.push_back(std::move(atom));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("xyz: trailing content after atoms");
    }
  }
  return doc;
}

}  // namespace honeycomb
