#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "honeycomb/crystal.hpp"

namespace honeycomb {

/// Half-open box of honeycomb vertices lo <= v < hi, in unit cells.
struct Box {
  Vertex lo;
  Vertex hi;

  bool empty() const;
  std::size_t vertex_count() const;
  // a x b x c copies of the N^3 period, anchored at the origin.
  static Box periods(int modulus, int a, int b, int c);
};

enum class ExportFormat { xyz, off, report };

ExportFormat parse_export_format(std::string_view text);  // throws ParseError
std::string_view to_string(ExportFormat format);

struct OffOptions {
  bool cube_faces = true;   // false: colored point cloud (COFF, no faces)
  double half_size = 0.2;   // cube half-edge around each site
};

// Atom count, comment line, then "Symbol x y z" per occupied site in
// lexicographic vertex order. Vacancies are omitted.
std::string export_xyz(const CrystalModel& model, const Box& region);
// Every site, vacancies included, colored by the fixed label palette.
std::string export_off(const CrystalModel& model, const Box& region,
                       const OffOptions& options = {});
std::string export_report(const CrystalModel& model);

std::string export_model(const CrystalModel& model, ExportFormat format, const Box& region);

struct RGB {
  double r = 0, g = 0, b = 0;
};
// Fixed palette for the color names used by the bundled models; other
// labels cycle through a neutral list by color id.
RGB palette_color(std::string_view label, std::size_t color_id);

struct XyzAtom {
  std::string symbol;
  Vertex position;
};
struct XyzDocument {
  std::string comment;
  std::vector<XyzAtom> atoms;
};
XyzDocument parse_xyz(std::string_view text);  // throws ParseError

}  // namespace honeycomb
