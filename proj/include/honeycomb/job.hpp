#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "honeycomb/crystal.hpp"
#include "honeycomb/export.hpp"

namespace honeycomb {

struct PlanConfig {
  // Exactly one of vertex / orbit selects the H-orbit. A vertex is reduced
  // mod N; labels[0] always colors J.x for the orbit's lexicographically
  // smallest vertex x.
  std::optional<Vertex> vertex;
  std::optional<std::size_t> orbit;
  std::string subgroup;  // J
  std::vector<std::string> labels;
};

struct ColoringConfig {
  std::string name;
  std::string group;  // H
  std::vector<PlanConfig> plans;
  std::vector<std::pair<std::string, std::string>> merges;
  std::optional<std::string> background;
  std::vector<std::string> background_labels;
  std::string family;
  std::vector<ElementSite> elements;  // empty: no crystal model
};

struct ExportConfig {
  std::string coloring;
  ExportFormat format = ExportFormat::xyz;
  // Copies of the N-period along each axis, resolved at run time; when
  // unset, `region` (in unit cells) is used as given.
  std::optional<std::array<int, 3>> periods;
  Box region;
  std::string path;
};

struct JobConfig {
  int modulus = 2;
  bool cross_check = false;
  std::size_t radius = kDefaultCertificateRadius;
  std::map<std::string, std::vector<std::string>> subgroups;
  std::vector<ColoringConfig> colorings;
  std::vector<ExportConfig> exports;
};

// Throws ParseError on malformed JSON, unknown keys or bad words, and
// PreconditionError on dangling subgroup/coloring names.
JobConfig parse_job(std::string_view json_text);

struct JobFile {
  enum class Kind { coloring, model };
  std::string path;  // relative to the output directory
  std::string content;
  Kind kind = Kind::coloring;
};

struct JobResult {
  std::vector<JobFile> files;
  std::string log;
  bool verified = true;  // every theorem check and cross-check passed
};

/*!
 * Runs every coloring of the config at its modulus: builds certified
 * subgroups, colorings, theorem reports, color groups and stoichiometry,
 * then renders the export requests. With cross_check the subgroup indices,
 * orbit structure and color counts are recomputed at 2N and compared.
 * Output is a pure function of the config.
 */
JobResult run_job(const JobConfig& config);

// Writes the files below `out_dir`, creating directories. Throws IoError.
void write_files(const std::vector<JobFile>& files, const std::string& out_dir);

}  // namespace honeycomb
