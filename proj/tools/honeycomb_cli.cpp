// Command-line driver over the honeycomb library.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violated,
// 4 verification failed, 5 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/export.hpp"
#include "honeycomb/job.hpp"
#include "honeycomb/orbits.hpp"
#include "honeycomb/presentation.hpp"

namespace {

using namespace honeycomb;

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kVerification = 4;
constexpr int kIo = 5;

struct Options {
  int modulus = 2;
  std::string config;
  std::string out_dir;
  std::size_t radius = kDefaultCertificateRadius;
  bool cross_check = false;
  bool modulus_given = false;
  bool radius_given = false;
  bool fault_inject = false;
  std::vector<std::string> words;
  std::vector<std::string> within;
  std::string preset;
  std::string format = "xyz";
  std::vector<int> periods{1, 1, 1};
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_check(const Options& opt) {
  const GeneratorSet& gens = opt.fault_inject ? GeneratorSet::perturbed() : GeneratorSet::standard();
  bool ok = true;
  std::cout << "relators" << (opt.fault_inject ? " (perturbed P)" : "") << ":\n";
  for (const auto& r : check_presentation(gens)) {
    std::cout << "  " << r.name << " = " << r.value << "  " << (r.passed ? "ok" : "FAIL") << '\n';
    ok = ok && r.passed;
  }
  const DihedralReport d = dihedral_angle_check(gens);
  std::cout << "dihedral angles:\n";
  for (const auto& a : d.angles) {
    std::cout << "  " << to_char(a.first) << to_char(a.second) << ": " << a.angle.str()
              << "  order " << a.product_order << (a.consistent ? "" : "  inconsistent") << '\n';
  }
  std::cout << "multiset {pi/4, pi/3, pi/4, pi/2, pi/2, pi/2}: "
            << (d.multiset_matches ? "ok" : "FAIL") << '\n';
  ok = ok && d.passed();
  return ok ? kOk : kVerification;
}

TorusSubgroup certified(const std::shared_ptr<const TorusGroup>& g, const std::vector<std::string>& words,
                        std::size_t radius, bool& ok) {
  auto outcome = certify_translations(build_subgroup(g, parse_words(words)), radius);
  if (!outcome.found) {
    ok = false;
    std::cout << "  " << outcome.subgroup.description() << ": no certificate within radius "
              << radius
              << (outcome.exhausted ? " (closure is finite; the group is not a lattice group)\n"
                                    : "; retry with a larger --radius\n");
  }
  return std::move(outcome.subgroup);
}

int cmd_subgroup(const Options& opt) {
  bool ok = true;
  std::vector<std::size_t> values;
  for (int n : {opt.modulus, 2 * opt.modulus}) {
    auto g = build_group(n);
    const TorusSubgroup s = certified(g, opt.words, opt.radius, ok);
    std::cout << "N=" << n << ": " << s.description() << " order " << s.order();
    IndexResult idx;
    if (opt.within.empty()) {
      idx = index(*g, s);
    } else {
      const TorusSubgroup outer = certified(g, opt.within, opt.radius, ok);
      if (!outer.contains(s)) {
        throw PreconditionError(s.description() + " is not contained in " + outer.description());
      }
      std::cout << ", inside " << outer.description() << " of order " << outer.order();
      idx = index(outer, s);
    }
    std::cout << ", index " << idx.value << " (" << idx.label() << ")\n";
    if (const auto& cert = s.certificate()) {
      std::cout << "  certificate (radius " << cert->radius << "):";
      for (const auto& w : cert->witnesses) std::cout << ' ' << w.size() << "-letter word";
      std::cout << '\n';
    }
    values.push_back(idx.value);
  }
  const bool agree = values[0] == values[1];
  std::cout << "index agreement N=" << opt.modulus << " vs N=" << 2 * opt.modulus << ": "
            << (agree ? "yes" : "NO") << '\n';
  return ok && agree ? kOk : kVerification;
}

int cmd_orbits(const Options& opt) {
  bool ok = true;
  auto g = build_group(opt.modulus);
  const TorusSubgroup s = certified(g, opt.words, opt.radius, ok);
  const OrbitDecomposition d = decompose(s);
  std::cout << s.description() << " at N=" << opt.modulus << ": " << d.orbit_count() << " orbits"
            << (d.exact() ? "" : " (uncertified)") << '\n';
  for (std::size_t o = 0; o < d.orbit_count(); ++o) {
    const TorusVertex& x = d.representatives[o];
    std::cout << "  " << o << ": x = " << x << ", size " << d.orbits[o].size()
              << ", |Stab(x)| " << stabilizer(s, x).order() << '\n';
  }
  return ok ? kOk : kVerification;
}

int run_config(const Options& opt, JobFile::Kind kind) {
  JobConfig config = parse_job(read_file(opt.config));
  if (opt.modulus_given) config.modulus = opt.modulus;
  if (opt.cross_check) config.cross_check = true;
  if (opt.radius_given) config.radius = opt.radius;
  const JobResult result = run_job(config);
  std::cout << result.log;
  std::vector<JobFile> selected;
  for (const auto& f : result.files) {
    if (f.kind == kind) selected.push_back(f);
  }
  if (!opt.out_dir.empty()) write_files(selected, opt.out_dir);
  return result.verified ? kOk : kVerification;
}

int cmd_export(const Options& opt) {
  if (!opt.config.empty()) return run_config(opt, JobFile::Kind::model);
  if (opt.preset.empty()) throw PreconditionError("export needs --config or --preset");
  if (opt.periods.size() != 3) throw PreconditionError("--periods takes three integers");
  const ExportFormat format = parse_export_format(opt.format);
  const CrystalModel model = preset(opt.preset, opt.modulus);
  const Box region = Box::periods(opt.modulus, opt.periods[0], opt.periods[1], opt.periods[2]);
  const std::string text = export_model(model, format, region);
  if (opt.out_dir.empty()) {
    std::cout << text;
  } else {
    write_files({{opt.preset + "." + std::string(to_string(format)), text, JobFile::Kind::model}},
                opt.out_dir);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex colorings of the cubic honeycomb and the crystal models they give"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--modulus", opt.modulus, "torus modulus N (even)")->check(CLI::PositiveNumber);
  app.add_option("--config", opt.config, "JSON job config");
  app.add_option("--out-dir", opt.out_dir, "directory for written files");
  app.add_option("--radius", opt.radius, "certificate search radius, in generator factors");
  app.add_flag("--cross-check", opt.cross_check, "recompute at 2N and compare");

  auto* check = app.add_subcommand("check", "presentation relators and dihedral angles");
  check->add_flag("--fault-inject", opt.fault_inject, "replace P by a wrong mirror");
  auto* subgroup = app.add_subcommand("subgroup", "order, index and certificate of <WORDS>");
  subgroup->add_option("words", opt.words, "generator words")->required();
  subgroup->add_option("--within", opt.within, "words of an enclosing subgroup");
  auto* orbits = app.add_subcommand("orbits", "vertex orbits of <WORDS>");
  orbits->add_option("words", opt.words, "generator words")->required();
  auto* color = app.add_subcommand("color", "run the colorings of a config");
  auto* exp = app.add_subcommand("export", "export crystal models");
  exp->add_option("--preset", opt.preset, "rock-salt | NbO | ReO3 | perovskite");
  exp->add_option("--format", opt.format, "xyz | off | report");
  exp->add_option("--periods", opt.periods, "periods along x y z")->expected(3);
  for (auto* sub : {check, subgroup, orbits, color, exp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  opt.modulus_given = app.get_option("--modulus")->count() > 0;
  opt.radius_given = app.get_option("--radius")->count() > 0;

  try {
    if (*check) return cmd_check(opt);
    if (*subgroup) return cmd_subgroup(opt);
    if (*orbits) return cmd_orbits(opt);
    if (*color) {
      if (opt.config.empty()) throw PreconditionError("color needs --config");
      return run_config(opt, JobFile::Kind::coloring);
    }
    if (*exp) return cmd_export(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const VerificationError& e) {
    std::cerr << "verification: " << e.what() << '\n';
    return kVerification;
  } catch (const IoError& e) {
    std::cerr << "I/O: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
