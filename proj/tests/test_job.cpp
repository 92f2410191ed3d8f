#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "honeycomb/errors.hpp"
#include "honeycomb/job.hpp"

using namespace honeycomb;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string config_path(const char* name) { return std::string(HONEYCOMB_CONFIG_DIR) + "/" + name; }

const char* kMinimal = R"({
  "subgroups": {"G": ["P", "Q", "R", "S"], "J": ["Q", "R", "S", "PQP"]},
  "colorings": [{"name": "salt", "group": "G",
                 "plans": [{"orbit": 0, "subgroup": "J", "labels": ["a", "b"]}],
                 "elements": [["a", "Na"], ["b", "Cl"]]}],
  "exports": [{"coloring": "salt", "format": "xyz", "periods": [1, 1, 2], "path": "out/salt.xyz"}]
})";

}  // namespace

TEST_SUITE("job") {
  TEST_CASE("minimal config runs") {
    const JobConfig cfg = parse_job(kMinimal);
    CHECK(cfg.modulus == 2);
    CHECK_FALSE(cfg.cross_check);
    const JobResult r = run_job(cfg);
    CHECK(r.verified);
    REQUIRE(r.files.size() == 2);
    CHECK(r.files[0].path == "salt.coloring");
    CHECK(r.files[1].path == "out/salt.xyz");
    CHECK(r.files[1].content.rfind("16\n", 0) == 0);
    CHECK(r.log.find("perfect: yes") != std::string::npos);
  }

  TEST_CASE("modulus override keeps periods in periods") {
    JobConfig cfg = parse_job(kMinimal);
    cfg.modulus = 4;
    const JobResult r = run_job(cfg);
    CHECK(r.files[1].content.rfind("128\n", 0) == 0);
  }

  TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_job("{"), ParseError);
    CHECK_THROWS_AS(parse_job(R"({"modulos": 2})"), ParseError);
    CHECK_THROWS_AS(parse_job(R"({"subgroups": {"A": ["PX"]}})"), ParseError);
    CHECK_THROWS_AS(parse_job(R"({"subgroups": {"A": "P"}})"), ParseError);
    CHECK_THROWS_AS(parse_job(R"({"colorings": [{"name": "c", "group": "H"}]})"), PreconditionError);
    CHECK_THROWS_AS(parse_job(R"({"subgroups": {"G": ["P"]},
      "colorings": [{"name": "c", "group": "G", "plans": [{"vertex": [0,0,0], "orbit": 0,
      "subgroup": "G", "labels": ["a"]}]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_job(R"({"subgroups": {"G": ["P","Q","R","S"]},
      "colorings": [{"name": "c", "group": "G", "plans": [{"orbit": 0, "subgroup": "G", "labels": ["a"]}]}],
      "exports": [{"coloring": "c", "format": "xyz", "path": "x.xyz"}]})"),
                    PreconditionError);
    CHECK_THROWS_AS(parse_job(R"({"subgroups": {"G": ["P","Q","R","S"]},
      "colorings": [{"name": "c", "group": "G", "plans": [{"orbit": 0, "subgroup": "G", "labels": ["a"]}],
                     "elements": [["a", "Fe"]]}],
      "exports": [{"coloring": "c", "format": "xyz", "path": "../x.xyz"}]})"),
                    ParseError);
  }

  TEST_CASE("uncertifiable subgroup is a verification error") {
    const JobConfig cfg = parse_job(R"({"subgroups": {"G": ["Q", "R"]},
      "colorings": [{"name": "c", "group": "G", "background": "w"}]})");
    CHECK_THROWS_AS(run_job(cfg), VerificationError);
  }

  TEST_CASE("bundled configs verify, with cross-check") {
    for (const char* name : {"fig3b.json", "fig3c.json", "fig3d.json", "fig3e.json"}) {
      CAPTURE(name);
      const JobConfig cfg = parse_job(read(config_path(name)));
      CHECK(cfg.cross_check);
      const JobResult r = run_job(cfg);
      CHECK(r.verified);
      CHECK(r.log.find("agree") != std::string::npos);
      CHECK(r.log.find("FAIL") == std::string::npos);
    }
  }

  TEST_CASE("bundled configs are byte-deterministic") {
    for (const char* name : {"fig3b.json", "fig3c.json", "fig3d.json", "fig3e.json"}) {
      CAPTURE(name);
      const std::string text = read(config_path(name));
      const JobResult a = run_job(parse_job(text));
      const JobResult b = run_job(parse_job(text));
      CHECK(a.log == b.log);
      REQUIRE(a.files.size() == b.files.size());
      for (std::size_t i = 0; i < a.files.size(); ++i) {
        CHECK(a.files[i].path == b.files[i].path);
        CHECK(a.files[i].content == b.files[i].content);
      }
    }
  }

  TEST_CASE("write_files creates directories and reports failures") {
    const auto dir = std::filesystem::temp_directory_path() / "honeycomb_job_test";
    std::filesystem::remove_all(dir);
    write_files({{"a/b.txt", "hello", JobFile::Kind::model}}, dir.string());
    CHECK(read((dir / "a/b.txt").string()) == "hello");
    write_files({{"blocker", "x", JobFile::Kind::model}}, dir.string());
    CHECK_THROWS_AS(write_files({{"blocker/c.txt", "x", JobFile::Kind::model}}, dir.string()), IoError);
    std::filesystem::remove_all(dir);
  }
}
