#ifndef MIRLAT_MANIFEST_HPP_
#define MIRLAT_MANIFEST_HPP_

// Verification manifests:
//
//   {"version": "1",
//    "fixtures": ["quintic.json", ...],
//    "suites": ["cy1.quantization", {"name": "cy3.isometry", "samples": 1000}, ...]}
//
// Suite parameters are checked against a fixed catalogue; missing parameters
// take their catalogue defaults. Fixture-bound suites (k3.*, cy3.*) run once
// per fixture of the matching kind, and every listed fixture brings its
// kind's suites into the run plan even when the manifest does not name them.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mirlat/fixtures.hpp"

namespace mirlat::io {

struct SuiteInfo {
  const char* name;
  // fixture kind the suite runs against, or none for standalone suites
  std::optional<FixtureKind> binds;
  bool default_for_kind;
  json defaults;
};
const std::vector<SuiteInfo>& suite_catalogue();
const SuiteInfo* find_suite(const std::string& name);

struct SuiteSpec {
  std::string name;
  json params;   // catalogue defaults overlaid with the manifest's values
};

struct FixtureEntry {
  std::filesystem::path path;
  json document;
  FixtureKind kind;
  std::string label;   // "label" field, else the file stem
};

struct Manifest {
  std::string version;
  std::vector<FixtureEntry> fixtures;
  std::vector<SuiteSpec> suites;   // as listed
};

// Throws Error(Parse) for syntax errors (with line/column), unknown keys,
// unknown suites, bad parameters and unreadable or missing fixtures.
// Fixture documents are read here but validated in run_verify, so that a
// corrupted descriptor shows up as a failing check rather than a parse error.
Manifest parse_manifest(const std::filesystem::path& path);
Manifest parse_manifest_text(const std::string& text, const std::filesystem::path& base_dir,
                             const std::string& origin = "<manifest>");

struct PlannedSuite {
  std::string name;
  json params;
  int fixture = -1;   // index into Manifest::fixtures, or -1
  std::string id;     // "name" or "name[label]"
};
// Explicit suites plus the defaults implied by each fixture, ordered by id.
std::vector<PlannedSuite> run_plan(const Manifest& m);

std::filesystem::path default_manifest_path();

} // namespace mirlat::io

#endif
