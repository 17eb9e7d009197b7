#include "mirlat/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mirlat/error.hpp"

namespace mirlat::io {

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> cat = {
      {"cy1.quantization", std::nullopt, false, {{"max_level", 50}}},
      {"cy1.intersection", std::nullopt, false, {{"bound", 5}}},
      {"cy1.isometry", std::nullopt, false, {{"samples", 1000}, {"seed", 1}, {"bound", 1000}}},
      {"cy1.homomorphism", std::nullopt, false, {{"samples", 1000}, {"seed", 2}, {"bound", 100}}},
      {"cy1.atiyah", std::nullopt, false, {{"max_index", 8}}},
      {"k3.theorem", std::nullopt, false, {{"l2_max", 40}}},
      {"k3.lattice", FixtureKind::K3, true, {{"samples", 500}, {"seed", 4}, {"bound", 20}}},
      {"k3.reflections", FixtureKind::K3, true, {{"samples", 200}, {"seed", 5}, {"bound", 10}}},
      {"cy3.isometry", FixtureKind::CY3, true, {{"samples", 1000}, {"seed", 6}, {"bound", 6}}},
      {"cy3.skew", FixtureKind::CY3, true, {{"samples", 1000}, {"seed", 7}, {"bound", 6}}},
      {"cy3.chi", FixtureKind::CY3, true, {{"max_multiple", 4}}},
      {"quant.bs", std::nullopt, false, {{"max_level", 32}, {"tol", 1e-10}}},
      {"quant.holonomy", std::nullopt, false, {{"samples", 100}, {"seed", 8}, {"max_level", 50}}},
      {"quant.theta", std::nullopt, false, {{"max_level", 8}}},
      {"quant.phase", std::nullopt, false, {{"samples", 256}, {"bound", 3}}},
  };
  return cat;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_catalogue())
    if (name == s.name)
      return &s;
  return nullptr;
}

namespace {

SuiteSpec parse_suite(const json& entry) {
  std::string name;
  json given = json::object();
  if (entry.is_string()) {
    name = entry.get<std::string>();
  } else if (entry.is_object()) {
    auto it = entry.find("name");
    if (it == entry.end() || !it->is_string())
      fail(ErrorKind::Parse, "suite entry needs a string \"name\"");
    name = it->get<std::string>();
    given = entry;
    given.erase("name");
  } else {
    fail(ErrorKind::Parse, "suite entry must be a name or an object");
  }
  const SuiteInfo* info = find_suite(name);
  if (!info)
    fail(ErrorKind::Parse, "unknown suite \"" + name + "\"");
  json params = info->defaults;
  for (const auto& [key, value] : given.items()) {
    auto def = info->defaults.find(key);
    if (def == info->defaults.end())
      fail(ErrorKind::Parse, "suite " + name + ": unknown key \"" + key + "\"");
    if (def->is_number_integer()) {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
        fail(ErrorKind::Parse, "suite " + name + ": \"" + key + "\" must be a non-negative integer");
    } else if (!value.is_number() || !(value.get<double>() > 0.0)) {
      fail(ErrorKind::Parse, "suite " + name + ": \"" + key + "\" must be a positive number");
    }
    params[key] = value;
  }
  return {name, params};
}

} // namespace

Manifest parse_manifest_text(const std::string& text, const std::filesystem::path& base_dir,
                             const std::string& origin) {
  const json j = parse_json_text(text, origin);
  require_keys(j, {"version", "fixtures", "suites"}, "manifest");
  Manifest m;
  auto v = j.find("version");
  if (v == j.end() || !v->is_string())
    fail(ErrorKind::Parse, "manifest: \"version\" must be a string");
  m.version = v->get<std::string>();
  if (m.version != "1")
    fail(ErrorKind::Parse, "manifest: unrecognized version \"" + m.version + "\"");

  if (auto f = j.find("fixtures"); f != j.end()) {
    if (!f->is_array())
      fail(ErrorKind::Parse, "manifest: \"fixtures\" must be an array of paths");
    for (const auto& p : *f) {
      if (!p.is_string())
        fail(ErrorKind::Parse, "manifest: fixture paths must be strings");
      const auto path = resolve_fixture(p.get<std::string>(), base_dir);
      if (!std::filesystem::exists(path))
        fail(ErrorKind::Parse, "missing fixture " + path.string());
      FixtureEntry e;
      e.path = path;
      e.document = load_json_file(path);
      e.kind = fixture_kind(e.document);
      auto label = e.document.find("label");
      e.label = label != e.document.end() && label->is_string() ? label->get<std::string>()
                                                                 : path.stem().string();
      for (const auto& other : m.fixtures)
        if (other.label == e.label)
          fail(ErrorKind::Parse, "duplicate fixture label \"" + e.label + "\"");
      m.fixtures.push_back(std::move(e));
    }
  }

  auto s = j.find("suites");
  if (s == j.end() || !s->is_array())
    fail(ErrorKind::Parse, "manifest: \"suites\" must be an array");
  std::set<std::string> seen;
  for (const auto& entry : *s) {
    SuiteSpec listed = parse_suite(entry);
    if (!seen.insert(listed.name).second)
      fail(ErrorKind::Parse, "suite " + listed.name + " listed twice");
    const SuiteInfo* info = find_suite(listed.name);
    if (info->binds &&
        std::none_of(m.fixtures.begin(), m.fixtures.end(),
                     [&](const FixtureEntry& e) { return e.kind == *info->binds; }))
      fail(ErrorKind::Parse, "suite " + listed.name + " needs a " + to_string(*info->binds) +
                                 " fixture");
    m.suites.push_back(std::move(listed));
  }
  return m;
}

Manifest parse_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::Parse, "cannot read manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest_text(ss.str(), path.parent_path(), path.string());
}

std::vector<PlannedSuite> run_plan(const Manifest& m) {
  std::vector<PlannedSuite> plan;
  auto add_bound = [&](const SuiteInfo& info, const json& params) {
    for (std::size_t i = 0; i < m.fixtures.size(); ++i)
      if (m.fixtures[i].kind == *info.binds)
        plan.push_back({info.name, params, static_cast<int>(i),
                        std::string(info.name) + "[" + m.fixtures[i].label + "]"});
  };
  std::set<std::string> explicit_names;
  for (const auto& s : m.suites) {
    explicit_names.insert(s.name);
    const SuiteInfo& info = *find_suite(s.name);
    if (info.binds)
      add_bound(info, s.params);
    else
      plan.push_back({s.name, s.params, -1, s.name});
  }
  for (std::size_t i = 0; i < m.fixtures.size(); ++i)
    plan.push_back({"fixtures", json::object(), static_cast<int>(i),
                    "fixtures[" + m.fixtures[i].label + "]"});
  for (const auto& info : suite_catalogue())
    if (info.default_for_kind && !explicit_names.count(info.name))
      add_bound(info, info.defaults);
  std::sort(plan.begin(), plan.end(),
            [](const PlannedSuite& a, const PlannedSuite& b) { return a.id < b.id; });
  return plan;
}

std::filesystem::path default_manifest_path() { return fixture_dir() / "manifest.json"; }

} // namespace mirlat::io
