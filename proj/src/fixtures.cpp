#include "mirlat/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mirlat/error.hpp"

namespace mirlat::io {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& context) {
  if (!obj.is_object())
    fail(ErrorKind::Parse, context + ": expected a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      known = known || key == a;
    if (!known)
      fail(ErrorKind::Parse, context + ": unknown key \"" + key + "\"");
  }
}

namespace {

const json& required(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(ErrorKind::Parse, context + ": missing key \"" + key + "\"");
  return *it;
}

std::vector<std::int64_t> int_list(const json& j, const std::string& what) {
  if (!j.is_array())
    fail(ErrorKind::Parse, what + ": expected an array");
  std::vector<std::int64_t> v;
  for (const auto& x : j)
    v.push_back(integer_from_json(x, what));
  return v;
}

RingDescriptor::IntMatrix int_matrix(const json& j, const std::string& what) {
  if (!j.is_array())
    fail(ErrorKind::Parse, what + ": expected an array of rows");
  RingDescriptor::IntMatrix m;
  for (const auto& row : j)
    m.push_back(int_list(row, what));
  return m;
}

json int_list_json(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (auto x : v)
    a.push_back(x);
  return a;
}

} // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer())
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  fail(ErrorKind::Parse, "expected an integer or a \"p/q\" string, got " + j.dump());
}

json rational_to_json(const Rational& q) { return mirlat::to_string(q); }

std::int64_t integer_from_json(const json& j, const std::string& what) {
  return to_int64(rational_from_json(j), what);
}

RingDescriptor ring_from_json(const json& j) {
  require_keys(j, {"dim", "picard_rank", "gram", "cubic", "c2"}, "ring descriptor");
  const auto dim = integer_from_json(required(j, "dim", "ring descriptor"), "dim");
  switch (dim) {
    case 1:
      return RingDescriptor::curve();
    case 2: {
      RingDescriptor R = RingDescriptor::surface(int_matrix(required(j, "gram", "K3 ring"), "gram"));
      if (j.contains("picard_rank") &&
          integer_from_json(j["picard_rank"], "picard_rank") != R.picard_rank())
        fail(ErrorKind::InvalidDescriptor, "picard_rank disagrees with the Gram matrix size");
      return R;
    }
    case 3:
      return RingDescriptor::threefold(
          static_cast<int>(integer_from_json(required(j, "picard_rank", "CY3 ring"), "picard_rank")),
          int_list(required(j, "cubic", "CY3 ring"), "cubic"),
          int_list(required(j, "c2", "CY3 ring"), "c2"));
    default:
      fail(ErrorKind::InvalidDescriptor, "dim must be 1, 2 or 3");
  }
}

json ring_to_json(const RingDescriptor& R) {
  json j{{"dim", R.dim()}, {"picard_rank", R.picard_rank()}};
  if (R.dim() == 2) {
    json g = json::array();
    for (const auto& row : R.gram_matrix())
      g.push_back(int_list_json(row));
    j["gram"] = g;
  } else if (R.dim() == 3) {
    j["cubic"] = int_list_json(R.cubic_tensor());
    j["c2"] = int_list_json(R.c2());
  }
  return j;
}

json graded_to_json(const GradedVector& u) {
  json blocks = json::array();
  for (const auto& b : u.blocks()) {
    json blk = json::array();
    for (const auto& q : b)
      blk.push_back(rational_to_json(q));
    blocks.push_back(blk);
  }
  return blocks;
}

GradedVector graded_from_json(const json& j) {
  if (!j.is_array())
    fail(ErrorKind::Parse, "graded vector: expected an array of blocks");
  std::vector<RationalVec> blocks;
  for (const auto& b : j) {
    RationalVec blk;
    if (b.is_array())
      for (const auto& q : b)
        blk.push_back(rational_from_json(q));
    else
      blk.push_back(rational_from_json(b));
    blocks.push_back(std::move(blk));
  }
  return GradedVector(std::move(blocks));
}

k3::K3Descriptor k3_from_json(const json& j) {
  require_keys(j, {"label", "dim", "picard_rank", "gram", "roots", "fibration"}, "K3 fixture");
  if (j.contains("dim") && integer_from_json(j["dim"], "dim") != 2)
    fail(ErrorKind::InvalidDescriptor, "K3 fixture must have dim 2");
  std::string label = j.value("label", std::string("k3"));
  std::vector<k3::Divisor> roots;
  if (j.contains("roots"))
    for (const auto& r : j["roots"])
      roots.push_back(int_list(r, "root"));
  std::optional<k3::Fibration> fib;
  if (j.contains("fibration")) {
    require_keys(j["fibration"], {"singular_fibres"}, "K3 fibration");
    fib = k3::Fibration{static_cast<int>(
        integer_from_json(required(j["fibration"], "singular_fibres", "K3 fibration"),
                          "singular_fibres"))};
  }
  k3::K3Descriptor S = k3::make_descriptor(label, int_matrix(required(j, "gram", "K3 fixture"), "gram"),
                                           std::move(roots), fib);
  if (j.contains("picard_rank") &&
      integer_from_json(j["picard_rank"], "picard_rank") != S.ring.picard_rank())
    fail(ErrorKind::InvalidDescriptor, "picard_rank disagrees with the Gram matrix size");
  return S;
}

json k3_to_json(const k3::K3Descriptor& S) {
  json j = ring_to_json(S.ring);
  j.erase("dim");
  j.erase("picard_rank");
  j["label"] = S.label;
  if (!S.roots.empty()) {
    json roots = json::array();
    for (const auto& r : S.roots)
      roots.push_back(int_list_json(r));
    j["roots"] = roots;
  }
  if (S.fibration)
    j["fibration"] = {{"singular_fibres", S.fibration->singular_fibres}};
  return j;
}

cy3::CY3Descriptor cy3_from_json(const json& j) {
  require_keys(j, {"label", "dim", "picard_rank", "cubic", "c2"}, "CY3 fixture");
  if (j.contains("dim") && integer_from_json(j["dim"], "dim") != 3)
    fail(ErrorKind::InvalidDescriptor, "CY3 fixture must have dim 3");
  return cy3::make_descriptor(
      j.value("label", std::string("cy3")),
      static_cast<int>(integer_from_json(required(j, "picard_rank", "CY3 fixture"), "picard_rank")),
      int_list(required(j, "cubic", "CY3 fixture"), "cubic"),
      int_list(required(j, "c2", "CY3 fixture"), "c2"));
}

json cy3_to_json(const cy3::CY3Descriptor& X) {
  json j = ring_to_json(X.ring);
  j.erase("dim");
  j["label"] = X.label;
  return j;
}

const char* to_string(FixtureKind kind) { return kind == FixtureKind::K3 ? "k3" : "cy3"; }

FixtureKind fixture_kind(const json& j) {
  if (!j.is_object())
    fail(ErrorKind::Parse, "fixture: expected a JSON object");
  if (j.contains("cubic"))
    return FixtureKind::CY3;
  if (j.contains("gram"))
    return FixtureKind::K3;
  fail(ErrorKind::Parse, "fixture: neither \"gram\" (K3) nor \"cubic\" (CY3) present");
}

Fixture fixture_from_json(const json& j) {
  if (fixture_kind(j) == FixtureKind::K3)
    return k3_from_json(j);
  return cy3_from_json(j);
}

std::string fixture_label(const Fixture& f) {
  return std::visit([](const auto& d) { return d.label; }, f);
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Parse, origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": JSON syntax error");
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("MIRLAT_FIXTURE_DIR"); env && *env)
    return env;
  return MIRLAT_FIXTURE_SOURCE_DIR;
}

std::filesystem::path resolve_fixture(const std::string& name, const std::filesystem::path& base) {
  std::filesystem::path p(name);
  if (p.is_absolute())
    return p;
  if (const char* env = std::getenv("MIRLAT_FIXTURE_DIR"); env && *env)
    return std::filesystem::path(env) / p;
  if (!base.empty() && std::filesystem::exists(base / p))
    return base / p;
  return fixture_dir() / p;
}

} // namespace mirlat::io
