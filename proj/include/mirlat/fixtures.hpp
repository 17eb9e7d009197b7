#ifndef MIRLAT_FIXTURES_HPP_
#define MIRLAT_FIXTURES_HPP_

// JSON forms of descriptors and fixtures. Exact rationals are written as
// "p/q" strings; integers are accepted either as JSON numbers or strings.
//
//   ring:  {"dim": n, "picard_rank": k, "gram": [[..]] | "cubic": [..], "c2": [..]}
//   K3:    {"label", "gram", "roots"?, "fibration"?: {"singular_fibres": 24}}
//   CY3:   {"label", "picard_rank", "cubic": [D_abc flattened], "c2": [..]}
//
// Unknown keys are rejected everywhere.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "mirlat/cy3.hpp"
#include "mirlat/k3.hpp"
#include "mirlat/lattice.hpp"

namespace mirlat::io {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);
std::int64_t integer_from_json(const json& j, const std::string& what);

RingDescriptor ring_from_json(const json& j);
json ring_to_json(const RingDescriptor& R);

json graded_to_json(const GradedVector& u);
GradedVector graded_from_json(const json& j);

k3::K3Descriptor k3_from_json(const json& j);
json k3_to_json(const k3::K3Descriptor& S);
cy3::CY3Descriptor cy3_from_json(const json& j);
json cy3_to_json(const cy3::CY3Descriptor& X);

enum class FixtureKind { K3, CY3 };
const char* to_string(FixtureKind kind);
// K3 fixtures carry "gram", CY3 fixtures carry "cubic".
FixtureKind fixture_kind(const json& j);

using Fixture = std::variant<k3::K3Descriptor, cy3::CY3Descriptor>;
Fixture fixture_from_json(const json& j);
std::string fixture_label(const Fixture& f);

// Reads and parses a JSON file; syntax errors become Error(Parse) carrying
// "path:line:column".
json load_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& origin);

// $MIRLAT_FIXTURE_DIR if set, else the fixtures/ directory of the source tree.
std::filesystem::path fixture_dir();
// Absolute paths are returned unchanged; relative ones are looked up in
// `base` first and then in fixture_dir().
std::filesystem::path resolve_fixture(const std::string& name, const std::filesystem::path& base);

// Rejects keys outside `allowed`, naming the first offender.
void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& context);

} // namespace mirlat::io

#endif
