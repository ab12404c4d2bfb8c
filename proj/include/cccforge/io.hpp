#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cccforge/code.hpp"

namespace ccc {

using json = nlohmann::ordered_json;

/// Canonical code file:
///   {"n":.., "d":.., "composition":[2,1,1],
///    "points":{"v":.., "infinite":[{"labels":[..],"modulus":..}], "fixed":[..]},
///    "words":[[p,p,p,p],..]}
/// A point is an integer (finite), "a@2" (infinite) or "f" (fixed).
/// Words are sorted canonically, so save/load round-trips bit-identically.
json code_to_json(const Code& c);
Code code_from_json(const json& j);

/// Same format plus "groups":[[point,..],..].
json gdc_to_json(const Gdc& g);
Gdc gdc_from_json(const json& j);

void save_json(const json& j, const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

Code load_code(const std::filesystem::path& path);
void save_code(const Code& c, const std::filesystem::path& path);
Gdc load_gdc(const std::filesystem::path& path);
void save_gdc(const Gdc& g, const std::filesystem::path& path);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

}  // namespace ccc
