#pragma once

#include <string>

#include <json.hpp>

#include "tracekit/family.hpp"

namespace tracekit::io {

// {"n": 3, "sets": [[], [1], [1, 2]]}: 1-based, canonical (colex) order.
nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

// "n=<int>" then one set per line, elements separated by spaces, "-" for ∅.
std::string family_to_text(const Family& f);
Family family_from_text(const std::string& text);

// Either format; JSON is recognised by a leading '{'.
Family parse_family(const std::string& text);
Family load_family(const std::string& path);

}  // namespace tracekit::io
