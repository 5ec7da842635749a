#pragma once

#include <string>

#include <json.hpp>

namespace tracekit::cli {

inline constexpr const char* kTables[] = {"small-m", "theorem13", "theorem15", "appendixA", "fact62"};

// {"table": .., "rows": [{"name", "expected", "actual", "pass"}], "pass": ..}
nlohmann::json reproduce(const std::string& table, int threads);

}  // namespace tracekit::cli
