#include "tracekit/io.hpp"

#include <fstream>
#include <sstream>

#include "tracekit/errors.hpp"

namespace tracekit::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<int> one_based(SubsetMask m) {
  std::vector<int> out;
  for (int v : m.elements()) out.push_back(v + 1);
  return out;
}

}  // namespace

nlohmann::json family_to_json(const Family& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (SubsetMask m : f) sets.push_back(one_based(m));
  return {{"n", f.universe()}, {"sets", sets}};
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets")) {
    parse_error("family JSON needs \"n\" and \"sets\"");
  }
  if (!j["n"].is_number_integer() || !j["sets"].is_array()) {
    parse_error("\"n\" must be an integer and \"sets\" an array");
  }
  std::vector<std::vector<int>> sets;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) parse_error("each set must be an array of integers");
    std::vector<int> el;
    for (const auto& e : s) {
      if (!e.is_number_integer()) parse_error("set elements must be integers");
      el.push_back(e.get<int>());
    }
    sets.push_back(std::move(el));
  }
  return make_family(j["n"].get<int>(), sets);
}

std::string family_to_text(const Family& f) {
  std::ostringstream out;
  out << "n=" << f.universe() << '\n';
  for (SubsetMask m : f) {
    if (m.empty()) {
      out << "-\n";
      continue;
    }
    const auto el = one_based(m);
    for (std::size_t i = 0; i < el.size(); ++i) out << (i ? " " : "") << el[i];
    out << '\n';
  }
  return out.str();
}

Family family_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> sets;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) parse_error("first line must be n=<int>");
      try {
        std::size_t used = 0;
        n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        parse_error("bad universe line: " + line);
      }
      continue;
    }
    if (line == "-") {
      sets.emplace_back();
      continue;
    }
    std::istringstream ls(line);
    std::vector<int> el;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        el.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        parse_error("bad element '" + tok + "'");
      }
    }
    sets.push_back(std::move(el));
  }
  if (n < 0) parse_error("missing n=<int> line");
  return make_family(n, sets);
}

Family parse_family(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      parse_error(std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
  }
  return family_from_text(text);
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_family(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace tracekit::io
