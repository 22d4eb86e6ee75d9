#include <quotloc/report.hpp>

#include <sstream>

namespace quotloc {

namespace {

// Minimal RFC 4180 quoting; our cells rarely need it, but stay well-formed.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_to_string(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string render_params(const Json& params) {
  std::string out;
  for (const auto& [key, value] : params.items()) {
    if (!out.empty()) out += ' ';
    out += key + "=" + scalar_to_string(value);
  }
  return out;
}

void RunReport::add(ResultCell cell) { results.push_back(std::move(cell)); }

bool RunReport::suite_pass() const {
  for (const auto& cell : results)
    if (cell.failed()) return false;
  return true;
}

Json RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["config"] = config;
  Json rows = Json::array();
  for (const auto& cell : results) {
    Json row;
    row["params"] = cell.params;
    row["value"] = cell.value;
    row["route"] = cell.route;
    row["verdict"] = cell.verdict;
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  doc["suite_pass"] = suite_pass();
  return doc;
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  os << "params,value,route,verdict\n";
  for (const auto& cell : results)
    os << csv_escape(render_params(cell.params)) << ',' << csv_escape(cell.value)
       << ',' << csv_escape(cell.route) << ',' << csv_escape(cell.verdict) << '\n';
  return os.str();
}

std::string RunReport::to_text() const {
  // A single pure-value row prints just the value: `intersect` answers with
  // the number itself.
  if (results.size() == 1 && results.front().verdict == "VALUE" &&
      results.front().route == "closed")
    return results.front().value + "\n";

  std::ostringstream os;
  for (const auto& cell : results) {
    const std::string params = render_params(cell.params);
    if (!params.empty()) os << params << "  ";
    os << "value=" << cell.value;
    if (cell.route != "-") os << "  route=" << cell.route;
    if (cell.verdict != "VALUE") os << "  " << cell.verdict;
    os << '\n';
  }
  os << "suite_pass: " << (suite_pass() ? "true" : "false") << '\n';
  return os.str();
}

std::string RunReport::render(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return to_csv();
  if (format == "text") return to_text();
  throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace quotloc
