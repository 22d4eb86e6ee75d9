// Machine-readable run reports shared by the CLI and the verification suites.
//
// One report per command invocation.  The JSON shape is fixed:
//   { "command", "config", "results": [ { "params", "value", "route",
//     "verdict" } ], "suite_pass": bool }
// Rationals are serialized as "p/q" strings, never floats, and key order is
// insertion order, so identical configs produce byte-identical output.

#pragma once

#include <quotloc/rational.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace quotloc {

using Json = nlohmann::ordered_json;

// Verdict strings: "PASS" / "FAIL..." / "SKIP..." for checks, "VALUE" for
// pure computations (a value row neither passes nor fails).
struct ResultCell {
  Json params = Json::object();
  std::string value;  // exact rational rendered "p/q"
  std::string route;  // "a", "b", "closed", or "-" when not route-tagged
  std::string verdict = "VALUE";

  bool failed() const { return verdict.rfind("FAIL", 0) == 0; }
};

struct RunReport {
  std::string command;
  Json config = Json::object();
  std::vector<ResultCell> results;

  void add(ResultCell cell);
  bool suite_pass() const;  // no FAIL verdicts anywhere

  Json to_json() const;
  std::string to_csv() const;   // header row mandatory: params,value,route,verdict
  std::string to_text() const;  // human-readable table
  std::string render(const std::string& format) const;  // json | csv | text
};

// Space-separated "key=value" rendering of a params object (CSV/text cells).
std::string render_params(const Json& params);

}  // namespace quotloc
