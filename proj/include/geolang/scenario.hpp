// Named end-to-end pipelines with expected outcomes, and the cross-check
// of every shipped model/filter pair against brute force.

#ifndef GEOLANG_SCENARIO_HPP_
#define GEOLANG_SCENARIO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "geolang/error.hpp"
#include "json.hpp"

namespace geolang {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StageFailure {
  std::string stage;
  ErrorKind kind;
  std::string message;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<StageFailure> failures;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {});
  std::string text() const;
  //! Deterministic: no timings or addresses.
  std::string json(int indent = 2) const;
};

std::vector<std::string> scenario_names();

//! Throws UnknownScenario; pipeline errors propagate with the stage named.
Report run_scenario(const std::string& name);

struct ValidateEntry {
  std::string model;   // built-in name
  std::string filter;  // "trivial", "syllable:<s>", "commuting:<s>"
  std::size_t m = 1;
};

struct ValidateConfig {
  std::vector<ValidateEntry> entries;
  std::size_t depth = 8;           // language equality
  std::size_t shortlex_depth = 6;  // bijection count
  bool auto_escalate = true;
  std::size_t threads = 0;         // 0: hardware concurrency
};

//! The shipped model/filter/m matrix.
ValidateConfig default_validate_config();

//! Per entry: build with consistency checks, language equality to `depth`,
//! exact series fit with held-out terms, PF rate >= 1, and shortlex
//! bijection counts.  Errors are recorded per entry with the stage named.
Report validate_all(const ValidateConfig& config);

}  // namespace geolang

#endif  // GEOLANG_SCENARIO_HPP_
