#pragma once

// Property suites run by `linset verify` and by the acceptance binary.

#include <deque>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "linset/gf.hpp"

namespace linset {

struct Check {
  std::string name;
  uint64_t passed = 0, total = 0;
  std::vector<nlohmann::json> failures;  // first few witnesses
  std::vector<std::string> notes;
  void add(bool ok, const nlohmann::json& witness = nullptr);
  bool ok() const { return passed == total; }
};

struct SuiteReport {
  std::string suite;
  uint64_t q = 0;
  int n = 0;
  std::deque<Check> checks;  // stable references while a suite runs
  double seconds = 0;
  bool ok() const;
  nlohmann::json to_json() const;
};

struct SuiteParams {
  uint64_t q = 2;
  int n = 4;
  int samples = 0;  // 0: the suite's default
  uint64_t seed = 1;
  std::function<void(const std::string&)> progress;
};

// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();
// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteParams& p);
// "all" or a single suite.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteParams& p);

TowerPtr tower_for(uint64_t q, int n);

}  // namespace linset
