#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relchar/models.hpp"

namespace relchar::verify {

struct Check {
  std::string suite;
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
  bool passed() const { return status != "fail"; }
};

struct Options {
  std::string model_filter = "all";
  size_t points = 5;
  uint64_t seed = 1;
  int jobs = 1;
  bool skip_slow = false;  // drops the E7 full-group folds (used by unit tests)
};

std::vector<Check> run_suite(const std::string& suite, const Options& opt);
std::vector<std::string> suite_names();

struct Report {
  std::string command;
  uint64_t seed = 0;
  std::string catalog_hash;
  long elapsed_ms = 0;
  std::vector<Check> checks;
  size_t passed = 0, failed = 0, skipped = 0;
  std::string to_json() const;
  std::string to_text() const;
  bool ok() const { return failed == 0; }
};

Report run_report(const std::string& command, const std::string& suite, const Options& opt);

}  // namespace relchar::verify
