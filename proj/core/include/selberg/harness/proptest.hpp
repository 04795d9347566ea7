#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace selberg {

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  /// Worst observed value of the suite's statistic (see `statistic`).
  double worst = 0;
  std::string statistic;
  double tolerance = 0;
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return violations == 0 && trials > 0; }
  nlohmann::json to_json() const;
};

/// lipschitz, contraction, interlacing, asymptotic, decomposition.
const std::vector<std::string>& suite_names();

/// Seeded randomized sweep. Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace selberg
