#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selberg/tolerances.hpp"

namespace ds {

struct Common {
  std::string input;  // empty: built-in corpus; "-": stdin
  std::string config;
  std::optional<double> angle_tol;
  std::optional<double> metric_tol;
  std::optional<double> spectral_tol;
  selberg::Tolerances tolerances() const;
};

// Each command prints its report on stdout and returns the exit code:
// 0 when every check passes, 1 otherwise.
int build(const Common& c);
int check_exact(const Common& c);
int cycles(const Common& c);
int angle_sum(const Common& c, std::size_t samples);
int fixed_point(const Common& c, int dim, std::size_t max_length);
int invariance(const Common& c, int trials, std::uint64_t seed);
int express(const Common& c, int depth, const std::string& targets);
int poset(const Common& c);
int busemann_eval(const Common& c);
int asymptotic(const Common& c);
int verify_example(const Common& c, bool json);
int proptest(const std::string& suite, std::size_t trials, std::uint64_t seed);
int slice(const Common& c, const std::vector<double>& levels, double lo, double hi, std::size_t steps,
          const std::string& output);

}  // namespace ds
