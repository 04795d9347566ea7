#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

namespace selberg {

/// Float-mode comparison thresholds. Exact-mode checks never consult these.
struct Tolerances {
  double angle = 1e-6;
  double metric = 1e-9;
  double spectral = 1e-10;

  static Tolerances from_json(const nlohmann::json& j);
  static Tolerances from_file(const std::string& path);
  nlohmann::json to_json() const;
};

}  // namespace selberg
