#include "selberg/tolerances.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "selberg/error.hpp"

namespace selberg {

Tolerances Tolerances::from_json(const nlohmann::json& j) {
  Tolerances t;
  const nlohmann::json& src = j.contains("tolerances") ? j.at("tolerances") : j;
  require(src.is_object(), ErrorCode::Parse, "tolerance config must be an object");
  for (auto it = src.begin(); it != src.end(); ++it) {
    require(it.value().is_number(), ErrorCode::Parse, "tolerance '" + it.key() + "' must be a number");
    const double v = it.value().get<double>();
    require(v > 0.0, ErrorCode::Parse, "tolerance '" + it.key() + "' must be positive");
    if (it.key() == "angle") t.angle = v;
    else if (it.key() == "metric") t.metric = v;
    else if (it.key() == "spectral") t.spectral = v;
    else throw Error(ErrorCode::Parse, "unknown tolerance key '" + it.key() + "'");
  }
  return t;
}

Tolerances Tolerances::from_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::Parse, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json Tolerances::to_json() const {
  return {{"angle", angle}, {"metric", metric}, {"spectral", spectral}};
}

}  // namespace selberg
