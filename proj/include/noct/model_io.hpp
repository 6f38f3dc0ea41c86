#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "noct/lattice.hpp"

namespace noct {

/// A surface model with its named points.
struct ModelFile {
  int schema_version = 1;
  SurfaceModel model;
  std::vector<PointProfile> points;

  const PointProfile& point(const std::string& label) const;
};

/// Built-in registry: "p2", "hirzebruch:n", "blp-p2", "example5".
ModelFile builtin_model(const std::string& name);
std::vector<std::string> builtin_names();

/// Resolves a built-in name, then NAME.json in each directory of
/// NOCT_MODEL_PATH (colon separated). The result is validated.
ModelFile load_model(const std::string& name);
ModelFile load_model_file(const std::string& path);

ModelFile parse_model_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelFile& file);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const DivisorClass& d);
Rational rational_from_json(const nlohmann::json& j);
DivisorClass class_from_json(const nlohmann::json& j);

}  // namespace noct
