#include "noct/model_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noct/errors.hpp"

namespace noct {

using nlohmann::json;

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? fallback : it->get<T>();
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("model file is missing field '") + key + "'");
  return *it;
}

std::vector<DivisorClass> classes_from_json(const json& j) {
  std::vector<DivisorClass> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw InputError("expected a list of classes");
  for (const auto& c : j) out.push_back(class_from_json(c));
  return out;
}

json classes_to_json(const std::vector<DivisorClass>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

}  // namespace

const PointProfile& ModelFile::point(const std::string& label) const {
  for (const auto& p : points) {
    if (p.label == label) return p;
  }
  std::string known;
  for (const auto& p : points) known += (known.empty() ? "" : ", ") + p.label;
  throw InputError("model " + model.name + " has no point '" + label + "' (known: " + known + ")");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const DivisorClass& d) {
  json out = json::array();
  for (const auto& c : d.coords()) out.push_back(to_json(c));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an exact rational (\"p/q\" string or integer), got " + j.dump());
}

DivisorClass class_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a class as a list of rationals, got " + j.dump());
  Vector v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return DivisorClass(std::move(v));
}

ModelFile parse_model_json(const json& j) {
  if (!j.is_object()) throw InputError("model file must be a JSON object");
  ModelFile f;
  f.schema_version = get_or<int>(j, "schema_version", 1);
  if (f.schema_version != 1) throw InputError("unsupported schema_version " + std::to_string(f.schema_version));
  const json& m = require(j, "model");
  SurfaceModel& model = f.model;
  model.name = get_or<std::string>(m, "name", "unnamed");
  model.basis_labels = require(m, "basis_labels").get<std::vector<std::string>>();
  if (m.contains("rank") && m.at("rank").get<std::size_t>() != model.basis_labels.size()) {
    throw InputError("rank does not match the number of basis labels");
  }
  for (const auto& row : require(m, "intersection_matrix")) model.intersection_matrix.push_back(class_from_json(row).coords());
  model.negative_curves = classes_from_json(get_or<json>(m, "negative_curves", json::array()));
  model.negative_curve_labels = get_or<std::vector<std::string>>(m, "negative_curve_labels", {});
  model.effective_generators = classes_from_json(require(m, "effective_generators"));
  model.nef_generators = classes_from_json(get_or<json>(m, "nef_generators", json::array()));
  if (m.contains("canonical_class") && !m.at("canonical_class").is_null()) {
    model.canonical_class = class_from_json(m.at("canonical_class"));
  }
  model.dimension_of_variety = get_or<int>(m, "dimension_of_variety", 2);

  const json cones = get_or<json>(j, "blowup_cones", json::object());
  for (const auto& p : get_or<json>(j, "points", json::array())) {
    PointProfile profile;
    profile.label = require(p, "label").get<std::string>();
    profile.multiplicities = get_or<std::vector<int>>(p, "multiplicities", {});
    profile.flag_incidence = get_or<std::vector<int>>(p, "flag_incidence", {});
    profile.alternate_incidences =
        get_or<std::map<std::string, std::vector<int>>>(p, "alternate_incidences", {});
    if (cones.contains(profile.label)) {
      const json& c = cones.at(profile.label);
      BlowupCones bc;
      bc.extra_negative_curves = classes_from_json(get_or<json>(c, "extra_negative_curves", json::array()));
      bc.extra_negative_curve_labels = get_or<std::vector<std::string>>(c, "extra_negative_curve_labels", {});
      bc.effective_generators = classes_from_json(get_or<json>(c, "effective_generators", json::array()));
      bc.nef_generators = classes_from_json(get_or<json>(c, "nef_generators", json::array()));
      bc.negative_curve_labels = get_or<std::vector<std::string>>(c, "negative_curve_labels", {});
      profile.cones = std::move(bc);
    }
    f.points.push_back(std::move(profile));
  }
  return f;
}

json to_json(const ModelFile& file) {
  const SurfaceModel& m = file.model;
  json model = {
      {"name", m.name},
      {"rank", m.rank()},
      {"basis_labels", m.basis_labels},
      {"negative_curves", classes_to_json(m.negative_curves)},
      {"negative_curve_labels", m.negative_curve_labels},
      {"effective_generators", classes_to_json(m.effective_generators)},
      {"nef_generators", classes_to_json(m.nef_generators)},
      {"canonical_class", m.canonical_class ? to_json(*m.canonical_class) : json(nullptr)},
      {"dimension_of_variety", m.dimension_of_variety},
  };
  json q = json::array();
  for (const auto& row : m.intersection_matrix) q.push_back(to_json(DivisorClass(row)));
  model["intersection_matrix"] = q;

  json points = json::array();
  json cones = json::object();
  for (const auto& p : file.points) {
    json jp = {{"label", p.label}, {"multiplicities", p.multiplicities}, {"flag_incidence", p.flag_incidence}};
    jp["alternate_incidences"] = p.alternate_incidences;
    points.push_back(jp);
    if (p.cones) {
      cones[p.label] = {
          {"extra_negative_curves", classes_to_json(p.cones->extra_negative_curves)},
          {"extra_negative_curve_labels", p.cones->extra_negative_curve_labels},
          {"effective_generators", classes_to_json(p.cones->effective_generators)},
          {"nef_generators", classes_to_json(p.cones->nef_generators)},
          {"negative_curve_labels", p.cones->negative_curve_labels},
      };
    }
  }
  return {{"schema_version", file.schema_version}, {"model", model}, {"points", points}, {"blowup_cones", cones}};
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  ModelFile f;
  try {
    f = parse_model_json(j);
  } catch (const json::exception& e) {
    throw InputError("bad model file '" + path + "': " + e.what());
  }
  const auto report = validate_model(f.model);
  if (!report.ok()) throw InputError("model '" + f.model.name + "' failed validation:\n" + report.summary());
  for (const auto& p : f.points) {
    if (p.multiplicities.size() != f.model.negative_curves.size()) {
      throw InputError("point '" + p.label + "' needs one multiplicity per negative curve");
    }
  }
  return f;
}

ModelFile load_model(const std::string& name) {
  bool builtin = name == "p2" || name == "blp-p2" || name == "example5" || name.rfind("hirzebruch:", 0) == 0;
  if (builtin) return builtin_model(name);
  if (const char* path = std::getenv("NOCT_MODEL_PATH")) {
    std::stringstream dirs(path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      const auto candidate = std::filesystem::path(dir) / (name + ".json");
      if (std::filesystem::exists(candidate)) return load_model_file(candidate.string());
    }
  }
  throw InputError("unknown model '" + name + "' (built-ins: p2, hirzebruch:n, blp-p2, example5)");
}

}  // namespace noct
