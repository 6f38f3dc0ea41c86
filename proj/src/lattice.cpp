#include "noct/lattice.hpp"

#include <sstream>

#include "noct/errors.hpp"
#include "noct/linear_algebra.hpp"

namespace noct {

bool DivisorClass::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool DivisorClass::is_integral() const {
  for (const auto& c : coords_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) throw InputError("divisor classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size() != size()) throw InputError("divisor classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string to_string(const DivisorClass& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += to_string(d[i]);
  }
  return out + ")";
}

bool same_ray(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size() || a.is_zero() || b.is_zero()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    const Rational r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && *ratio > 0;
}

std::string SurfaceModel::curve_label(std::size_t i) const {
  if (i < negative_curve_labels.size() && !negative_curve_labels[i].empty()) return negative_curve_labels[i];
  return "C" + std::to_string(i);
}

std::optional<std::size_t> SurfaceModel::find_curve(const std::string& label) const {
  for (std::size_t i = 0; i < negative_curves.size(); ++i) {
    if (curve_label(i) == label) return i;
  }
  return std::nullopt;
}

Rational intersection(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  const std::size_t r = model.rank();
  if (a.size() != r || b.size() != r) {
    throw InputError("class dimension " + std::to_string(a.size()) + "/" + std::to_string(b.size()) +
                     " does not match model rank " + std::to_string(r));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) sum += a[i] * model.intersection_matrix[i][j] * b[j];
  }
  return sum;
}

bool ValidationReport::ok() const {
  for (const auto& e : entries) {
    if (!e.passed) return false;
  }
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.passed ? "pass " : "FAIL ") << e.check;
    if (!e.passed) os << ": " << e.witness;
    os << '\n';
  }
  return os.str();
}

ValidationReport validate_model(const SurfaceModel& model) {
  ValidationReport report;
  const std::size_t r = model.rank();
  auto add = [&report](std::string check, bool passed, std::string witness = {}) {
    report.entries.push_back({std::move(check), passed, std::move(witness)});
  };

  bool shape_ok = r > 0 && model.intersection_matrix.size() == r;
  for (const auto& row : model.intersection_matrix) shape_ok = shape_ok && row.size() == r;
  auto class_ok = [r](const DivisorClass& d) { return d.size() == r; };
  std::string bad_class;
  for (std::size_t i = 0; i < model.negative_curves.size() && bad_class.empty(); ++i) {
    if (!class_ok(model.negative_curves[i])) bad_class = "negative curve " + std::to_string(i);
  }
  for (std::size_t i = 0; i < model.effective_generators.size() && bad_class.empty(); ++i) {
    if (!class_ok(model.effective_generators[i])) bad_class = "effective generator " + std::to_string(i);
  }
  for (std::size_t i = 0; i < model.nef_generators.size() && bad_class.empty(); ++i) {
    if (!class_ok(model.nef_generators[i])) bad_class = "nef generator " + std::to_string(i);
  }
  if (model.canonical_class && !class_ok(*model.canonical_class) && bad_class.empty()) bad_class = "canonical class";
  add("dimensions", shape_ok && bad_class.empty(), shape_ok ? bad_class : "intersection matrix is not rank x rank");
  if (!shape_ok || !bad_class.empty()) return report;

  std::string asym;
  for (std::size_t i = 0; i < r && asym.empty(); ++i) {
    for (std::size_t j = i + 1; j < r && asym.empty(); ++j) {
      if (model.intersection_matrix[i][j] != model.intersection_matrix[j][i]) {
        asym = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  add("symmetric", asym.empty(), asym);
  if (!asym.empty()) return report;

  const Inertia in = inertia(model.intersection_matrix);
  const bool hodge = in.positive == 1 && in.negative == static_cast<int>(r) - 1 && in.zero == 0;
  add("signature (1, rank-1)", hodge,
      "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," + std::to_string(in.zero) + ")");

  std::string nonneg;
  for (std::size_t i = 0; i < model.negative_curves.size() && nonneg.empty(); ++i) {
    const Rational self = intersection(model, model.negative_curves[i], model.negative_curves[i]);
    if (self >= 0) nonneg = model.curve_label(i) + "^2 = " + to_string(self);
  }
  add("negative curves have C^2 < 0", nonneg.empty(), nonneg);

  std::string dual;
  for (std::size_t i = 0; i < model.nef_generators.size() && dual.empty(); ++i) {
    for (std::size_t j = 0; j < model.effective_generators.size() && dual.empty(); ++j) {
      const Rational v = intersection(model, model.nef_generators[i], model.effective_generators[j]);
      if (v < 0) dual = "nef " + std::to_string(i) + " . effective " + std::to_string(j) + " = " + to_string(v);
    }
  }
  add("nef generators pair >= 0 with effective generators", dual.empty(), dual);

  std::string missing;
  for (std::size_t i = 0; i < model.negative_curves.size() && missing.empty(); ++i) {
    bool found = false;
    for (const auto& g : model.effective_generators) found = found || same_ray(model.negative_curves[i], g);
    if (!found) missing = model.curve_label(i);
  }
  add("negative curves are effective generators", missing.empty(), missing);
  return report;
}

const std::vector<int>& PointProfile::incidence(const std::string& z_label) const {
  if (z_label.empty() || z_label == "default") return flag_incidence;
  const auto it = alternate_incidences.find(z_label);
  if (it == alternate_incidences.end()) throw InputError("unknown flag point '" + z_label + "' on " + label);
  return it->second;
}

std::size_t exceptional_index(const SurfaceModel& source) { return source.negative_curves.size(); }

DivisorClass pullback(const DivisorClass& d) {
  Vector c = d.coords();
  c.push_back(0);
  return DivisorClass(std::move(c));
}

namespace {

std::string fresh_exceptional_label(const std::vector<std::string>& labels) {
  auto used = [&labels](const std::string& s) {
    for (const auto& l : labels) {
      if (l == s) return true;
    }
    return false;
  };
  if (!used("E")) return "E";
  for (int k = 2;; ++k) {
    const std::string candidate = "E" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace

SurfaceModel blow_up(const SurfaceModel& model, const PointProfile& profile) {
  if (profile.multiplicities.size() != model.negative_curves.size()) {
    throw InputError("point '" + profile.label + "' gives " + std::to_string(profile.multiplicities.size()) +
                     " multiplicities for " + std::to_string(model.negative_curves.size()) + " negative curves");
  }
  for (int m : profile.multiplicities) {
    if (m < 0) throw InputError("negative multiplicity in point '" + profile.label + "'");
  }
  const std::size_t r = model.rank();
  SurfaceModel out;
  out.name = model.name + "/blowup:" + profile.label;
  out.basis_labels = model.basis_labels;
  const std::string e_label = fresh_exceptional_label(model.basis_labels);
  out.basis_labels.push_back(e_label);
  out.intersection_matrix.assign(r + 1, Vector(r + 1, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out.intersection_matrix[i][j] = model.intersection_matrix[i][j];
  }
  out.intersection_matrix[r][r] = -1;
  out.dimension_of_variety = model.dimension_of_variety;

  const DivisorClass e = DivisorClass::unit(r + 1, r);
  std::vector<DivisorClass> strict;
  for (std::size_t i = 0; i < model.negative_curves.size(); ++i) {
    strict.push_back(pullback(model.negative_curves[i]) - Rational(profile.multiplicities[i]) * e);
    out.negative_curves.push_back(strict.back());
    out.negative_curve_labels.push_back(model.curve_label(i) + (profile.multiplicities[i] ? "~" : ""));
  }
  out.negative_curves.push_back(e);
  out.negative_curve_labels.push_back(e_label);

  for (const auto& g : model.effective_generators) {
    std::optional<std::size_t> curve;
    for (std::size_t i = 0; i < model.negative_curves.size() && !curve; ++i) {
      if (same_ray(g, model.negative_curves[i])) curve = i;
    }
    out.effective_generators.push_back(curve ? strict[*curve] : pullback(g));
  }
  out.effective_generators.push_back(e);

  if (model.canonical_class) out.canonical_class = pullback(*model.canonical_class) + e;

  if (profile.cones) {
    const BlowupCones& cones = *profile.cones;
    for (std::size_t i = 0; i < cones.extra_negative_curves.size(); ++i) {
      if (cones.extra_negative_curves[i].size() != r + 1) throw InputError("extra negative curve has wrong rank");
      out.negative_curves.push_back(cones.extra_negative_curves[i]);
      out.negative_curve_labels.push_back(i < cones.extra_negative_curve_labels.size()
                                              ? cones.extra_negative_curve_labels[i]
                                              : "C" + std::to_string(out.negative_curves.size() - 1));
    }
    if (!cones.effective_generators.empty()) out.effective_generators = cones.effective_generators;
    out.nef_generators = cones.nef_generators;
    if (!cones.negative_curve_labels.empty()) {
      if (cones.negative_curve_labels.size() != out.negative_curves.size()) {
        throw InputError("blow-up curve labels do not match the number of negative curves");
      }
      out.negative_curve_labels = cones.negative_curve_labels;
    }
  }
  return out;
}

}  // namespace noct
