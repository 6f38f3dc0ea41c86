#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noct/rational.hpp"

namespace noct {

/// Exact coordinate vector of a divisor class in a model's basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(Vector coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<Rational> coords) : coords_(coords) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(Vector(rank, Rational(0))); }
  static DivisorClass unit(std::size_t rank, std::size_t i) {
    DivisorClass d = zero(rank);
    d.coords_.at(i) = 1;
    return d;
  }

  std::size_t size() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  bool is_integral() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords_ == b.coords_; }

 private:
  Vector coords_;
};

std::string to_string(const DivisorClass& d);

/// True iff a = lambda * b for some lambda > 0.
bool same_ray(const DivisorClass& a, const DivisorClass& b);

/// A rank-rho divisor lattice with intersection form and cone data.
struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis_labels;
  Matrix intersection_matrix;
  std::vector<DivisorClass> negative_curves;
  std::vector<std::string> negative_curve_labels;
  std::vector<DivisorClass> effective_generators;
  std::vector<DivisorClass> nef_generators;
  std::optional<DivisorClass> canonical_class;
  int dimension_of_variety = 2;

  std::size_t rank() const { return basis_labels.size(); }

  /// Label of negative curve i; falls back to "C<i>" when unnamed.
  std::string curve_label(std::size_t i) const;
  std::optional<std::size_t> find_curve(const std::string& label) const;
};

/// a^T Q b. Throws InputError on a dimension mismatch.
Rational intersection(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);

struct ValidationEntry {
  std::string check;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  bool ok() const;
  std::string summary() const;
};

ValidationReport validate_model(const SurfaceModel& model);

/// Cone data of a blow-up that the lattice alone cannot derive. Classes are
/// expressed in the blow-up basis (old basis followed by the new exceptional).
struct BlowupCones {
  std::vector<DivisorClass> extra_negative_curves;
  std::vector<std::string> extra_negative_curve_labels;
  std::vector<DivisorClass> effective_generators;
  std::vector<DivisorClass> nef_generators;
  /// Optional relabelling of all negative curves of the blow-up.
  std::vector<std::string> negative_curve_labels;
};

/// A point x on a surface model together with the data needed to blow it up
/// and to place the flag point z on the exceptional curve.
struct PointProfile {
  std::string label;
  /// mult_x(C) for every negative curve C of the source model.
  std::vector<int> multiplicities;
  /// Local intersection multiplicity at z of each negative curve of the
  /// blow-up with the exceptional curve (entry for the exceptional itself is 0).
  std::vector<int> flag_incidence;
  /// Further named flag points z on the same exceptional curve.
  std::map<std::string, std::vector<int>> alternate_incidences;
  std::optional<BlowupCones> cones;

  /// Incidence data of a named flag point; "" or "default" gives flag_incidence.
  const std::vector<int>& incidence(const std::string& z_label) const;
};

/// Blow-up at a point. The new exceptional class is the last basis vector and
/// the last entry of negative_curves before any supplied extra curves.
SurfaceModel blow_up(const SurfaceModel& model, const PointProfile& profile);

/// Index of the exceptional curve of blow_up(model, profile) in its
/// negative_curves list.
std::size_t exceptional_index(const SurfaceModel& source);

/// pi^* d: coordinates extended by 0 on the exceptional basis vector.
DivisorClass pullback(const DivisorClass& d);

}  // namespace noct
