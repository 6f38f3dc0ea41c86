#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "noct/convex.hpp"
#include "noct/lattice.hpp"
#include "noct/zariski.hpp"

namespace noct {

/// Admissible flag (C, z) on a surface: an irreducible curve class C and the
/// local intersection multiplicities at z of the negative curves with C.
struct FlagSpec {
  DivisorClass curve;
  /// Set when C is one of the model's negative curves.
  std::optional<std::size_t> curve_index;
  /// One entry per negative curve of the model.
  std::vector<int> incidence;

  static FlagSpec on_negative_curve(const SurfaceModel& model, std::size_t index, std::vector<int> incidence = {});
  static FlagSpec on_class(const SurfaceModel& model, DivisorClass curve, std::vector<int> incidence = {});
};

/// Throws InputError unless the flag curve is a nonzero effective class and
/// every incidence is between 0 and the global intersection number.
void validate_flag(const SurfaceModel& model, const FlagSpec& flag);

/// Newton-Okounkov polygon of a big class together with its boundary functions:
/// the polygon is { (t, y) : start <= t <= end, lower(t) <= y <= upper(t) }.
struct OkounkovData {
  Polygon polygon;
  PiecewiseLinear lower;
  PiecewiseLinear upper;
  std::vector<ZariskiChamber> chambers;
};

OkounkovData okounkov_data(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag);

Polygon okounkov_polygon(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag);

/// Polygon of d - t C translated by (t, 0); requires 0 <= t < mu(d; C).
Polygon slice_at(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag, const Rational& t);

}  // namespace noct
