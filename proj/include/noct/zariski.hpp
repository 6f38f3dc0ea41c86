#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "noct/lattice.hpp"

namespace noct {

/// D = P + N with N = sum a_i C_i over negative curves C_i.
struct ZariskiDecomposition {
  DivisorClass positive_part;
  std::vector<std::pair<std::size_t, Rational>> negative_part;
  std::vector<std::size_t> support;

  /// Coefficient of negative curve i in N (0 off the support).
  Rational coefficient(std::size_t curve) const;
  DivisorClass negative_class(const SurfaceModel& model) const;
};

bool is_pseudoeffective(const SurfaceModel& model, const DivisorClass& d);

/// d . C >= 0 for every negative curve and effective generator.
bool is_nef(const SurfaceModel& model, const DivisorClass& d);

/// Throws DomainError when d is not pseudoeffective and InternalError when the
/// model's curve data is inconsistent (singular or indefinite Gram system).
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

/// P^2 for the positive part P of d.
Rational volume(const SurfaceModel& model, const DivisorClass& d);

enum class Positivity { ample, nef_not_ample, big_not_nef, pseff_not_big, not_pseff };

std::string to_string(Positivity p);

Positivity classify(const SurfaceModel& model, const DivisorClass& d);

/// sup{ t > 0 : d - t f big } for big d and effective nonzero f, computed as the
/// largest t with d - t f in the effective cone.
Rational mu(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& f);

/// Zariski data of d(t) = base + t * direction on a parameter interval where the
/// support of the negative part is constant; everything is affine in t there.
struct ZariskiChamber {
  Rational begin;
  Rational end;
  std::vector<std::size_t> support;
  Vector coefficient_value;  // a_i(begin), one entry per negative curve
  Vector coefficient_slope;  // d a_i / dt

  Rational coefficient(std::size_t curve, const Rational& t) const;
};

/// Splits [t_begin, t_end] into maximal chambers. Every point of the segment
/// must be pseudoeffective.
std::vector<ZariskiChamber> walk_chambers(const SurfaceModel& model, const DivisorClass& base,
                                          const DivisorClass& direction, const Rational& t_begin,
                                          const Rational& t_end);

/// Positive part of base + t * direction inside a chamber.
DivisorClass chamber_positive_part(const SurfaceModel& model, const ZariskiChamber& chamber,
                                   const DivisorClass& base, const DivisorClass& direction, const Rational& t);

namespace detail {

/// Zariski decomposition of d + delta * v for an infinitesimal delta > 0. The
/// support is the one valid on a right neighbourhood of delta = 0.
struct DirectionalDecomposition {
  std::vector<std::size_t> support;
  Vector value;
  Vector slope;
};

DirectionalDecomposition decompose_along(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& v);

}  // namespace detail

}  // namespace noct
