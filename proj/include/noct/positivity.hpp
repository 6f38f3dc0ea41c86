#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "noct/convex.hpp"
#include "noct/infinitesimal.hpp"

namespace noct {

enum class Regime { in_Bminus, in_Bplus_not_Bminus, outside_Bplus };

std::string to_string(Regime r);
/// CSV label: in_Bminus, boundary, outside_Bplus.
std::string csv_label(Regime r);

struct BaseLocusVerdict {
  Regime verdict = Regime::outside_Bplus;
  Rational xi;
  Rational asymptotic_mult;
};

/// ord_E of the negative part of pi^* d; d need only be pseudoeffective.
Rational asymptotic_multiplicity(const PointedSurface& ps, const DivisorClass& d);

/// Moving Seshadri constant, computed as the largest inverted simplex constant.
Rational moving_seshadri(const PointedSurface& ps, const DivisorClass& d);

/// max{ eps >= 0 : d' - eps E is nef } on the blow-up, for nef d'.
Rational seshadri_via_nef_cone(const SurfaceModel& blowup, const DivisorClass& d_prime, std::size_t e_index);

/// -mult_x||d|| on the restricted base locus, otherwise the moving Seshadri
/// constant (0 on B+ \ B-, and for non-big classes outside B-).
Rational extended_seshadri(const PointedSurface& ps, const DivisorClass& d);

BaseLocusVerdict base_locus_membership(const PointedSurface& ps, const DivisorClass& d);

struct JetCertificate {
  bool certified = false;
  Rational xi;
  int threshold = 0;  // n + k; certification needs xi > threshold
};

/// One-sided certificate that K_X + d separates k-jets at x.
JetCertificate jets_separated(const PointedSurface& ps, const DivisorClass& d, int k);

struct ProfileSample {
  Rational t;
  Rational value;
  Regime regime;
};

/// t -> eps_x((1-t) d0 + t d1) along a segment.
struct SeshadriProfile {
  DivisorClass d0;
  DivisorClass d1;
  bool exact = false;
  /// Parameter range on which the segment is pseudoeffective.
  Rational t_begin;
  Rational t_end;
  /// Exact mode only: affine pieces, split at regime changes and kinks.
  PiecewiseLinear pieces;
  std::vector<Rational> regime_breakpoints;
  std::vector<Rational> kinks;
  /// Exact mode: one sample per breakpoint (endpoints included).
  std::vector<ProfileSample> samples;

  /// Sorted union of regime breakpoints and kinks.
  std::vector<Rational> breakpoints() const;
  /// Pieces with regime-only breakpoints fused.
  PiecewiseLinear formula() const { return pieces.merged(); }
};

SeshadriProfile seshadri_profile(const PointedSurface& ps, const DivisorClass& d0, const DivisorClass& d1, bool exact,
                                 const std::vector<Rational>& samples = {});

/// Value and regime of the extended Seshadri function at any pseudoeffective
/// class, including 0 and non-big classes.
ProfileSample evaluate_extended(const PointedSurface& ps, const DivisorClass& d);

}  // namespace noct
