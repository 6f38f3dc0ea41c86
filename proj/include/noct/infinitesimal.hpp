#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "noct/convex.hpp"
#include "noct/lattice.hpp"
#include "noct/polygon.hpp"

namespace noct {

/// A point x on a surface model together with its blow-up X' -> X.
class PointedSurface {
 public:
  PointedSurface(SurfaceModel model, PointProfile point);

  const SurfaceModel& base() const { return base_; }
  const SurfaceModel& blowup() const { return blowup_; }
  const PointProfile& point() const { return point_; }

  /// Index of the exceptional curve E among the blow-up's negative curves.
  std::size_t exceptional() const { return exceptional_; }
  const DivisorClass& exceptional_class() const { return blowup_.negative_curves[exceptional_]; }

  /// Infinitesimal flag (E, z) for the named flag point ("" = default).
  FlagSpec flag(const std::string& z_label = {}) const;
  FlagSpec flag(std::vector<int> incidence) const;

  /// Throws InputError when the blow-up carries no nef cone data.
  void require_cones() const;

 private:
  SurfaceModel base_;
  PointProfile point_;
  SurfaceModel blowup_;
  std::size_t exceptional_;
};

/// Hull of {0, size e1, size (e1+e2), ..., size (e1+en)}.
struct InvertedSimplex {
  Rational size;
  int ambient_dim = 2;

  std::vector<Vector> vertices() const;
  Polygon polygon() const;  // ambient_dim must be 2
};

struct XiResult {
  Rational xi;
  std::string witness_flag;
  Polygon body;
};

/// Newton-Okounkov polygon of pi^* d on X' for the flag (E, z).
Polygon infinitesimal_body(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label = {});
Polygon infinitesimal_body(const PointedSurface& ps, const DivisorClass& d, const std::vector<int>& incidence);

/// Convenience form taking the model and point directly.
Polygon infinitesimal_body(const SurfaceModel& model_x, const PointProfile& x, const std::vector<int>& z_incidence,
                           const DivisorClass& d);

bool contains_inverted_simplex(const Polygon& body, const Rational& xi);

/// Largest inverted simplex constant for one flag; 0 when the origin is not
/// in the body.
XiResult xi_constant(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label = {});

/// Origin membership in the infinitesimal body (x outside the restricted base locus).
bool check_origin(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label = {});

}  // namespace noct
