#include "noct/infinitesimal.hpp"

#include <algorithm>

#include "noct/errors.hpp"
#include "noct/zariski.hpp"

namespace noct {

PointedSurface::PointedSurface(SurfaceModel model, PointProfile point)
    : base_(std::move(model)), point_(std::move(point)) {
  blowup_ = blow_up(base_, point_);
  exceptional_ = exceptional_index(base_);
  const auto report = validate_model(blowup_);
  if (!report.ok()) {
    throw InputError("blow-up of " + base_.name + " at " + point_.label + " is invalid:\n" + report.summary());
  }
}

FlagSpec PointedSurface::flag(const std::string& z_label) const { return flag(point_.incidence(z_label)); }

FlagSpec PointedSurface::flag(std::vector<int> incidence) const {
  if (incidence.size() > blowup_.negative_curves.size()) {
    throw InputError("flag incidence has more entries than the blow-up has negative curves");
  }
  return FlagSpec::on_negative_curve(blowup_, exceptional_, std::move(incidence));
}

void PointedSurface::require_cones() const {
  if (blowup_.nef_generators.empty()) {
    throw InputError("no nef cone data for the blow-up of " + base_.name + " at " + point_.label);
  }
}

std::vector<Vector> InvertedSimplex::vertices() const {
  const std::size_t n = static_cast<std::size_t>(ambient_dim);
  std::vector<Vector> out;
  out.emplace_back(n, Rational(0));
  Vector v(n, Rational(0));
  v[0] = size;
  out.push_back(v);
  for (std::size_t i = 1; i < n; ++i) {
    Vector w = v;
    w[i] = size;
    out.push_back(w);
  }
  return out;
}

Polygon InvertedSimplex::polygon() const {
  if (ambient_dim != 2) throw InputError("inverted simplex polygon needs ambient dimension 2");
  return Polygon::hull({{0, 0}, {size, 0}, {size, size}});
}

Polygon infinitesimal_body(const PointedSurface& ps, const DivisorClass& d, const std::vector<int>& incidence) {
  ps.require_cones();
  if (d.size() != ps.base().rank()) throw InputError("class does not match the rank of " + ps.base().name);
  if (volume(ps.base(), d) <= 0) throw DomainError("class " + to_string(d) + " is not big");
  return okounkov_polygon(ps.blowup(), pullback(d), ps.flag(incidence));
}

Polygon infinitesimal_body(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label) {
  return infinitesimal_body(ps, d, ps.point().incidence(z_label));
}

Polygon infinitesimal_body(const SurfaceModel& model_x, const PointProfile& x, const std::vector<int>& z_incidence,
                           const DivisorClass& d) {
  return infinitesimal_body(PointedSurface(model_x, x), d, z_incidence);
}

bool contains_inverted_simplex(const Polygon& body, const Rational& xi) {
  if (xi < 0) throw InputError("inverted simplex size must be nonnegative");
  return body.contains(Point2{0, 0}) && body.contains(Point2{xi, 0}) && body.contains(Point2{xi, xi});
}

XiResult xi_constant(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label) {
  XiResult out;
  out.witness_flag = "(" + ps.blowup().curve_label(ps.exceptional()) + ", z=" +
                     (z_label.empty() ? std::string("default") : z_label) + ")";
  out.body = infinitesimal_body(ps, d, z_label);
  const auto horizontal = out.body.ray_exit(1, 0);
  if (!horizontal) {
    out.xi = 0;
    return out;
  }
  out.xi = std::min(*horizontal, *out.body.ray_exit(1, 1));
  return out;
}

bool check_origin(const PointedSurface& ps, const DivisorClass& d, const std::string& z_label) {
  return infinitesimal_body(ps, d, z_label).contains(Point2{0, 0});
}

}  // namespace noct
