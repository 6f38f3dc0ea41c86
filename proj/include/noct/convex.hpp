#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "noct/rational.hpp"

namespace noct {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

/// Twice the signed area of the triangle (o, a, b); positive for a left turn.
Rational cross(const Point2& o, const Point2& a, const Point2& b);

/// Convex polygon with exact vertices in canonical form: counterclockwise,
/// starting at the lexicographically smallest vertex, no repeated or collinear
/// vertices. Segments (2 vertices) and points (1 vertex) are allowed.
class Polygon {
 public:
  Polygon() = default;

  static Polygon hull(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  bool contains(const Point2& p) const;
  bool contains(const Polygon& inner) const;
  Rational area() const;

  Polygon translated(const Rational& dx, const Rational& dy) const;

  /// Intersection with the half-plane x >= x0.
  Polygon clipped_left(const Rational& x0) const;

  /// max{ t >= 0 : t * (dx, dy) in polygon }; nullopt if the origin is outside.
  std::optional<Rational> ray_exit(const Rational& dx, const Rational& dy) const;

  Rational min_x() const;
  Rational max_x() const;

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point2> vertices_;
};

std::string to_string(const Polygon& p);

/// y = slope * t + intercept.
struct AffinePiece {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& t) const { return slope * t + intercept; }
  friend bool operator==(const AffinePiece& a, const AffinePiece& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }

  static AffinePiece through(const Rational& t0, const Rational& v0, const Rational& t1, const Rational& v1);
};

/// Piecewise affine function on [breakpoints.front(), breakpoints.back()];
/// pieces[i] lives on [breakpoints[i], breakpoints[i+1]].
struct PiecewiseLinear {
  std::vector<Rational> breakpoints;
  std::vector<AffinePiece> pieces;

  Rational operator()(const Rational& t) const;
  bool is_continuous() const;
  /// Interior breakpoints where the one-sided slopes differ.
  std::vector<Rational> kinks() const;
  /// Same function with adjacent identical pieces fused, except across `keep`.
  PiecewiseLinear merged(const std::vector<Rational>& keep = {}) const;
};

}  // namespace noct
