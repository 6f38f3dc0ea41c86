#pragma once

#include <vector>

#include "noct/rational.hpp"

namespace noct {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  Vector x;
};

/// Exact two-phase simplex with Bland's rule:
///   maximize c.x subject to A x = b, x >= 0.
LpResult maximize(const Matrix& a, const Vector& b, const Vector& c);

/// True iff target is a nonnegative combination of the generators.
bool in_cone(const std::vector<Vector>& generators, const Vector& target);

/// True iff point is a convex combination of the given points.
bool in_convex_hull(const std::vector<Vector>& points, const Vector& point);

}  // namespace noct
