#include "noct/lp.hpp"

#include <cstddef>
#include <optional>

#include "noct/errors.hpp"

namespace noct {

namespace {

struct Tableau {
  Matrix rows;  // last column is the right-hand side
  std::vector<std::size_t> basis;

  std::size_t rhs() const { return rows.empty() ? 0 : rows[0].size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    basis[r] = col;
  }

  // Runs simplex iterations over columns [0, allowed). Returns false when unbounded.
  bool optimize(const Vector& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*entering] <= 0) continue;
        const Rational ratio = rows[i][rhs()] / rows[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational objective(const Vector& cost) const {
    Rational value = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) value += cost[basis[i]] * rows[i][rhs()];
    return value;
  }
};

}  // namespace

LpResult maximize(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("lp: constraint row has wrong width");
  }
  if (b.size() != m) throw InputError("lp: right-hand side has wrong size");

  Tableau t;
  t.rows.assign(m, Vector(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = s * a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = s * b[i];
    t.basis[i] = n + i;
  }

  Vector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, n + m);
  if (t.objective(phase1) < 0) return {LpStatus::infeasible, 0, {}};

  // Drive artificial variables out of the basis; rows where that is
  // impossible are redundant and dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  Vector cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!t.optimize(cost, n)) return {LpStatus::unbounded, 0, {}};

  LpResult result{LpStatus::optimal, t.objective(cost), Vector(n, Rational(0))};
  for (std::size_t i = 0; i < t.rows.size(); ++i) result.x[t.basis[i]] = t.rows[i][t.rhs()];
  return result;
}

bool in_cone(const std::vector<Vector>& generators, const Vector& target) {
  bool zero = true;
  for (const auto& v : target) zero = zero && v == 0;
  if (zero) return true;
  if (generators.empty()) return false;
  const std::size_t dim = target.size();
  Matrix a(dim, Vector(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != dim) throw InputError("cone generator has wrong dimension");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];
  }
  return maximize(a, target, Vector(generators.size(), Rational(0))).status != LpStatus::infeasible;
}

bool in_convex_hull(const std::vector<Vector>& points, const Vector& point) {
  if (points.empty()) return false;
  const std::size_t dim = point.size();
  Matrix a(dim + 1, Vector(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = points[j][i];
    a[dim][j] = 1;
  }
  Vector b = point;
  b.push_back(1);
  return maximize(a, b, Vector(points.size(), Rational(0))).status != LpStatus::infeasible;
}

}  // namespace noct
