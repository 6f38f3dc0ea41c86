#include "noct/convex.hpp"

#include <algorithm>

#include "noct/errors.hpp"

namespace noct {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Polygon Polygon::hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polygon out;
  if (points.size() <= 1) {
    out.vertices_ = std::move(points);
    return out;
  }
  std::vector<Point2> h;
  h.reserve(2 * points.size());
  for (const auto& p : points) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  out.vertices_ = std::move(h);
  return out;
}

bool Polygon::contains(const Point2& p) const {
  const auto& v = vertices_;
  switch (v.size()) {
    case 0: return false;
    case 1: return v[0] == p;
    case 2:
      return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
             std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      }
      return true;
  }
}

bool Polygon::contains(const Polygon& inner) const {
  for (const auto& p : inner.vertices_) {
    if (!contains(p)) return false;
  }
  return true;
}

Rational Polygon::area() const {
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2;
}

Polygon Polygon::translated(const Rational& dx, const Rational& dy) const {
  Polygon out = *this;
  for (auto& p : out.vertices_) {
    p.x += dx;
    p.y += dy;
  }
  return out;
}

Polygon Polygon::clipped_left(const Rational& x0) const {
  std::vector<Point2> kept;
  const auto& v = vertices_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    if (a.x >= x0) kept.push_back(a);
    if ((a.x < x0) != (b.x < x0)) {
      const Rational s = (x0 - a.x) / (b.x - a.x);
      kept.push_back({x0, a.y + s * (b.y - a.y)});
    }
  }
  return hull(std::move(kept));
}

std::optional<Rational> Polygon::ray_exit(const Rational& dx, const Rational& dy) const {
  const Point2 origin{0, 0};
  if (!contains(origin)) return std::nullopt;
  if (dx == 0 && dy == 0) throw InputError("ray_exit: zero direction");
  const auto& v = vertices_;
  if (v.size() == 1) return Rational(0);
  if (v.size() == 2) {
    // The origin lies on the segment; the ray stays inside only along it.
    const Point2 dir{dx, dy};
    if (cross(origin, Point2{v[1].x - v[0].x, v[1].y - v[0].y}, dir) != 0) return Rational(0);
    Rational best = 0;
    for (const auto& p : v) {
      const Rational t = dx != 0 ? p.x / dx : p.y / dy;
      best = std::max(best, t);
    }
    return best;
  }
  std::optional<Rational> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    // cross(a, b, t*d) = t * ((b-a) x d) - ((b-a) x a) must stay >= 0
    const Rational ex = b.x - a.x, ey = b.y - a.y;
    const Rational along = ex * dy - ey * dx;
    if (along >= 0) continue;
    const Rational offset = ex * a.y - ey * a.x;
    const Rational t = offset / along;
    if (!best || t < *best) best = t;
  }
  if (!best) throw InternalError("ray_exit: polygon is unbounded");
  return *best;
}

Rational Polygon::min_x() const {
  if (vertices_.empty()) throw InputError("empty polygon");
  return vertices_.front().x;
}

Rational Polygon::max_x() const {
  if (vertices_.empty()) throw InputError("empty polygon");
  Rational m = vertices_.front().x;
  for (const auto& p : vertices_) m = std::max(m, p.x);
  return m;
}

std::string to_string(const Polygon& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(p.vertices()[i].x) + "," + to_string(p.vertices()[i].y) + ")";
  }
  return out + "]";
}

AffinePiece AffinePiece::through(const Rational& t0, const Rational& v0, const Rational& t1, const Rational& v1) {
  if (t0 == t1) return {0, v0};
  const Rational slope = (v1 - v0) / (t1 - t0);
  return {slope, v0 - slope * t0};
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
  if (pieces.empty() || t < breakpoints.front() || t > breakpoints.back()) {
    throw DomainError("piecewise function evaluated outside its domain at " + to_string(t));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (t <= breakpoints[i + 1]) return pieces[i](t);
  }
  return pieces.back()(t);
}

bool PiecewiseLinear::is_continuous() const {
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i - 1](breakpoints[i]) != pieces[i](breakpoints[i])) return false;
  }
  return true;
}

std::vector<Rational> PiecewiseLinear::kinks() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i - 1].slope != pieces[i].slope) out.push_back(breakpoints[i]);
  }
  return out;
}

PiecewiseLinear PiecewiseLinear::merged(const std::vector<Rational>& keep) const {
  PiecewiseLinear out;
  if (pieces.empty()) return *this;
  out.breakpoints.push_back(breakpoints.front());
  out.pieces.push_back(pieces.front());
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const bool pinned = std::find(keep.begin(), keep.end(), breakpoints[i]) != keep.end();
    if (!pinned && pieces[i] == out.pieces.back()) continue;
    out.breakpoints.push_back(breakpoints[i]);
    out.pieces.push_back(pieces[i]);
  }
  out.breakpoints.push_back(breakpoints.back());
  return out;
}

}  // namespace noct
