#include "noct/zariski.hpp"

#include <algorithm>
#include <optional>

#include "noct/errors.hpp"
#include "noct/linear_algebra.hpp"
#include "noct/lp.hpp"

namespace noct {

namespace {

int lex_sign(const Rational& value, const Rational& slope) {
  const int s = sign(value);
  return s != 0 ? s : sign(slope);
}

std::vector<Vector> coords_of(const std::vector<DivisorClass>& classes) {
  std::vector<Vector> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.coords());
  return out;
}

void check_rank(const SurfaceModel& model, const DivisorClass& d) {
  if (d.size() != model.rank()) {
    throw InputError("class " + to_string(d) + " does not match model rank " + std::to_string(model.rank()));
  }
}

}  // namespace

Rational ZariskiDecomposition::coefficient(std::size_t curve) const {
  for (const auto& [i, a] : negative_part) {
    if (i == curve) return a;
  }
  return 0;
}

DivisorClass ZariskiDecomposition::negative_class(const SurfaceModel& model) const {
  DivisorClass n = DivisorClass::zero(model.rank());
  for (const auto& [i, a] : negative_part) n += a * model.negative_curves[i];
  return n;
}

Rational ZariskiChamber::coefficient(std::size_t curve, const Rational& t) const {
  return coefficient_value[curve] + coefficient_slope[curve] * (t - begin);
}

bool is_pseudoeffective(const SurfaceModel& model, const DivisorClass& d) {
  check_rank(model, d);
  return in_cone(coords_of(model.effective_generators), d.coords());
}

bool is_nef(const SurfaceModel& model, const DivisorClass& d) {
  check_rank(model, d);
  for (const auto& c : model.negative_curves) {
    if (intersection(model, d, c) < 0) return false;
  }
  for (const auto& g : model.effective_generators) {
    if (intersection(model, d, g) < 0) return false;
  }
  return true;
}

namespace detail {

DirectionalDecomposition decompose_along(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& v) {
  const auto& curves = model.negative_curves;
  const std::size_t k = curves.size();
  Vector d_dot(k), v_dot(k);
  Matrix gram(k, Vector(k));
  for (std::size_t i = 0; i < k; ++i) {
    d_dot[i] = intersection(model, d, curves[i]);
    v_dot[i] = intersection(model, v, curves[i]);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = intersection(model, curves[i], curves[j]);
  }

  std::vector<bool> in_support(k, false);
  Vector value(k, Rational(0)), slope(k, Rational(0));
  // Each round adds at least one curve, so at most k rounds.
  for (std::size_t round = 0; round <= k; ++round) {
    bool added = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (in_support[c]) continue;
      Rational p0 = d_dot[c], p1 = v_dot[c];
      for (std::size_t i = 0; i < k; ++i) {
        if (!in_support[i]) continue;
        p0 -= value[i] * gram[i][c];
        p1 -= slope[i] * gram[i][c];
      }
      if (lex_sign(p0, p1) < 0) {
        in_support[c] = true;
        added = true;
      }
    }
    if (!added) break;

    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i) {
      if (in_support[i]) s.push_back(i);
    }
    Matrix sub(s.size(), Vector(s.size()));
    Vector rhs0(s.size()), rhs1(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) sub[a][b] = gram[s[a]][s[b]];
      rhs0[a] = d_dot[s[a]];
      rhs1[a] = v_dot[s[a]];
    }
    if (!is_negative_definite(sub)) {
      throw InternalError("Zariski support has an indefinite Gram matrix; the model's curve data is inconsistent");
    }
    const auto x0 = solve(sub, rhs0);
    const auto x1 = solve(sub, rhs1);
    if (!x0 || !x1) throw InternalError("singular Gram system in Zariski decomposition");
    std::fill(value.begin(), value.end(), Rational(0));
    std::fill(slope.begin(), slope.end(), Rational(0));
    for (std::size_t a = 0; a < s.size(); ++a) {
      value[s[a]] = (*x0)[a];
      slope[s[a]] = (*x1)[a];
      if (lex_sign(value[s[a]], slope[s[a]]) < 0) {
        throw InternalError("negative Zariski coefficient for " + model.curve_label(s[a]) +
                            "; the model's curve list is incomplete or the class is not pseudoeffective");
      }
    }
  }

  DirectionalDecomposition out;
  for (std::size_t i = 0; i < k; ++i) {
    if (in_support[i] && lex_sign(value[i], slope[i]) > 0) out.support.push_back(i);
  }
  out.value = std::move(value);
  out.slope = std::move(slope);
  return out;
}

}  // namespace detail

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_pseudoeffective(model, d)) throw DomainError("class " + to_string(d) + " is not pseudoeffective");
  const auto dd = detail::decompose_along(model, d, DivisorClass::zero(model.rank()));
  ZariskiDecomposition z;
  z.positive_part = d;
  for (std::size_t i : dd.support) {
    z.negative_part.emplace_back(i, dd.value[i]);
    z.support.push_back(i);
    z.positive_part -= dd.value[i] * model.negative_curves[i];
  }
  return z;
}

Rational volume(const SurfaceModel& model, const DivisorClass& d) {
  const auto z = zariski_decompose(model, d);
  return intersection(model, z.positive_part, z.positive_part);
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::ample: return "ample";
    case Positivity::nef_not_ample: return "nef-not-ample";
    case Positivity::big_not_nef: return "big-not-nef";
    case Positivity::pseff_not_big: return "pseff-not-big";
    case Positivity::not_pseff: return "not-pseff";
  }
  return "unknown";
}

Positivity classify(const SurfaceModel& model, const DivisorClass& d) {
  check_rank(model, d);
  if (d.is_zero()) return Positivity::nef_not_ample;
  if (!is_pseudoeffective(model, d)) return Positivity::not_pseff;
  if (is_nef(model, d)) {
    bool positive = true;
    for (const auto& c : model.negative_curves) positive = positive && intersection(model, d, c) > 0;
    for (const auto& g : model.effective_generators) positive = positive && intersection(model, d, g) > 0;
    return positive ? Positivity::ample : Positivity::nef_not_ample;
  }
  return volume(model, d) > 0 ? Positivity::big_not_nef : Positivity::pseff_not_big;
}

Rational mu(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& f) {
  check_rank(model, d);
  check_rank(model, f);
  if (f.is_zero()) throw InputError("mu: direction class is zero");
  if (!is_pseudoeffective(model, f)) throw InputError("mu: direction class " + to_string(f) + " is not effective");
  if (volume(model, d) <= 0) throw DomainError("mu: class " + to_string(d) + " is not big");
  // maximize t subject to sum lambda_j g_j + t f = d, lambda, t >= 0
  const auto& gens = model.effective_generators;
  const std::size_t n = gens.size() + 1;
  Matrix a(model.rank(), Vector(n));
  for (std::size_t i = 0; i < model.rank(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) a[i][j] = gens[j][i];
    a[i][gens.size()] = f[i];
  }
  Vector c(n, Rational(0));
  c.back() = 1;
  const LpResult r = maximize(a, d.coords(), c);
  if (r.status != LpStatus::optimal) {
    throw InternalError("mu: effective cone is not pointed along " + to_string(f));
  }
  return r.objective;
}

std::vector<ZariskiChamber> walk_chambers(const SurfaceModel& model, const DivisorClass& base,
                                          const DivisorClass& direction, const Rational& t_begin,
                                          const Rational& t_end) {
  check_rank(model, base);
  check_rank(model, direction);
  if (t_end < t_begin) throw InputError("walk_chambers: empty parameter interval");
  const auto& curves = model.negative_curves;
  std::vector<ZariskiChamber> chambers;
  Rational t = t_begin;
  for (;;) {
    const DivisorClass d = base + t * direction;
    auto dd = detail::decompose_along(model, d, direction);
    Rational next = t_end;
    for (std::size_t i : dd.support) {
      if (dd.slope[i] < 0) next = std::min(next, Rational(t - dd.value[i] / dd.slope[i]));
    }
    DivisorClass p0 = d, p1 = direction;
    for (std::size_t i : dd.support) {
      p0 -= dd.value[i] * curves[i];
      p1 -= dd.slope[i] * curves[i];
    }
    for (std::size_t c = 0; c < curves.size(); ++c) {
      if (std::find(dd.support.begin(), dd.support.end(), c) != dd.support.end()) continue;
      const Rational g1 = intersection(model, p1, curves[c]);
      if (g1 < 0) next = std::min(next, Rational(t - intersection(model, p0, curves[c]) / g1));
    }
    if (next <= t && t < t_end) throw InternalError("chamber walk failed to advance at t = " + to_string(t));
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (std::find(dd.support.begin(), dd.support.end(), i) == dd.support.end()) {
        dd.value[i] = 0;
        dd.slope[i] = 0;
      }
    }
    chambers.push_back({t, next, dd.support, std::move(dd.value), std::move(dd.slope)});
    if (next >= t_end) break;
    t = next;
  }
  return chambers;
}

DivisorClass chamber_positive_part(const SurfaceModel& model, const ZariskiChamber& chamber,
                                   const DivisorClass& base, const DivisorClass& direction, const Rational& t) {
  DivisorClass p = base + t * direction;
  for (std::size_t i : chamber.support) p -= chamber.coefficient(i, t) * model.negative_curves[i];
  return p;
}

}  // namespace noct
