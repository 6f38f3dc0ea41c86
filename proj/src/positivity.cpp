#include "noct/positivity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "noct/errors.hpp"
#include "noct/linear_algebra.hpp"
#include "noct/lp.hpp"
#include "noct/zariski.hpp"

namespace noct {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::in_Bminus: return "in_Bminus";
    case Regime::in_Bplus_not_Bminus: return "in_Bplus_not_Bminus";
    case Regime::outside_Bplus: return "outside_Bplus";
  }
  return "unknown";
}

std::string csv_label(Regime r) { return r == Regime::in_Bplus_not_Bminus ? "boundary" : to_string(r); }

Rational asymptotic_multiplicity(const PointedSurface& ps, const DivisorClass& d) {
  if (!is_pseudoeffective(ps.base(), d)) throw DomainError("class " + to_string(d) + " is not pseudoeffective");
  return zariski_decompose(ps.blowup(), pullback(d)).coefficient(ps.exceptional());
}

Rational moving_seshadri(const PointedSurface& ps, const DivisorClass& d) { return xi_constant(ps, d).xi; }

Rational seshadri_via_nef_cone(const SurfaceModel& blowup, const DivisorClass& d_prime, std::size_t e_index) {
  if (e_index >= blowup.negative_curves.size()) throw InputError("exceptional curve index out of range");
  if (!is_nef(blowup, d_prime)) throw DomainError("class " + to_string(d_prime) + " is not nef");
  const DivisorClass& e = blowup.negative_curves[e_index];
  std::optional<Rational> best;
  auto constrain = [&](const DivisorClass& g) {
    const Rational eg = intersection(blowup, e, g);
    if (eg <= 0) return;
    const Rational bound = intersection(blowup, d_prime, g) / eg;
    if (!best || bound < *best) best = bound;
  };
  for (const auto& g : blowup.effective_generators) constrain(g);
  for (const auto& c : blowup.negative_curves) constrain(c);
  if (!best) throw DomainError("d' - eps E stays nef for all eps; cone data is incomplete");
  return *best;
}

ProfileSample evaluate_extended(const PointedSurface& ps, const DivisorClass& d) {
  if (d.is_zero()) return {0, 0, Regime::in_Bplus_not_Bminus};
  const Rational mult = asymptotic_multiplicity(ps, d);
  if (mult > 0) return {0, -mult, Regime::in_Bminus};
  if (volume(ps.base(), d) == 0) return {0, 0, Regime::in_Bplus_not_Bminus};
  const Rational xi = xi_constant(ps, d).xi;
  return {0, xi, xi > 0 ? Regime::outside_Bplus : Regime::in_Bplus_not_Bminus};
}

Rational extended_seshadri(const PointedSurface& ps, const DivisorClass& d) {
  if (d.is_zero()) throw DomainError("extended Seshadri function is undefined at 0");
  return evaluate_extended(ps, d).value;
}

BaseLocusVerdict base_locus_membership(const PointedSurface& ps, const DivisorClass& d) {
  if (volume(ps.base(), d) <= 0) throw DomainError("class " + to_string(d) + " is not big");
  BaseLocusVerdict v;
  v.asymptotic_mult = asymptotic_multiplicity(ps, d);
  v.xi = xi_constant(ps, d).xi;
  if (v.asymptotic_mult > 0) {
    v.verdict = Regime::in_Bminus;
  } else if (v.xi > 0) {
    v.verdict = Regime::outside_Bplus;
  } else {
    v.verdict = Regime::in_Bplus_not_Bminus;
  }
  return v;
}

JetCertificate jets_separated(const PointedSurface& ps, const DivisorClass& d, int k) {
  if (!ps.base().canonical_class) throw InputError("model " + ps.base().name + " has no canonical class");
  if (k < 0) throw InputError("jet order must be nonnegative");
  if (!d.is_integral()) throw InputError("jet separation needs an integral class");
  JetCertificate c;
  c.threshold = ps.base().dimension_of_variety + k;
  c.xi = xi_constant(ps, d).xi;
  c.certified = c.xi > c.threshold;
  return c;
}

std::vector<Rational> SeshadriProfile::breakpoints() const {
  std::set<Rational> all(regime_breakpoints.begin(), regime_breakpoints.end());
  all.insert(kinks.begin(), kinks.end());
  return {all.begin(), all.end()};
}

namespace {

// ct * t + cs * s + c on the (t, s) parameter plane.
struct Form {
  Rational ct, cs, c;

  bool normalize() {
    const Rational lead = ct != 0 ? ct : cs;
    if (lead == 0) return false;
    ct /= lead;
    cs /= lead;
    c /= lead;
    return true;
  }
  friend bool operator<(const Form& a, const Form& b) {
    if (a.ct != b.ct) return a.ct < b.ct;
    if (a.cs != b.cs) return a.cs < b.cs;
    return a.c < b.c;
  }
  Form& operator-=(const Form& o) {
    ct -= o.ct;
    cs -= o.cs;
    c -= o.c;
    return *this;
  }
  Form scaled(const Rational& k) const { return {ct * k, cs * k, c * k}; }
};

// Parameter interval [lo, hi] of t in [0, 1] with d0 + t (d1 - d0) pseudoeffective.
std::pair<Rational, Rational> pseudoeffective_interval(const SurfaceModel& model, const DivisorClass& d0,
                                                       const DivisorClass& d1) {
  const auto& gens = model.effective_generators;
  const DivisorClass v = d1 - d0;
  const std::size_t n = gens.size() + 2;  // lambda..., t, slack
  Matrix a(model.rank() + 1, Vector(n, Rational(0)));
  Vector b(model.rank() + 1);
  for (std::size_t i = 0; i < model.rank(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) a[i][j] = gens[j][i];
    a[i][gens.size()] = -v[i];
    b[i] = d0[i];
  }
  a[model.rank()][gens.size()] = 1;
  a[model.rank()][gens.size() + 1] = 1;
  b[model.rank()] = 1;
  Vector c(n, Rational(0));
  c[gens.size()] = 1;
  const LpResult hi = maximize(a, b, c);
  if (hi.status != LpStatus::optimal) throw DomainError("segment lies outside the pseudoeffective cone");
  c[gens.size()] = -1;
  const LpResult lo = maximize(a, b, c);
  return {-lo.objective, hi.objective};
}

// Every line of the (t, s) plane along which the shape of the infinitesimal
// body of d(t) can change combinatorially: Zariski chamber walls of
// pi^* d(t) - s E for every admissible support, the diagonal and horizontal
// ray conditions inside each chamber, the cone boundary and s = 0. Between
// consecutive t-coordinates of pairwise crossings the profile is affine.
std::set<Rational> candidate_breakpoints(const PointedSurface& ps, const DivisorClass& base,
                                         const DivisorClass& direction, const Rational& t_begin,
                                         const Rational& t_end) {
  const SurfaceModel& x = ps.blowup();
  const auto& curves = x.negative_curves;
  const std::size_t k = curves.size();
  if (k > 12) throw ResourceError("exact profiles support at most 12 negative curves on the blow-up; use samples");
  const DivisorClass& e = ps.exceptional_class();
  const std::vector<int>& incidence = ps.point().flag_incidence;
  const DivisorClass b = pullback(base), v = pullback(direction);

  auto pairing = [&](const DivisorClass& c) {
    return Form{intersection(x, v, c), -intersection(x, e, c), intersection(x, b, c)};
  };
  Matrix gram(k, Vector(k));
  std::vector<Form> g_dot(k);
  for (std::size_t i = 0; i < k; ++i) {
    g_dot[i] = pairing(curves[i]);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = intersection(x, curves[i], curves[j]);
  }

  std::set<Form> lines;
  auto add = [&lines](Form f) {
    if (f.normalize()) lines.insert(f);
  };
  add({0, 1, 0});
  for (const auto& nef : x.nef_generators) add(pairing(nef));
  for (const auto& g : x.effective_generators) add(pairing(g));

  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    Matrix sub(s.size(), Vector(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t c = 0; c < s.size(); ++c) sub[a][c] = gram[s[a]][s[c]];
    }
    if (!is_negative_definite(sub)) continue;
    Vector rt(s.size()), rs(s.size()), rc(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      rt[a] = g_dot[s[a]].ct;
      rs[a] = g_dot[s[a]].cs;
      rc[a] = g_dot[s[a]].c;
    }
    const auto xt = solve(sub, rt), xs = solve(sub, rs), xc = solve(sub, rc);
    std::vector<Form> coeff(k, Form{0, 0, 0});
    for (std::size_t a = 0; a < s.size(); ++a) {
      coeff[s[a]] = {(*xt)[a], (*xs)[a], (*xc)[a]};
      add(coeff[s[a]]);
    }
    std::vector<Form> positive_dot = g_dot;
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t i : s) positive_dot[m] -= coeff[i].scaled(gram[i][m]);
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (!(mask & (std::size_t{1} << m))) add(positive_dot[m]);
    }
    Form alpha{0, 0, 0};
    for (std::size_t i : s) {
      if (i == ps.exceptional() || i >= incidence.size()) continue;
      Form term = coeff[i].scaled(incidence[i]);
      alpha.ct += term.ct;
      alpha.cs += term.cs;
      alpha.c += term.c;
    }
    add(alpha);
    Form alpha_minus_s = alpha;
    alpha_minus_s.cs -= 1;
    add(alpha_minus_s);
    Form beta_minus_s = alpha_minus_s;
    beta_minus_s.ct += positive_dot[ps.exceptional()].ct;
    beta_minus_s.cs += positive_dot[ps.exceptional()].cs;
    beta_minus_s.c += positive_dot[ps.exceptional()].c;
    add(beta_minus_s);
  }

  std::set<Rational> out{t_begin, t_end};
  auto keep = [&](const Rational& t) {
    if (t > t_begin && t < t_end) out.insert(t);
  };
  const std::vector<Form> all(lines.begin(), lines.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].cs == 0) keep(-all[i].c / all[i].ct);
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Rational det = all[i].ct * all[j].cs - all[j].ct * all[i].cs;
      if (det == 0) continue;
      const Rational s = (all[j].ct * all[i].c - all[i].ct * all[j].c) / det;
      if (s < 0) continue;
      keep((all[i].cs * all[j].c - all[i].c * all[j].cs) / det);
    }
  }
  return out;
}

}  // namespace

SeshadriProfile seshadri_profile(const PointedSurface& ps, const DivisorClass& d0, const DivisorClass& d1, bool exact,
                                 const std::vector<Rational>& samples) {
  const SurfaceModel& x = ps.base();
  if (d0.size() != x.rank() || d1.size() != x.rank()) throw InputError("segment classes do not match model rank");
  SeshadriProfile out;
  out.d0 = d0;
  out.d1 = d1;
  out.exact = exact;
  std::tie(out.t_begin, out.t_end) = pseudoeffective_interval(x, d0, d1);
  const DivisorClass direction = d1 - d0;
  auto at = [&](const Rational& t) {
    ProfileSample s = evaluate_extended(ps, d0 + t * direction);
    s.t = t;
    return s;
  };

  if (!exact) {
    for (const auto& t : samples) {
      if (t < out.t_begin || t > out.t_end) {
        throw DomainError("sample t = " + to_string(t) + " is outside the pseudoeffective part of the segment");
      }
      out.samples.push_back(at(t));
    }
    return out;
  }

  ps.require_cones();
  const std::set<Rational> cand = candidate_breakpoints(ps, d0, direction, out.t_begin, out.t_end);
  const std::vector<Rational> ts(cand.begin(), cand.end());
  std::vector<ProfileSample> point(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) point[i] = at(ts[i]);

  PiecewiseLinear raw;
  raw.breakpoints = ts;
  std::vector<Regime> piece_regime;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const AffinePiece piece = AffinePiece::through(ts[i], point[i].value, ts[i + 1], point[i + 1].value);
    const Rational mid_t = (ts[i] + ts[i + 1]) / 2;
    const ProfileSample mid = at(mid_t);
    if (mid.value != piece(mid_t)) {
      throw InternalError("Seshadri profile is not affine between candidate breakpoints " + to_string(ts[i]) +
                          " and " + to_string(ts[i + 1]));
    }
    raw.pieces.push_back(piece);
    piece_regime.push_back(mid.regime);
  }
  if (raw.pieces.empty()) {
    // Degenerate segment: a single pseudoeffective point.
    raw.pieces.push_back({0, point.front().value});
    raw.breakpoints = {ts.front(), ts.front()};
    piece_regime.push_back(point.front().regime);
  }

  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    if (piece_regime[i - 1] != piece_regime[i] || point[i].regime != piece_regime[i] ||
        point[i].regime != piece_regime[i - 1]) {
      out.regime_breakpoints.push_back(ts[i]);
    }
  }
  out.pieces = raw.merged(out.regime_breakpoints);
  out.kinks = out.pieces.kinks();
  std::map<Rational, ProfileSample> by_t;
  for (const auto& p : point) by_t.emplace(p.t, p);
  for (const auto& t : out.pieces.breakpoints) {
    if (out.samples.empty() || out.samples.back().t != t) out.samples.push_back(by_t.at(t));
  }
  return out;
}

}  // namespace noct
