// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "noct/germ.hpp"
#include "noct/infinitesimal.hpp"
#include "noct/linear_algebra.hpp"
#include "noct/polygon.hpp"
#include "noct/positivity.hpp"
#include "noct/zariski.hpp"
#include "support.hpp"

using namespace noct;
using testing::q;

namespace {

// Wall-clock limits in seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kNefLimit = 1.0;
constexpr double kOracleLimit = 5.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) out.require(false, "runtime " + std::to_string(secs) + "s over limit");
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %-28s %.3fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.detail.empty() ? "" : "  ",
              out.detail.c_str());
}

PointedSurface at(const char* model, const char* point) {
  auto mf = builtin_model(model);
  return PointedSurface(mf.model, mf.point(point));
}

DivisorClass f_t(const Rational& t) { return {t, 1 - 2 * t}; }

// Independent check that monomials of degree <= e at a point of the affine
// chart of P2 surject onto k-jets there: rank of the truncated Taylor matrix.
bool monomials_separate_jets(int e, int k) {
  const Rational x0(1, 3), y0(-2, 5);
  std::vector<std::pair<int, int>> jets;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; i + j <= k; ++j) jets.push_back({i, j});
  Matrix rows;
  for (int a = 0; a <= e; ++a)
    for (int b = 0; a + b <= e; ++b) {
      // (x0 + u)^a (y0 + v)^b, coefficient of u^i v^j
      Vector row;
      for (const auto& [i, j] : jets) {
        if (i > a || j > b) {
          row.push_back(0);
          continue;
        }
        mpz_class ca, cb;
        mpz_bin_uiui(ca.get_mpz_t(), a, i);
        mpz_bin_uiui(cb.get_mpz_t(), b, j);
        Rational px = 1, py = 1;
        for (int s = 0; s < a - i; ++s) px *= x0;
        for (int s = 0; s < b - j; ++s) py *= y0;
        row.push_back(Rational(ca * cb) * px * py);
      }
      rows.push_back(row);
    }
  return rank(rows) == jets.size();
}

}  // namespace

int main() {
  criterion(1, "golden Seshadri profile", kGoldenLimit, [] {
    Outcome o;
    auto prof = seshadri_profile(at("blp-p2", "on-E"), {0, 1}, {1, -1}, true);
    auto f = prof.formula();
    o.require(f.breakpoints == std::vector<Rational>{0, q("2/3"), 1}, "piece domains");
    o.require(f.pieces.size() == 2 && f.pieces[0] == AffinePiece{2, -1} && f.pieces[1] == AffinePiece{-1, 1},
              "piece formulas");
    o.require(prof.breakpoints() == std::vector<Rational>{q("1/2"), q("2/3")}, "breakpoints");
    o.require(prof.kinks == std::vector<Rational>{q("2/3")}, "slope jump at 2/3");
    return o;
  });

  criterion(2, "nef threshold cross-check", kNefLimit, [] {
    Outcome o;
    const auto ex5 = builtin_model("example5").model;
    auto ps = at("blp-p2", "on-E");
    const std::vector<std::pair<const char*, const char*>> expected{
        {"1/2", "0"}, {"3/5", "1/5"}, {"2/3", "1/3"}, {"3/4", "1/4"}, {"1", "0"}};
    for (const auto& [ts, vs] : expected) {
      const Rational t = q(ts);
      const Rational nef = seshadri_via_nef_cone(ex5, {1 - t, 1, t}, 1);
      // F_1 = H - E is not big; its value comes from the extended function
      const Rational mov = volume(ps.base(), f_t(t)) > 0 ? moving_seshadri(ps, f_t(t)) : evaluate_extended(ps, f_t(t)).value;
      o.require(nef == q(vs) && mov == q(vs), std::string("t=") + ts);
    }
    return o;
  });

  criterion(3, "oracle equivalence on P2", kOracleLimit, [] {
    Outcome o;
    auto ps = at("p2", "generic");
    for (int d = 1; d <= 3; ++d) {
      const Polygon simplex = InvertedSimplex{d, 2}.polygon();
      o.require(infinitesimal_body(ps, {d}) == simplex, "body d=" + std::to_string(d));
      for (int m = 1; m <= 3; ++m)
        o.require(monomial_oracle_body(2, d, m).polygon() == simplex,
                  "oracle d=" + std::to_string(d) + " m=" + std::to_string(m));
    }
    return o;
  });

  criterion(4, "body inside inverted simplex", 0, [] {
    Outcome o;
    testing::RandomClasses rnd(2024);
    const std::vector<std::pair<const char*, const char*>> points{
        {"p2", "generic"}, {"blp-p2", "on-E"}, {"blp-p2", "generic"}, {"hirzebruch:1", "generic"},
        {"hirzebruch:2", "generic"}, {"hirzebruch:0", "generic"}};
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
      const auto& [model, point] = points[static_cast<std::size_t>(i) % points.size()];
      auto ps = at(model, point);
      const DivisorClass d = rnd.big(ps.base());
      const Rational top = mu(ps.blowup(), pullback(d), ps.exceptional_class());
      if (!InvertedSimplex{top, 2}.polygon().contains(infinitesimal_body(ps, d))) ++violations;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    return o;
  });

  criterion(5, "base locus decisions", 0, [] {
    Outcome o;
    auto ps = at("blp-p2", "on-E");
    auto a = base_locus_membership(ps, {2, -1});
    o.require(a.verdict == Regime::outside_Bplus && a.xi == 1, "2H-E");
    auto h = base_locus_membership(ps, {1, 0});
    o.require(h.verdict == Regime::in_Bplus_not_Bminus && h.xi == 0 && h.asymptotic_mult == 0, "H");
    auto f = base_locus_membership(ps, f_t(q("1/4")));
    o.require(f.verdict == Regime::in_Bminus && f.asymptotic_mult == q("1/2"), "F_1/4");
    return o;
  });

  criterion(6, "slicing identity", 0, [] {
    Outcome o;
    testing::RandomClasses rnd(606);
    const auto m = builtin_model("example5").model;
    std::vector<FlagSpec> flags;
    for (std::size_t i = 0; i < 3; ++i) flags.push_back(FlagSpec::on_negative_curve(m, i));
    flags.push_back(FlagSpec::on_negative_curve(m, 1, {1, 0, 0}));
    flags.push_back(FlagSpec::on_negative_curve(m, 1, {0, 0, 1}));
    flags.push_back(FlagSpec::on_class(m, {1, 2, 1}));
    for (int i = 0; i < 50; ++i) {
      const DivisorClass d = rnd.big(m);
      const FlagSpec& flag = flags[static_cast<std::size_t>(i) % flags.size()];
      const Rational top = mu(m, d, flag.curve);
      Rational t(rnd.integer(0, 99), 100);
      t.canonicalize();
      t *= top;
      auto full = okounkov_polygon(m, d, flag);
      o.require(slice_at(m, d, flag, t) == full.clipped_left(t), "triple " + std::to_string(i));
    }
    return o;
  });

  criterion(7, "area law", 0, [] {
    Outcome o;
    testing::RandomClasses rnd(707);
    const char* models[] = {"example5", "blp-p2", "hirzebruch:1", "hirzebruch:3", "p2"};
    for (int i = 0; i < 200; ++i) {
      const auto m = builtin_model(models[i % 5]).model;
      const DivisorClass d = rnd.big(m);
      FlagSpec flag = m.negative_curves.empty()
                          ? FlagSpec::on_class(m, m.nef_generators.front())
                          : FlagSpec::on_negative_curve(m, static_cast<std::size_t>(i) % m.negative_curves.size());
      o.require(2 * okounkov_polygon(m, d, flag).area() == volume(m, d), "class " + to_string(d));
    }
    return o;
  });

  criterion(8, "xi flag independence", 0, [] {
    Outcome o;
    testing::RandomClasses rnd(808);
    auto ps = at("blp-p2", "on-E");
    int differing = 0;
    for (int i = 0; i < 20; ++i) {
      const DivisorClass d = rnd.big(ps.base());
      auto generic = xi_constant(ps, d), on_e1 = xi_constant(ps, d, "on-E1");
      o.require(generic.xi == on_e1.xi, "class " + to_string(d));
      if (!(generic.body == on_e1.body)) ++differing;
    }
    o.require(differing > 0, "bodies never differed");
    o.detail = o.ok ? std::to_string(differing) + "/20 bodies differ" : o.detail;
    return o;
  });

  criterion(9, "jet separation on P2", 0, [] {
    Outcome o;
    auto ps = at("p2", "generic");
    for (int d = 1; d <= 8; ++d)
      for (int k = 0; k <= 8; ++k) {
        const bool cert = jets_separated(ps, {d}, k).certified;
        o.require(cert == (d > 2 + k), "d=" + std::to_string(d) + " k=" + std::to_string(k));
        if (cert) o.require(monomials_separate_jets(d - 3, k), "rank check d=" + std::to_string(d));
      }
    return o;
  });

  criterion(10, "valuation engine", 0, [] {
    Outcome o;
    testing::RandomClasses rnd(1010);
    for (int i = 0; i < 1000; ++i) {
      const auto n = static_cast<std::size_t>(rnd.integer(2, 4));
      auto v = valuation_vector(rnd.germ(n, 6));
      int tail = 0;
      for (std::size_t j = 1; j < n; ++j) tail += v.nu[j];
      o.require(tail <= v.nu[0], "inequality");
    }
    for (int i = 0; i < 200; ++i) {
      const auto n = static_cast<std::size_t>(rnd.integer(2, 4));
      auto s = rnd.germ(n, 6), t = rnd.germ(n, 6);
      auto vs = valuation_vector(s), vt = valuation_vector(t), vst = valuation_vector(s * t);
      for (std::size_t j = 0; j < n; ++j) o.require(vst.nu[j] == vs.nu[j] + vt.nu[j], "multiplicativity");
    }
    return o;
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
