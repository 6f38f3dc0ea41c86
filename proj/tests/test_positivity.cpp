#include "doctest.h"
#include "noct/errors.hpp"
#include "noct/positivity.hpp"
#include "support.hpp"

using namespace noct;
using testing::q;

namespace {

PointedSurface at(const char* model, const char* point) {
  auto mf = builtin_model(model);
  return PointedSurface(mf.model, mf.point(point));
}

DivisorClass f_t(const Rational& t) { return {t, 1 - 2 * t}; }

}  // namespace

TEST_CASE("asymptotic multiplicity") {
  auto on_e = at("blp-p2", "on-E");
  CHECK(asymptotic_multiplicity(on_e, f_t(q("1/4"))) == q("1/2"));
  CHECK(asymptotic_multiplicity(on_e, {1, 0}) == 0);
  CHECK(asymptotic_multiplicity(on_e, {0, 1}) == 1);
  CHECK(asymptotic_multiplicity(at("blp-p2", "generic"), f_t(q("1/4"))) == 0);
  CHECK_THROWS_AS(asymptotic_multiplicity(on_e, {-1, 0}), DomainError);
}

TEST_CASE("moving Seshadri constants") {
  auto on_e = at("blp-p2", "on-E");
  CHECK(moving_seshadri(on_e, f_t(q("3/5"))) == q("1/5"));
  CHECK(moving_seshadri(on_e, f_t(q("3/4"))) == q("1/4"));
  for (int d = 1; d <= 5; ++d) CHECK(moving_seshadri(at("p2", "generic"), {d}) == d);
}

TEST_CASE("Seshadri constant from the nef cone of the blow-up") {
  const auto ex5 = builtin_model("example5").model;
  auto d_t = [](const Rational& t) { return DivisorClass{1 - t, 1, t}; };
  CHECK(seshadri_via_nef_cone(ex5, d_t(q("3/5")), 1) == q("1/5"));
  CHECK(seshadri_via_nef_cone(ex5, d_t(q("2/3")), 1) == q("1/3"));
  CHECK(seshadri_via_nef_cone(ex5, {1, 2, 1}, 1) == 0);
  CHECK_THROWS_AS(seshadri_via_nef_cone(ex5, {1, 0, 0}, 1), DomainError);
}

TEST_CASE("extended Seshadri function") {
  auto on_e = at("blp-p2", "on-E");
  CHECK(extended_seshadri(on_e, f_t(q("1/4"))) == q("-1/2"));
  CHECK(extended_seshadri(on_e, f_t(q("1/2"))) == 0);
  CHECK(extended_seshadri(on_e, f_t(1)) == 0);
  CHECK_THROWS_AS(extended_seshadri(on_e, {0, 0}), DomainError);
  CHECK_THROWS_AS(extended_seshadri(on_e, {0, -1}), DomainError);
  CHECK(extended_seshadri(on_e, Rational(4) * f_t(q("1/4"))) == -2);
}

TEST_CASE("golden profile along E -> H - E") {
  auto on_e = at("blp-p2", "on-E");
  auto prof = seshadri_profile(on_e, {0, 1}, {1, -1}, true);
  auto f = prof.formula();
  REQUIRE(f.breakpoints == std::vector<Rational>{0, q("2/3"), 1});
  CHECK(f.pieces[0] == AffinePiece{2, -1});
  CHECK(f.pieces[1] == AffinePiece{-1, 1});
  CHECK(prof.breakpoints() == std::vector<Rational>{q("1/2"), q("2/3")});
  CHECK(prof.regime_breakpoints == std::vector<Rational>{q("1/2")});
  CHECK(prof.kinks == std::vector<Rational>{q("2/3")});
  CHECK(prof.pieces.is_continuous());
  CHECK(prof.pieces(q("1/2")) == 0);
  // concave on this segment
  for (std::size_t i = 1; i < f.pieces.size(); ++i) CHECK(f.pieces[i].slope <= f.pieces[i - 1].slope);
  // pointwise agreement with the direct evaluation
  for (int k = 0; k <= 12; ++k) {
    Rational t(k, 12);
    t.canonicalize();
    auto s = evaluate_extended(on_e, f_t(t));
    CHECK(prof.pieces(t) == s.value);
    if (s.value < 0) CHECK(s.regime == Regime::in_Bminus);
    if (s.value > 0) CHECK(s.regime == Regime::outside_Bplus);
    if (s.value == 0) CHECK(s.regime == Regime::in_Bplus_not_Bminus);
  }
}

TEST_CASE("sampled profile") {
  auto on_e = at("blp-p2", "on-E");
  auto prof = seshadri_profile(on_e, {0, 1}, {1, -1}, false, {q("1/4"), q("3/5"), q("3/4")});
  REQUIRE(prof.samples.size() == 3);
  CHECK(prof.samples[0].value == q("-1/2"));
  CHECK(prof.samples[1].value == q("1/5"));
  CHECK(prof.samples[2].value == q("1/4"));
  CHECK_THROWS_AS(seshadri_profile(on_e, {0, -1}, {-1, 0}, true), DomainError);
}

TEST_CASE("exact profiles are continuous on other segments") {
  testing::RandomClasses rnd(41);
  for (const auto& [model, point] : std::vector<std::pair<const char*, const char*>>{
           {"blp-p2", "on-E"}, {"blp-p2", "generic"}, {"hirzebruch:1", "generic"}}) {
    auto ps = at(model, point);
    for (int i = 0; i < 5; ++i) {
      auto prof = seshadri_profile(ps, rnd.big(ps.base()), rnd.big(ps.base()), true);
      CHECK(prof.pieces.is_continuous());
      for (const auto& s : prof.samples) {
        DivisorClass d = (1 - s.t) * prof.d0 + s.t * prof.d1;
        CHECK(evaluate_extended(ps, d).value == s.value);
      }
    }
  }
}

TEST_CASE("jet separation certificates") {
  auto p2 = at("p2", "generic");
  auto c = jets_separated(p2, {6}, 3);
  CHECK(c.certified);
  CHECK(c.xi == 6);
  CHECK(c.threshold == 5);
  CHECK_FALSE(jets_separated(p2, {3}, 1).certified);
  CHECK_FALSE(jets_separated(at("blp-p2", "on-E"), {2, -1}, 0).certified);
  CHECK_THROWS_AS(jets_separated(p2, {q("1/2")}, 0), InputError);
  CHECK_THROWS_AS(jets_separated(p2, {2}, -1), InputError);
  auto mf = builtin_model("p2");
  mf.model.canonical_class.reset();
  CHECK_THROWS_AS(jets_separated(PointedSurface(mf.model, mf.points.front()), {6}, 0), InputError);
}

TEST_CASE("base locus membership") {
  auto on_e = at("blp-p2", "on-E");
  auto h = base_locus_membership(on_e, {1, 0});
  CHECK(h.verdict == Regime::in_Bplus_not_Bminus);
  CHECK(h.xi == 0);
  CHECK(h.asymptotic_mult == 0);
  auto f = base_locus_membership(on_e, f_t(q("1/4")));
  CHECK(f.verdict == Regime::in_Bminus);
  CHECK(f.asymptotic_mult == q("1/2"));
  auto a = base_locus_membership(on_e, {2, -1});
  CHECK(a.verdict == Regime::outside_Bplus);
  CHECK(a.xi == 1);
  CHECK(csv_label(Regime::in_Bplus_not_Bminus) == "boundary");
}

TEST_CASE("moving Seshadri equals the nef threshold for nef classes") {
  testing::RandomClasses rnd(7);
  const std::vector<std::pair<const char*, const char*>> points{
      {"p2", "generic"}, {"blp-p2", "on-E"}, {"blp-p2", "generic"}, {"hirzebruch:2", "generic"},
      {"hirzebruch:0", "generic"}};
  for (const auto& [model, point] : points) {
    auto ps = at(model, point);
    for (int i = 0; i < 15; ++i) {
      DivisorClass d = DivisorClass::zero(ps.base().rank());
      for (const auto& g : ps.base().nef_generators) d += rnd.positive() * g;
      CHECK(moving_seshadri(ps, d) == seshadri_via_nef_cone(ps.blowup(), pullback(d), ps.exceptional()));
      CHECK(extended_seshadri(ps, Rational(2) * d) == 2 * extended_seshadri(ps, d));
    }
  }
}
