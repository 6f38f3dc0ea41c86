#include "doctest.h"
#include "noct/errors.hpp"
#include "noct/germ.hpp"
#include "noct/infinitesimal.hpp"
#include "noct/zariski.hpp"
#include "support.hpp"

using namespace noct;
using testing::hull;
using testing::q;

namespace {

PointedSurface at(const char* model, const char* point) {
  auto mf = builtin_model(model);
  return PointedSurface(mf.model, mf.point(point));
}

// F_t = (1-t) E + t (H - E) on the blow-up of P2 at a point.
DivisorClass f_t(const Rational& t) { return {t, 1 - 2 * t}; }

}  // namespace

TEST_CASE("inverted simplices") {
  InvertedSimplex s{3, 2};
  CHECK(s.polygon() == hull({{"0", "0"}, {"3", "0"}, {"3", "3"}}));
  InvertedSimplex s3{2, 3};
  CHECK(s3.vertices() == std::vector<Vector>{{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {2, 0, 2}});
}

TEST_CASE("infinitesimal bodies on P2 match the monomial oracle") {
  auto ps = at("p2", "generic");
  for (int d = 1; d <= 4; ++d) {
    auto body = infinitesimal_body(ps, {d});
    CHECK(body == InvertedSimplex{d, 2}.polygon());
    CHECK(body == monomial_oracle_body(2, d, 1).polygon());
  }
}

TEST_CASE("bodies at a point of the exceptional curve") {
  auto ps = at("blp-p2", "on-E");
  CHECK(infinitesimal_body(ps, {1, 0}) == hull({{"0", "0"}, {"1", "1/2"}, {"2", "0"}}));
  auto body = infinitesimal_body(ps, f_t(q("1/4")));
  CHECK(body.min_x() == q("1/2"));
  // same polygon through the model/profile overload
  const auto mf = builtin_model("blp-p2");
  CHECK(infinitesimal_body(mf.model, mf.point("on-E"), {0, 0, 0}, f_t(q("1/4"))) == body);
}

TEST_CASE("inverted simplex containment") {
  CHECK(contains_inverted_simplex(hull({{"0", "0"}, {"4", "0"}, {"4", "4"}}), 4));
  CHECK_FALSE(contains_inverted_simplex(hull({{"0", "0"}, {"1", "1/2"}, {"2", "0"}}), q("1/10")));
  CHECK(contains_inverted_simplex(hull({{"0", "0"}, {"1", "1/2"}, {"2", "0"}}), 0));
  CHECK_FALSE(contains_inverted_simplex(hull({{"1", "0"}, {"2", "0"}, {"2", "1"}}), 0));
}

TEST_CASE("largest inverted simplex constant") {
  CHECK(xi_constant(at("p2", "generic"), {1}).xi == 1);
  auto ps = at("blp-p2", "on-E");
  CHECK(xi_constant(ps, {1, 0}).xi == 0);
  auto r = xi_constant(ps, {2, -1});
  CHECK(r.xi == 1);
  CHECK(r.body.contains({1, 0}));
  CHECK(r.body.contains({1, 1}));
  // nef threshold on the double blow-up: max eps with (1, 3 - eps, 2) nef
  const auto ex5 = builtin_model("example5").model;
  CHECK(is_nef(ex5, {1, 2, 2}));
  CHECK_FALSE(is_nef(ex5, {1, q("19/10"), 2}));
  CHECK_THROWS_AS(xi_constant(ps, {0, 1}), DomainError);
}

TEST_CASE("origin criterion") {
  auto ps = at("blp-p2", "on-E");
  CHECK(check_origin(ps, {1, 0}));
  CHECK_FALSE(check_origin(ps, f_t(q("1/4"))));
  for (int d = 1; d <= 3; ++d) CHECK(check_origin(at("p2", "generic"), {d}));
}

TEST_CASE("missing blow-up cone data is refused") {
  auto mf = builtin_model("blp-p2");
  PointProfile bare = mf.point("on-E");
  bare.cones.reset();
  PointedSurface ps(mf.model, bare);
  CHECK_THROWS_AS(infinitesimal_body(ps, {1, 0}), InputError);
}

TEST_CASE("properties on random classes") {
  testing::RandomClasses rnd(31);
  const std::vector<std::pair<const char*, const char*>> points{
      {"p2", "generic"}, {"blp-p2", "on-E"}, {"blp-p2", "generic"}, {"hirzebruch:1", "generic"},
      {"hirzebruch:0", "generic"}};
  for (const auto& [model, point] : points) {
    auto ps = at(model, point);
    for (int i = 0; i < 15; ++i) {
      const DivisorClass d = rnd.big(ps.base());
      const DivisorClass pd = pullback(d);
      auto r = xi_constant(ps, d);
      // body inside the inverted simplex of size mu(pi^*d; E)
      const Rational top = mu(ps.blowup(), pd, ps.exceptional_class());
      CHECK(InvertedSimplex{top, 2}.polygon().contains(r.body));
      // origin in the body iff E is not in the negative part
      auto z = zariski_decompose(ps.blowup(), pd);
      CHECK(check_origin(ps, d) == (z.coefficient(ps.exceptional()) == 0));
      CHECK(r.body.min_x() == z.coefficient(ps.exceptional()));
      // homogeneity
      CHECK(xi_constant(ps, Rational(3) * d).xi == 3 * r.xi);
      if (classify(ps.base(), d) == Positivity::ample) CHECK(r.xi > 0);
      // flag independence
      for (const auto& [label, inc] : ps.point().alternate_incidences) {
        (void)inc;
        CHECK(xi_constant(ps, d, label).xi == r.xi);
      }
    }
  }
}
