#include "doctest.h"
#include "noct/errors.hpp"
#include "noct/lattice.hpp"
#include "noct/model_io.hpp"
#include "support.hpp"

using namespace noct;
using testing::q;

TEST_CASE("intersection on example5") {
  const auto m = builtin_model("example5").model;
  CHECK(intersection(m, {1, 0, 0}, {1, 0, 0}) == -2);
  CHECK(intersection(m, {1, 2, 1}, {0, 0, 1}) == 1);
  CHECK(intersection(m, {q("3/7"), 5, -1}, DivisorClass::zero(3)) == 0);
  CHECK_THROWS_AS(intersection(m, {1, 0}, {1, 0, 0}), InputError);
}

TEST_CASE("intersection is symmetric and bilinear") {
  testing::RandomClasses rnd(11);
  for (const char* name : {"example5", "blp-p2", "hirzebruch:2"}) {
    const auto m = builtin_model(name).model;
    for (int i = 0; i < 30; ++i) {
      auto a = rnd.big(m), b = rnd.big(m), c = rnd.big(m);
      Rational s = rnd.small() - 3;
      CHECK(intersection(m, a, b) == intersection(m, b, a));
      CHECK(intersection(m, a + s * b, c) == intersection(m, a, c) + s * intersection(m, b, c));
    }
  }
}

TEST_CASE("validation") {
  SUBCASE("built-ins pass") {
    for (const auto& name : builtin_names()) {
      auto report = validate_model(builtin_model(name == "hirzebruch:n" ? "hirzebruch:3" : name).model);
      CHECK_MESSAGE(report.ok(), name << ": " << report.summary());
    }
  }
  SUBCASE("asymmetric matrix names the entry") {
    auto m = builtin_model("example5").model;
    m.intersection_matrix[0][1] = 2;
    auto report = validate_model(m);
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& e : report.entries)
      if (!e.passed && e.witness.find("(0,1)") != std::string::npos) found = true;
    CHECK(found);
  }
  SUBCASE("negative curve with square zero") {
    auto m = builtin_model("blp-p2").model;
    m.negative_curves = {{1, -1}};
    m.effective_generators.push_back({1, -1});
    CHECK_FALSE(validate_model(m).ok());
  }
  SUBCASE("wrong signature") {
    auto m = builtin_model("p2").model;
    m.intersection_matrix = {{-1}};
    CHECK_FALSE(validate_model(m).ok());
  }
}

namespace {

PointProfile plain_point(std::vector<int> mult, std::size_t new_curves) {
  PointProfile p;
  p.label = "x";
  p.multiplicities = std::move(mult);
  p.flag_incidence.assign(new_curves, 0);
  return p;
}

}  // namespace

TEST_CASE("blow-up of P2 at a point") {
  const auto p2 = builtin_model("p2").model;
  const auto x = blow_up(p2, plain_point({}, 1));
  REQUIRE(x.rank() == 2);
  CHECK(x.intersection_matrix == Matrix{{1, 0}, {0, -1}});
  CHECK(x.negative_curves.back() == DivisorClass{0, 1});
  CHECK(x.canonical_class.value() == DivisorClass{-3, 1});
  CHECK(validate_model(x).ok());
}

TEST_CASE("blow-up at a point of E gives a (-2)-curve") {
  const auto x = builtin_model("blp-p2").model;
  const auto y = blow_up(x, plain_point({1}, 2));
  REQUIRE(y.rank() == 3);
  CHECK(y.negative_curves[0] == DivisorClass{0, 1, -1});
  CHECK(intersection(y, y.negative_curves[0], y.negative_curves[0]) == -2);
  CHECK(y.negative_curves[exceptional_index(x)] == DivisorClass{0, 0, 1});
}

TEST_CASE("double blow-up of P2 matches the example5 lattice") {
  const auto p2 = builtin_model("p2").model;
  const auto x = blow_up(p2, plain_point({}, 1));
  const auto y = blow_up(x, plain_point({1}, 2));
  // E1 = E - E2, E2, E3 = H - E - E2
  const std::vector<DivisorClass> basis{{0, 1, -1}, {0, 0, 1}, {1, -1, -1}};
  const auto ex5 = builtin_model("example5").model;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(intersection(y, basis[i], basis[j]) == ex5.intersection_matrix[i][j]);
  // K_Y = -3H + E + 2 E2 in the old basis: -2E1 - 4E2 - 3E3
  const DivisorClass k = y.canonical_class.value();
  CHECK(k == Rational(-2) * basis[0] + Rational(-4) * basis[1] + Rational(-3) * basis[2]);
  CHECK(ex5.canonical_class.value() == DivisorClass{-2, -4, -3});
}

TEST_CASE("pullback preserves self-intersection") {
  testing::RandomClasses rnd(5);
  for (const char* name : {"p2", "blp-p2", "hirzebruch:1", "example5"}) {
    const auto m = builtin_model(name).model;
    const auto y = blow_up(m, plain_point(std::vector<int>(m.negative_curves.size(), 0), m.negative_curves.size() + 1));
    CHECK(validate_model(y).ok());
    for (int i = 0; i < 20; ++i) {
      DivisorClass d = rnd.big(m) - rnd.big(m);
      CHECK(intersection(y, pullback(d), pullback(d)) == intersection(m, d, d));
      CHECK(intersection(y, pullback(d), y.negative_curves[exceptional_index(m)]) == 0);
    }
  }
}

TEST_CASE("blow-up with a missing multiplicity") {
  const auto x = builtin_model("blp-p2").model;
  CHECK_THROWS_AS(blow_up(x, plain_point({}, 2)), InputError);
}
