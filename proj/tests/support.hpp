#pragma once

#include <random>
#include <string>
#include <vector>

#include "noct/convex.hpp"
#include "noct/germ.hpp"
#include "noct/lattice.hpp"
#include "noct/model_io.hpp"
#include "noct/rational.hpp"

namespace testing {

inline noct::Rational q(const char* s) { return noct::parse_rational(s); }

inline noct::Polygon hull(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<noct::Point2> v;
  for (const auto& [x, y] : pts) v.push_back({q(x), q(y)});
  return noct::Polygon::hull(std::move(v));
}

// Sum of the nef generators; ample on every built-in model.
inline noct::DivisorClass ample_class(const noct::SurfaceModel& m) {
  auto a = noct::DivisorClass::zero(m.rank());
  for (const auto& g : m.nef_generators) a += g;
  return a;
}

class RandomClasses {
 public:
  explicit RandomClasses(unsigned seed) : rng_(seed) {}

  noct::Rational small(int num_max = 6, int den_max = 4) {
    std::uniform_int_distribution<int> num(0, num_max), den(1, den_max);
    noct::Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  noct::Rational positive(int num_max = 6, int den_max = 4) {
    std::uniform_int_distribution<int> num(1, num_max), den(1, den_max);
    noct::Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  // ample + effective: always big.
  noct::DivisorClass big(const noct::SurfaceModel& m) {
    noct::DivisorClass d = positive(3, 3) * ample_class(m);
    for (const auto& g : m.effective_generators) d += small() * g;
    return d;
  }

  // A few terms of total degree <= max_degree with nonzero coefficients.
  noct::GermPolynomial germ(std::size_t n, int max_degree) {
    noct::GermPolynomial g(n);
    while (g.is_zero()) {
      const int terms = integer(1, 5);
      for (int k = 0; k < terms; ++k) {
        noct::Exponent e(n, 0);
        int budget = integer(0, max_degree);
        for (std::size_t i = 0; i < n && budget > 0; ++i) {
          const int take = integer(0, budget);
          e[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))] += take;
          budget -= take;
        }
        noct::Rational c(integer(1, 9) * (integer(0, 1) ? 1 : -1), integer(1, 3));
        c.canonicalize();
        g.add_term(e, c);
      }
    }
    return g;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
