#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "noct/convex.hpp"
#include "noct/rational.hpp"

namespace noct {

using Exponent = std::vector<int>;

/// Polynomial in local coordinates u_1..u_n at a point, exact coefficients.
class GermPolynomial {
 public:
  explicit GermPolynomial(std::size_t n) : n_(n) {}

  static GermPolynomial constant(std::size_t n, const Rational& c);
  /// u_{i+1} (0-based index i).
  static GermPolynomial variable(std::size_t n, std::size_t i);
  static GermPolynomial monomial(Exponent e, const Rational& c = 1);

  std::size_t variables() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int lowest_degree() const;

  void add_term(const Exponent& e, const Rational& c);

  GermPolynomial& operator+=(const GermPolynomial& o);
  GermPolynomial& operator-=(const GermPolynomial& o);
  friend GermPolynomial operator+(GermPolynomial a, const GermPolynomial& b) { return a += b; }
  friend GermPolynomial operator-(GermPolynomial a, const GermPolynomial& b) { return a -= b; }
  friend GermPolynomial operator*(const GermPolynomial& a, const GermPolynomial& b);
  friend bool operator==(const GermPolynomial& a, const GermPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  GermPolynomial pow(unsigned k) const;

  /// s(A u): every u_i is replaced by sum_j a[i][j] u_j.
  GermPolynomial substitute_linear(const Matrix& a) const;

 private:
  std::size_t n_;
  std::map<Exponent, Rational> terms_;
};

/// Parses sums like "u1^2*u2 + 3*u1^4 - 1/2*u3".
GermPolynomial parse_germ(std::size_t n, std::string_view text);
std::string to_string(const GermPolynomial& g);

struct ValuationVector {
  std::vector<int> nu;

  friend bool operator==(const ValuationVector& a, const ValuationVector& b) { return a.nu == b.nu; }
};

std::string to_string(const ValuationVector& v);

/// Valuation along the standard infinitesimal flag E, E n {y1=0}, ... on the
/// blow-up chart y_n = 1. Throws DomainError for the zero germ.
ValuationVector valuation_vector(const GermPolynomial& s);

/// Same, for the flag obtained from the standard one by an invertible linear
/// change of local coordinates.
ValuationVector valuation_vector(const GermPolynomial& s, const Matrix& coordinate_change);

struct WitnessSection {
  GermPolynomial germ;
  ValuationVector expected;
};

/// Germs at x of sections s_0', ..., s_n' of O(d) on P^n with valuation
/// vectors 0, e1, e1+e2, ..., e1+en.
std::vector<WitnessSection> witness_sections(int n, int d);

struct OracleBody {
  int n = 0;
  std::size_t sections = 0;
  std::vector<Vector> vertices;  // lexicographically sorted

  Polygon polygon() const;  // n must be 2
};

/// Hull of (1/m) nu(u^a) over all monomials of degree <= m d.
OracleBody monomial_oracle_body(int n, int d, int m, std::size_t max_sections = 2'000'000);

/// Extreme points of a finite point set in R^n, sorted lexicographically.
std::vector<Vector> convex_hull_vertices(std::vector<Vector> points);

}  // namespace noct
