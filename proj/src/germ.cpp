#include "noct/germ.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "noct/errors.hpp"
#include "noct/linear_algebra.hpp"
#include "noct/lp.hpp"

namespace noct {

namespace {

int degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace

GermPolynomial GermPolynomial::constant(std::size_t n, const Rational& c) {
  GermPolynomial g(n);
  g.add_term(Exponent(n, 0), c);
  return g;
}

GermPolynomial GermPolynomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("germ variable index out of range");
  Exponent e(n, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

GermPolynomial GermPolynomial::monomial(Exponent e, const Rational& c) {
  GermPolynomial g(e.size());
  g.add_term(e, c);
  return g;
}

int GermPolynomial::lowest_degree() const {
  if (terms_.empty()) throw DomainError("zero germ has no lowest degree");
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, degree(e));
  return m;
}

void GermPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw InputError("exponent vector has the wrong length");
  for (int x : e) {
    if (x < 0) throw InputError("negative exponent in germ");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GermPolynomial& GermPolynomial::operator+=(const GermPolynomial& o) {
  if (o.n_ != n_) throw InputError("germs in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GermPolynomial& GermPolynomial::operator-=(const GermPolynomial& o) {
  if (o.n_ != n_) throw InputError("germs in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GermPolynomial operator*(const GermPolynomial& a, const GermPolynomial& b) {
  if (a.n_ != b.n_) throw InputError("germs in different numbers of variables");
  GermPolynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GermPolynomial GermPolynomial::pow(unsigned k) const {
  GermPolynomial out = constant(n_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

GermPolynomial GermPolynomial::substitute_linear(const Matrix& a) const {
  if (a.size() != n_) throw InputError("coordinate change has the wrong size");
  std::vector<GermPolynomial> images;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].size() != n_) throw InputError("coordinate change has the wrong size");
    GermPolynomial img(n_);
    for (std::size_t j = 0; j < n_; ++j) img += GermPolynomial::variable(n_, j) * constant(n_, a[i][j]);
    images.push_back(std::move(img));
  }
  GermPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    GermPolynomial term = constant(n_, c);
    for (std::size_t i = 0; i < n_; ++i) term = term * images[i].pow(static_cast<unsigned>(e[i]));
    out += term;
  }
  return out;
}

GermPolynomial parse_germ(std::size_t n, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty germ");
  GermPolynomial out(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse germ '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number at position " + std::to_string(start));
    return std::string(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    Rational coeff = sgn;
    Exponent e(n, 0);
    bool first = true;
    for (;;) {
      if (!first) {
        if (pos >= s.size() || s[pos] != '*') break;
        ++pos;
      }
      first = false;
      if (pos < s.size() && s[pos] == 'u') {
        ++pos;
        const int idx = std::stoi(read_int());
        if (idx < 1 || static_cast<std::size_t>(idx) > n) fail("variable u" + std::to_string(idx) + " out of range");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = std::stoi(read_int());
        }
        e[static_cast<std::size_t>(idx - 1)] += power;
      } else {
        std::string num = read_int();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          num += "/" + read_int();
        }
        coeff *= parse_rational(num);
      }
    }
    out.add_term(e, coeff);
  }
  return out;
}

std::string to_string(const GermPolynomial& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : g.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "u" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = to_string(mag);
    } else {
      term = mag == 1 ? mono : to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string to_string(const ValuationVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.nu.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.nu[i]);
  }
  return out + ")";
}

ValuationVector valuation_vector(const GermPolynomial& s) {
  if (s.is_zero()) throw DomainError("valuation of the zero germ");
  const std::size_t n = s.variables();
  if (n == 0) throw InputError("germ has no variables");
  const int m = s.lowest_degree();

  // Lowest form in the chart y_n = 1: u_i = u_n y_i, so the exponent of y_i is
  // that of u_i for i < n.
  std::vector<Exponent> chart;
  for (const auto& [e, c] : s.terms()) {
    if (degree(e) == m) chart.emplace_back(e.begin(), e.end() - 1);
  }
  ValuationVector v;
  v.nu.push_back(m);
  for (std::size_t var = 0; var + 1 < n; ++var) {
    int order = std::numeric_limits<int>::max();
    for (const auto& e : chart) order = std::min(order, e[var]);
    v.nu.push_back(order);
    std::erase_if(chart, [&](const Exponent& e) { return e[var] != order; });
  }
  int tail = 0;
  for (std::size_t i = 1; i < v.nu.size(); ++i) tail += v.nu[i];
  if (tail > v.nu[0]) throw InternalError("valuation vector violates nu_2 + ... + nu_n <= nu_1");
  return v;
}

ValuationVector valuation_vector(const GermPolynomial& s, const Matrix& coordinate_change) {
  if (rank(coordinate_change) != s.variables()) throw InputError("coordinate change is not invertible");
  return valuation_vector(s.substitute_linear(coordinate_change));
}

std::vector<WitnessSection> witness_sections(int n, int d) {
  if (n < 2 || d < 1) throw InputError("witness sections need n >= 2 and d >= 1");
  const auto dim = static_cast<std::size_t>(n);
  // Unit factor: a product of d-1 hyperplanes missing x.
  const GermPolynomial unit = (GermPolynomial::constant(dim, 1) + GermPolynomial::variable(dim, dim - 1))
                                  .pow(static_cast<unsigned>(d - 1));
  std::vector<WitnessSection> out;
  ValuationVector zero{std::vector<int>(dim, 0)};
  out.push_back({unit, zero});
  ValuationVector e1 = zero;
  e1.nu[0] = 1;
  out.push_back({unit * GermPolynomial::variable(dim, dim - 1), e1});
  for (std::size_t i = 1; i < dim; ++i) {
    ValuationVector ei = e1;
    ei.nu[i] = 1;
    out.push_back({unit * GermPolynomial::variable(dim, i - 1), ei});
  }
  return out;
}

Polygon OracleBody::polygon() const {
  if (n != 2) throw InputError("oracle polygon needs n = 2");
  std::vector<Point2> pts;
  for (const auto& v : vertices) pts.push_back({v[0], v[1]});
  return Polygon::hull(std::move(pts));
}

std::vector<Vector> convex_hull_vertices(std::vector<Vector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return points;
  if (points.front().size() == 2) {
    std::vector<Point2> pts;
    for (const auto& p : points) pts.push_back({p[0], p[1]});
    const Polygon hull = Polygon::hull(std::move(pts));
    std::vector<Vector> out;
    for (const auto& p : hull.vertices()) out.push_back({p.x, p.y});
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Vector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (!in_convex_hull(others, points[i])) out.push_back(points[i]);
  }
  return out;
}

OracleBody monomial_oracle_body(int n, int d, int m, std::size_t max_sections) {
  if (n < 2 || d < 1 || m < 1) throw InputError("oracle needs n >= 2, d >= 1, m >= 1");
  const int top = m * d;
  // binomial(top + n, n) monomials of degree <= top
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(top + n), static_cast<unsigned long>(n));
  if (count > max_sections) {
    throw ResourceError("oracle would enumerate " + count.get_str() + " monomials (cap " +
                        std::to_string(max_sections) + ")");
  }
  OracleBody out;
  out.n = n;
  out.sections = count.get_ui();
  const auto dim = static_cast<std::size_t>(n);
  std::set<Vector> points;
  Exponent e(dim, 0);
  // Odometer over exponent vectors with total degree <= top.
  for (;;) {
    const ValuationVector v = valuation_vector(GermPolynomial::monomial(e));
    Vector p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = Rational(v.nu[i], m);
    for (auto& q : p) q.canonicalize();
    points.insert(std::move(p));
    std::size_t i = 0;
    for (; i < dim; ++i) {
      ++e[i];
      if (degree(e) <= top) break;
      e[i] = 0;
    }
    if (i == dim) break;
  }
  out.vertices = convex_hull_vertices({points.begin(), points.end()});
  return out;
}

}  // namespace noct
