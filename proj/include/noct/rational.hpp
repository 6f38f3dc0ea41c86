#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace noct {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Parses "p/q" or "p" (optional leading sign). Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1/2,0,-3".
Vector parse_rational_list(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational dot(const Vector& a, const Vector& b);

}  // namespace noct
