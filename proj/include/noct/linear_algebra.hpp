#pragma once

#include <cstddef>
#include <optional>

#include "noct/rational.hpp"

namespace noct {

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
std::optional<Vector> solve(Matrix a, Vector b);

std::size_t rank(Matrix a);

/// Counts of positive, negative and zero diagonal entries after congruence
/// diagonalization of a symmetric matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Inertia inertia(Matrix symmetric);

inline bool is_negative_definite(const Matrix& symmetric) {
  const Inertia in = inertia(symmetric);
  return in.positive == 0 && in.zero == 0;
}

}  // namespace noct
