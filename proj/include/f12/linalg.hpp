#pragma once

// Small exact linear algebra over the rationals. Elimination is
// fraction-free (Bareiss) on denominator-cleared integer rows.

#include "f12/rational.hpp"

#include <vector>

namespace f12 {

using RatMatrix = std::vector<std::vector<Rational>>;

long matrix_rank(RatMatrix m);

// Solves a square system; throws std::domain_error when singular.
std::vector<Rational> solve_linear(RatMatrix m, std::vector<Rational> rhs);

// Exact inverse; throws std::domain_error when singular.
RatMatrix invert_matrix(const RatMatrix &m);

// Basis of the right null space.
std::vector<std::vector<Rational>> null_space(RatMatrix m);

}  // namespace f12
