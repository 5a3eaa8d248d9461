#pragma once

// The weight-20 level-2 cusp space: explicit 4-dimensional basis
// {g20(z), g20(2z), h1, h2} and the coefficient-matching linear system
// for holomorphic projections.

#include "f12/linalg.hpp"
#include "f12/pi_monomial.hpp"
#include "f12/qexp.hpp"

#include <array>
#include <string>

namespace f12 {

struct FormBasis {
    std::array<QExpansion, 4> forms;  // g20(z), g20(2z), h1, h2
    std::array<std::string, 4> labels;
    RatMatrix coefficient_matrix;  // row n-1, column i: a_n(form_i), n = 1..4
    RatMatrix coefficient_inverse;
};

// Weight-20 level-2 cusp forms (eta(z) eta(2z))^8 * {E4^3, E4(2z)^3, delta,
// delta(2z)}; their leading 4x8 coefficient matrix has exact rank 4.
std::vector<QExpansion> spanning_set(long precision);

// Normalized U2 eigenforms on the 4-dimensional space, eigenvalues -512
// and +512, found as exact null spaces of (U2 -+ 512 I).
std::pair<QExpansion, QExpansion> newforms(long precision);

const FormBasis &level2_basis();  // cached, precision 32

// Solves A_n = sum_i K_i a_n(form_i) for the K's. All nonzero A's must
// share one pi exponent.
std::array<PiMonomial, 4> solve_projection_coefficients(const std::array<PiMonomial, 4> &a);

}  // namespace f12
