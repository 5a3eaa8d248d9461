#pragma once

// Exact enumeration of E8 vector triples with the degree-8 spherical
// weight, recovering the Fourier coefficients of the genus-3 theta series.

#include "f12/rational.hpp"

#include <array>
#include <vector>

namespace f12 {

struct LatticeVector {
    std::array<int8_t, 8> doubled{};  // twice the E8 coordinates
    int sum_sq{0};                    // sum doubled_i^2 = 4 <v, v>
};

struct GramTarget {
    // Integer Gram matrix <v_i, v_j> (equals 2N for the half-integral N);
    // diagonal even.
    std::array<std::array<int, 3>, 3> gram{};
};

struct ThetaOptions {
    int threads{0};          // 0: hardware concurrency
    double budget_seconds{0};  // 0: unlimited
};

// All E8 vectors with <v, v> = norm (norm even, <= 8). Deduplicated by
// construction; closed under negation.
std::vector<LatticeVector> enumerate_vectors(int norm);

// Re(det(Q (v1, v2, v3))^8) with Q projecting coordinates (1+i4, 2+i5, 3+i6);
// the doubled coordinates contribute a global 2^24 that is divided out.
Rational spherical_weight(const LatticeVector &v1, const LatticeVector &v2,
                          const LatticeVector &v3);

// Sum of spherical weights over ordered triples with exact Gram matrix
// equal to the target. Zero for targets that are not positive
// semidefinite. Throws std::runtime_error when the time budget is hit.
Rational fourier_coefficient(const GramTarget &target, const ThetaOptions &opts = {});

// The leading class [[2,1,1],[1,2,1],[1,1,2]], whose raw value normalizes
// the printed expansion.
GramTarget minimal_gram_target();

}  // namespace f12
