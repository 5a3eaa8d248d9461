#pragma once

// Published table values for the standard L-function of the Miyawaki
// degree-3 weight-12 cusp form. The pipeline re-derives every entry from
// scratch; these constants exist only to be compared against, and any
// disagreement is emitted as a certificate, never silently patched.

#include "f12/rational.hpp"

#include <array>

namespace f12::reference {

inline constexpr std::array<long, 10> kPoints = {-8, -6, -4, -2, 0, 1, 3, 5, 7, 9};

long point_index(long s);  // 0..9, throws on unknown s

// Eisenstein constants (C0', C0'', C1..C4), common factor pi^(2s).
extern const std::array<std::array<const char *, 6>, 10> c_table;

// Projection integrals A_1..A_4, common factor pi^(2s).
extern const std::array<std::array<const char *, 4>, 10> a_table;

// Projection coefficients K_1, K_2, common factor pi^(2s).
extern const std::array<std::array<const char *, 2>, 10> k_table;

// Inverse of the coefficient-matching matrix: row i gives the closed form
// K_{i+1} = (sum_j num[i][j] A_{j+1}) / den[i].
extern const long k_inverse_num[4][4];
extern const long k_inverse_den[4];

struct PiValue {
    long s;
    const char *rational;
    long pi_power;
};

// L(s+11, delta x delta) in units of <delta, delta>.
extern const std::array<PiValue, 10> sym_square_rows;

// L(s+10, g20) L(s+9, g20) in units of <g20, g20>.
extern const std::array<PiValue, 10> g20_product_rows;

struct FactorEntry {
    long prime;
    int exponent;
};

struct MainRow {
    long s;
    int sign;
    std::array<FactorEntry, 8> numerator;    // zero-terminated
    std::array<FactorEntry, 8> denominator;  // zero-terminated
    long pi_power;
    double numeric;
};

// The main table: L(s, F12, St) = R_s pi^alpha_s <delta,delta> <g20,g20>.
extern const std::array<MainRow, 10> main_rows;

Rational main_row_rational(const MainRow &row);

// Printed Petersson norms.
extern const char *delta_norm;          // l = 8
extern const char *g20_norms[3];        // l = 12, 14, 16

// Weight-20 expansions as printed: a(2)..a(5).
extern const long g20_head[4];
extern const long g20_a5_variant;  // the sign-conflicting +2377410 listing
extern const long h1_head[4];
extern const long h2_head[4];

// The six Fourier classes of F12: integer Gram matrices (2N) and the
// printed coefficients, leading class normalized to 1.
struct GramClass {
    int gram[3][3];
    long coefficient;
};
extern const std::array<GramClass, 6> f12_classes;

}  // namespace f12::reference
