#pragma once

// Eisenstein Fourier constants, Whittaker closed forms, the holomorphic
// projection integrals A_m and the projection coefficients K_m, at the ten
// critical points of the degree-7 standard L-function.

#include "f12/pi_monomial.hpp"

#include <array>
#include <vector>

namespace f12 {

inline constexpr std::array<long, 10> kCriticalPoints = {-8, -6, -4, -2, 0, 1, 3, 5, 7, 9};

struct ProjectionContext {
    long k{20};   // cusp form weight
    long s{0};    // standard-L critical point
    long sigma{10};  // Rankin argument s + 10

    explicit ProjectionContext(long s_point) : s(s_point), sigma(s_point + 10) {
        // Validity window of the integer-point Eisenstein expansion
        if (!(sigma - (k - 1) <= 0 && sigma - 1 > 0))
            throw std::invalid_argument("ProjectionContext: sigma out of window");
    }
};

// The Fourier-constant family; all nonzero entries share pi^(2s)
// (half_exp = 4s).
struct CoefficientSet {
    PiMonomial c0_prime;
    PiMonomial c0_double_prime;
    std::array<PiMonomial, 4> c;  // C_1..C_4
};

CoefficientSet c_coefficients(const ProjectionContext &ctx);

// W(y, alpha, -r) = sum_i (-1)^i C(r,i) Gamma(alpha)/Gamma(alpha-i) y^(r-i)
// as exact coefficients, entry [i] multiplying y^(r-i). Vanishing
// Gamma-denominator terms are exact zeros.
std::vector<Rational> whittaker_poly(long alpha, long r);

// One Sturm-type integral: the contribution of the q^d Eisenstein
// coefficient to the m-th projection coefficient (d = 0 is the pair of
// constant-term pieces).
PiMonomial projection_integral(long m, long d, const ProjectionContext &ctx);

// A_m = sum_{d<=m} b(m-d) I(m,d) with b = G_{2,2} coefficients.
std::array<PiMonomial, 4> a_coefficients(const ProjectionContext &ctx);

// Solution of the coefficient-matching system on the level-2 basis.
std::array<PiMonomial, 4> k_coefficients(const ProjectionContext &ctx);

// ---- numerical cross-check of the projection integrals ----

struct IntegrandTerm {
    long double coeff;
    long power;  // of t, before the t^(k-2) weight
};

// Finite term list of the m-th projection integrand in t = 4 pi m y:
// A_m = 1/(k-2)! int_0^inf (sum_j c_j t^(p_j)) e^-t t^(k-2) dt.
// Always carries the two constant-term slots plus the nonzero Whittaker
// terms.
std::vector<IntegrandTerm> projection_integrand(long m, const ProjectionContext &ctx);

struct QuadratureResult {
    long double value;
    long double error_estimate;
    bool converged;
};

// Adaptive quadrature of the integrand above; independent numerical oracle
// for a_coefficients.
QuadratureResult quadrature_a_coefficient(long m, const ProjectionContext &ctx,
                                          long double rel_tol = 1e-11L);

}  // namespace f12
