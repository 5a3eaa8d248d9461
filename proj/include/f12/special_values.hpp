#pragma once

// Bernoulli numbers and exact special values of Gamma and zeta at the
// integer / half-integer points the tables need.

#include "f12/pi_monomial.hpp"
#include "f12/rational.hpp"

namespace f12 {

// B_n with the B_1 = -1/2 convention. Cached, thread-safe.
Rational bernoulli(unsigned n);

// Gamma at m or m + 1/2, passed as 2x to stay integral.
// Half-integer arguments carry half_exp = 1 (a single sqrt(pi)).
// Throws std::domain_error at nonpositive integers.
PiMonomial gamma_exact_half(long twice_x);

inline PiMonomial gamma_exact(long x) { return gamma_exact_half(2 * x); }

// 1/Gamma(n); zero at the poles n <= 0.
Rational gamma_reciprocal_int(long n);

// lim_{eps->0} Gamma(x + eps) / Gamma(y + eps) for integers x, y.
// When both arguments sit on poles this is the finite ratio
// (-1)^(x-y) (-y)! / (-x)!, the value the Eisenstein expansion takes at
// integer parameters. Throws if only the numerator is singular.
Rational gamma_ratio_limit(long x, long y);

// zeta(n) for integer n != 1. Even n > 0 give rational * pi^n; n <= 0 are
// rational. Odd n > 1 is not a pi-monomial and throws std::domain_error.
PiMonomial zeta_exact(long n);

// Partial zeta(n; a, N) = sum over 0 < m = a (mod N) of m^-n, for N in {1,2},
// via zeta(n;0,2) = 2^-n zeta(n), zeta(n;1,2) = (1 - 2^-n) zeta(n).
PiMonomial zeta_partial(long n, long residue, long modulus);

}  // namespace f12
