#pragma once

// Completed-function transport for the symmetric square of delta:
// D*(s) = 2^-s pi^(-3s/2) Gamma(s) Gamma((s-10)/2) L(s) with D*(s) = D*(23-s).

#include "f12/pi_monomial.hpp"

namespace f12 {

// Exact multiplier with L(a) = factor * L(23 - a), odd a in [3, 20].
PiMonomial sym_square_reflection_factor(long a);

// gamma-side of D*(s) as an exact monomial: 2^-s pi^(-3s/2) Gamma(s) Gamma((s-10)/2).
PiMonomial sym_square_gamma_factor(long a);

}  // namespace f12
