#include "f12/sym_square_fe.hpp"

#include "f12/special_values.hpp"

namespace f12 {

PiMonomial sym_square_gamma_factor(long a) {
    // 2^-a pi^(-3a/2) Gamma(a) Gamma((a-10)/2); a odd keeps (a-10)/2 half-integral.
    PiMonomial pi_part(pow2_rational(-a), -3 * a);
    return pi_part * gamma_exact(a) * gamma_exact_half(a - 10);
}

PiMonomial sym_square_reflection_factor(long a) {
    return sym_square_gamma_factor(23 - a) / sym_square_gamma_factor(a);
}

}  // namespace f12
