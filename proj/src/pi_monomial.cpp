#include "f12/pi_monomial.hpp"

#include <cmath>

namespace f12 {

std::string PiMonomial::str() const {
    if (is_zero()) return "0";
    std::string s = coeff.get_str();
    if (half_exp == 0) return s;
    s += " * pi^";
    if (half_exp % 2 == 0) {
        s += std::to_string(half_exp / 2);
    } else {
        s += "(" + std::to_string(half_exp) + "/2)";
    }
    return s;
}

long double PiMonomial::value_ld() const {
    if (is_zero()) return 0.0L;
    const long double pi = 3.14159265358979323846264338327950288L;
    return to_long_double(coeff) * powl(pi, static_cast<long double>(half_exp) / 2.0L);
}

PiMonomial pow(const PiMonomial &base, long e) {
    if (e == 0) return PiMonomial(Rational(1), 0);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("PiMonomial: 0 to negative power");
        return PiMonomial::zero();
    }
    return PiMonomial(pow_rational(base.coeff, e), base.half_exp * e);
}

long double to_long_double(const Rational &q) {
    // mpq -> double loses range for very large num/den; go via an explicit
    // quotient with 64 guard bits.
    if (q == 0) return 0.0L;
    Integer num = q.get_num(), den = q.get_den();
    long double sign = 1.0L;
    if (num < 0) {
        num = -num;
        sign = -1.0L;
    }
    long shift = 0;
    const long guard = 96;
    long nbits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long dbits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    shift = dbits - nbits + guard;
    Integer scaled;
    if (shift >= 0) {
        mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
    } else {
        mpz_fdiv_q_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    Integer quot = scaled / den;
    long double v = 0.0L;
    // Accumulate limbs most-significant first.
    size_t limbs = mpz_size(quot.get_mpz_t());
    for (size_t i = limbs; i-- > 0;) {
        v = v * 18446744073709551616.0L /* 2^64 */ +
            static_cast<long double>(mpz_getlimbn(quot.get_mpz_t(), i));
    }
    return sign * ldexpl(v, static_cast<int>(-shift));
}

}  // namespace f12
