#pragma once

// Exact rational arithmetic. GMP's mpq_class already keeps values in
// canonical form (gcd(num, den) = 1, den > 0, zero as 0/1) after every
// arithmetic operation, so it is used directly as the coefficient field.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f12 {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalizing constructor; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "a/b" or "a" (base 10).
inline Rational rational_from_string(const std::string &text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + text + "'");
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer pow_integer(const Integer &base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for signed e (e < 0 inverts; base must be nonzero then).
inline Rational pow_rational(const Rational &base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0 to negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) r = 1 / r;
    return r;
}

// 2^e as an exact rational for signed e.
inline Rational pow2_rational(long e) { return pow_rational(Rational(2), e); }

inline std::string to_string(const Rational &q) { return q.get_str(); }

inline double to_double(const Rational &q) { return q.get_d(); }

// Lossless-enough conversion for long double consumers: split through
// a quotient + remainder so values far outside double range still work.
long double to_long_double(const Rational &q);

}  // namespace f12
