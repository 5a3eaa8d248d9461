#include "f12/special_values.hpp"

#include <mutex>
#include <vector>

namespace f12 {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // grown on demand
}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) {
        bernoulli_cache.push_back(Rational(1));
        bernoulli_cache.push_back(make_rational(-1, 2));
    }
    while (bernoulli_cache.size() <= n) {
        // sum_{j<=m} C(m+1, j) B_j = 0
        unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_cache[n];
}

PiMonomial gamma_exact_half(long twice_x) {
    if (twice_x % 2 == 0) {
        long n = twice_x / 2;
        if (n <= 0) throw std::domain_error("gamma_exact: pole at nonpositive integer");
        return PiMonomial(Rational(factorial(static_cast<unsigned long>(n - 1))), 0);
    }
    // Gamma(1/2 + m) from Gamma(1/2) = sqrt(pi) by the recurrence
    // Gamma(x+1) = x Gamma(x), both directions.
    Rational c(1);
    long h = twice_x;  // current argument doubled
    if (h >= 1) {
        while (h > 1) {
            h -= 2;
            c *= make_rational(h, 2);  // Gamma(x+1) = x Gamma(x)
        }
    } else {
        while (h < 1) {
            c /= make_rational(h, 2);  // Gamma(x) = Gamma(x+1)/x
            h += 2;
        }
    }
    return PiMonomial(c, 1);
}

Rational gamma_reciprocal_int(long n) {
    if (n <= 0) return Rational(0);
    return 1 / Rational(factorial(static_cast<unsigned long>(n - 1)));
}

Rational gamma_ratio_limit(long x, long y) {
    bool x_pole = (x <= 0), y_pole = (y <= 0);
    if (!x_pole && !y_pole)
        return Rational(factorial(static_cast<unsigned long>(x - 1))) /
               Rational(factorial(static_cast<unsigned long>(y - 1)));
    if (x_pole && !y_pole)
        throw std::domain_error("gamma_ratio_limit: singular numerator over finite denominator");
    if (!x_pole && y_pole) return Rational(0);
    // Both poles: residues of Gamma at -a are (-1)^a / a!.
    unsigned long a = static_cast<unsigned long>(-x), b = static_cast<unsigned long>(-y);
    Rational r = Rational(factorial(b)) / Rational(factorial(a));
    if ((a + b) % 2 != 0) r = -r;
    return r;
}

PiMonomial zeta_exact(long n) {
    if (n == 1) throw std::domain_error("zeta_exact: pole at 1");
    if (n > 1) {
        if (n % 2 != 0)
            throw std::domain_error("zeta_exact: odd argument > 1 is not a pi monomial");
        // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
        unsigned m = static_cast<unsigned>(n / 2);
        Rational c = bernoulli(static_cast<unsigned>(n)) * pow2_rational(n) /
                     (2 * Rational(factorial(static_cast<unsigned long>(n))));
        if (m % 2 == 0) c = -c;
        return PiMonomial(c, 2 * n);
    }
    // zeta(-m) = (-1)^m B_{m+1} / (m+1), m >= 0 (so zeta(0) = -1/2).
    unsigned long m = static_cast<unsigned long>(-n);
    Rational c = bernoulli(static_cast<unsigned>(m + 1)) / Rational(m + 1);
    if (m % 2 != 0) c = -c;
    return PiMonomial(c, 0);
}

PiMonomial zeta_partial(long n, long residue, long modulus) {
    if (modulus != 1 && modulus != 2)
        throw std::invalid_argument("zeta_partial: modulus must be 1 or 2");
    if (modulus == 1) return zeta_exact(n);
    long r = ((residue % 2) + 2) % 2;
    if (r == 0) return zeta_exact(n) * pow2_rational(-n);
    return zeta_exact(n) * (1 - pow2_rational(-n));
}

}  // namespace f12
