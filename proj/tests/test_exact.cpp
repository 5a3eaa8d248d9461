#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f12/factor.hpp"
#include "f12/pi_monomial.hpp"
#include "f12/special_values.hpp"

#include <random>

using namespace f12;

namespace {

// Independent Bernoulli oracle: Worpitzky double sum
// B_n = sum_{k=0}^n 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) j^n  (B_1 = -1/2).
Rational bernoulli_oracle(unsigned n) {
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k) {
        Rational inner(0);
        for (unsigned j = 0; j <= k; ++j) {
            Rational term(binomial(k, j));
            term *= Rational(j == 0 ? Integer(n == 0 ? 1 : 0) : pow_integer(Integer(j), n));
            inner += (j % 2 == 0) ? term : -term;
        }
        acc += inner / Rational(k + 1);
    }
    return acc;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(12) == rational_from_string("-691/2730"));
    for (unsigned n = 0; n <= 24; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
    // recurrence sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1
    for (unsigned n = 1; n <= 60; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_exact(5) == PiMonomial(Rational(24), 0));
    CHECK(gamma_exact_half(1) == PiMonomial(Rational(1), 1));  // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_exact_half(-7) == PiMonomial(rational_from_string("16/105"), 1));
    CHECK(gamma_exact_half(-5).coeff < 0);  // Gamma(-5/2) < 0
    CHECK_THROWS_AS(gamma_exact(0), std::domain_error);
    CHECK_THROWS_AS(gamma_exact(-3), std::domain_error);

    // Gamma(x+1) = x Gamma(x) on random integer/half-integer x in [-19/2, 25]
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> twice(-19, 50);
    int tested = 0;
    while (tested < 200) {
        long t = twice(rng);
        if (t % 2 == 0 && t <= 0) continue;  // poles
        PiMonomial lhs = gamma_exact_half(t + 2);
        PiMonomial rhs = PiMonomial(make_rational(t, 2), 0) * gamma_exact_half(t);
        CHECK(lhs == rhs);
        ++tested;
    }
}

TEST_CASE("reciprocal gamma kills poles") {
    CHECK(gamma_reciprocal_int(4) == make_rational(1, 6));
    CHECK(gamma_reciprocal_int(0) == 0);
    CHECK(gamma_reciprocal_int(-5) == 0);
}

TEST_CASE("gamma ratio at coincident poles") {
    CHECK(gamma_ratio_limit(5, 3) == Rational(12));      // both finite
    CHECK(gamma_ratio_limit(3, -4) == 0);                // finite over pole
    CHECK(gamma_ratio_limit(-17, -17) == Rational(1));   // equal poles
    CHECK(gamma_ratio_limit(-1, -9) == Rational(362880));
    CHECK(gamma_ratio_limit(-13, -15) == Rational(210));
    CHECK_THROWS_AS(gamma_ratio_limit(-2, 3), std::domain_error);
}

TEST_CASE("zeta special values") {
    CHECK(zeta_exact(2) == PiMonomial(make_rational(1, 6), 4));
    CHECK(zeta_exact(0) == PiMonomial(make_rational(-1, 2), 0));
    CHECK(zeta_exact(-3) == PiMonomial(make_rational(1, 120), 0));
    CHECK(zeta_exact(-2).is_zero());
    CHECK_THROWS_AS(zeta_exact(1), std::domain_error);
    CHECK_THROWS_AS(zeta_exact(3), std::domain_error);
    // zeta(1-n) = -B_n/n for even n <= 60, B computed independently
    for (unsigned n = 2; n <= 60; n += 2)
        CHECK(zeta_exact(1 - static_cast<long>(n)).coeff == -bernoulli_oracle(n) / Rational(n));
}

TEST_CASE("partial zeta reductions") {
    CHECK(zeta_partial(2, 0, 2) == PiMonomial(make_rational(1, 24), 4));
    CHECK(zeta_partial(0, 1, 2).is_zero());
    // 2^1 * zeta(-1) = 2 * (-1/12) = -1/6
    CHECK(zeta_partial(-1, 0, 2) == PiMonomial(make_rational(-1, 6), 0));
    CHECK(zeta_partial(4, 0, 1) == zeta_exact(4));
    CHECK_THROWS_AS(zeta_partial(2, 0, 3), std::invalid_argument);
}

TEST_CASE("pi monomial arithmetic") {
    PiMonomial a(make_rational(3, 2), 4), b(make_rational(-1, 3), 4), c(Rational(5), -2);
    CHECK(a + b == PiMonomial(make_rational(7, 6), 4));
    CHECK_THROWS_AS(a + c, std::domain_error);
    CHECK((a + PiMonomial::zero()) == a);
    CHECK((PiMonomial(Rational(0), 10) + a) == a);  // zero ignores its exponent
    CHECK(PiMonomial(Rational(0), 10) == PiMonomial::zero());
    CHECK((a * c).half_exp == 2);
    CHECK((a / c) == PiMonomial(make_rational(3, 10), 6));

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-20, 20), ex(-6, 6);
    for (int i = 0; i < 300; ++i) {
        PiMonomial x(Rational(coeff(rng)), ex(rng));
        PiMonomial y(Rational(coeff(rng)), ex(rng));
        PiMonomial z(Rational(coeff(rng)), ex(rng));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("factorization round-trips") {
    Factorization f = factor_rational(Rational(456));
    CHECK(f.str() == "2^3 * 3 * 19");
    CHECK(f.to_rational() == Rational(456));

    Factorization g = factor_rational(rational_from_string("-1/1177605"));
    CHECK(g.sign == -1);
    CHECK(g.to_rational() == rational_from_string("-1/1177605"));
    for (const auto &[p, e] : g.factors) CHECK(is_probable_prime(p));

    Factorization one = factor_rational(Rational(1));
    CHECK(one.factors.empty());
    CHECK(one.sign == 1);
    CHECK_THROWS_AS(factor_rational(Rational(0)), std::domain_error);

    // a 15-digit table denominator with moderate prime content
    Rational big_q = rational_from_string("-304138734083887/1224338728493776896000");
    Factorization big = factor_rational(big_q);
    CHECK(big.to_rational() == big_q);
    for (const auto &[p, e] : big.factors) CHECK(is_probable_prime(p));

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Integer num(static_cast<long>(rng() >> 1)), den(static_cast<long>(rng() >> 1) + 1);
        Rational q = make_rational(num * (rng() % 2 ? 1 : -1), den);
        if (q == 0) continue;
        Factorization h = factor_rational(q);
        CHECK(h.to_rational() == q);
    }
}

TEST_CASE("long double conversion spans extreme magnitudes") {
    Rational q = rational_from_string("2199023255552/596060992003276800000");
    CHECK(to_long_double(q) == doctest::Approx(3.68926e-9).epsilon(1e-5));
    PiMonomial big(rational_from_string("1/1305893808013068186412500"), 74);
    CHECK(static_cast<double>(big.value_ld()) ==
          doctest::Approx(1.8999e-6).epsilon(1e-3));
}
