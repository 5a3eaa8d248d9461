#include "f12/holproj.hpp"

#include "f12/level2.hpp"
#include "f12/qexp.hpp"
#include "f12/special_values.hpp"

#include <cmath>

namespace f12 {

namespace {

// G_{2,2} coefficients b(0..4) = 1/24, 1, 1, 4, 1.
const std::array<Rational, 5> &g22_coefficients() {
    static const std::array<Rational, 5> b = [] {
        QExpansion g = g2_level(2, 5);
        return std::array<Rational, 5>{g.a(0), g.a(1), g.a(2), g.a(3), g.a(4)};
    }();
    return b;
}

}  // namespace

CoefficientSet c_coefficients(const ProjectionContext &ctx) {
    const long k = ctx.k, sigma = ctx.sigma;
    const long w = 2 * sigma - k;       // pi power carried by the family
    const long half_exp = 2 * w;        // = 4s
    const int k_half_sign = (k / 2) % 2 == 0 ? 1 : -1;

    CoefficientSet set;

    // C0': the Gamma-ratio is the finite integer-point limit; when it
    // vanishes the zeta value (possibly irrational) is never touched.
    Rational ratio = gamma_ratio_limit(w - 1, sigma + 1 - k);
    if (ratio == 0) {
        set.c0_prime = PiMonomial::zero();
    } else {
        Rational c = Rational(-k_half_sign) * 2 * ratio * zeta_exact(w - 1).coeff *
                     gamma_reciprocal_int(sigma - 1);
        set.c0_prime = PiMonomial(c, half_exp);
    }

    // C0'' = 2 (1 - 2^(k-2sigma)) zeta(2sigma - k); nonzero only for w > 0,
    // where zeta contributes the same pi^w.
    PiMonomial z = zeta_exact(w);
    set.c0_double_prime = (2 * (1 - pow2_rational(-w))) * z;
    if (!set.c0_double_prime.is_zero() && set.c0_double_prime.half_exp != half_exp)
        throw std::logic_error("c_coefficients: C0'' exponent drift");

    // C_n = (-1)^(k/2) 2 sum_{d|n} (-1)^(d+1) d^(w-1) pi^w
    for (long n = 1; n <= 4; ++n) {
        Rational acc(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            Rational term = pow_rational(Rational(d), w - 1);
            acc += (d % 2 == 0) ? -term : term;
        }
        set.c[static_cast<size_t>(n - 1)] = PiMonomial(Rational(k_half_sign) * 2 * acc, half_exp);
    }
    return set;
}

std::vector<Rational> whittaker_poly(long alpha, long r) {
    if (r < 0) throw std::invalid_argument("whittaker_poly: r >= 0");
    std::vector<Rational> coeffs(static_cast<size_t>(r) + 1);
    Rational gamma_alpha =
        alpha > 0 ? Rational(factorial(static_cast<unsigned long>(alpha - 1))) : Rational(0);
    for (long i = 0; i <= r; ++i) {
        Rational c = Rational(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i))) *
                     gamma_alpha * gamma_reciprocal_int(alpha - i);
        if (i % 2 != 0) c = -c;
        coeffs[static_cast<size_t>(i)] = c;
    }
    return coeffs;
}

PiMonomial projection_integral(long m, long d, const ProjectionContext &ctx) {
    if (d < 0 || d > m) throw std::invalid_argument("projection_integral: 0 <= d <= m");
    const long k = ctx.k, sigma = ctx.sigma;
    const CoefficientSet set = c_coefficients(ctx);
    const Rational inv_fact = 1 / Rational(factorial(static_cast<unsigned long>(k - 2)));

    if (d == 0) {
        PiMonomial first = set.c0_prime * (Rational(factorial(static_cast<unsigned long>(k - sigma))) *
                                           pow_rational(Rational(m), sigma - 2));
        PiMonomial second =
            set.c0_double_prime * (Rational(factorial(static_cast<unsigned long>(sigma - 1))) *
                                   pow_rational(Rational(m), k - 1 - sigma));
        return (first + second) * inv_fact;
    }

    const long r = k - 1 - sigma;
    Rational sum(0);
    Rational ratio = Rational(-m) / Rational(d);
    Rational ratio_pow(1);
    for (long i = 0; i <= r; ++i) {
        Rational rec = gamma_reciprocal_int(sigma - 1 - i);
        if (rec != 0) {
            sum += Rational(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i))) *
                   ratio_pow * Rational(factorial(static_cast<unsigned long>(k - 2 - i))) * rec;
        }
        ratio_pow *= ratio;
    }
    Rational scale = pow_rational(Rational(d), r) * inv_fact;
    return set.c[static_cast<size_t>(d - 1)] * (scale * sum);
}

std::array<PiMonomial, 4> a_coefficients(const ProjectionContext &ctx) {
    const auto &b = g22_coefficients();
    std::array<PiMonomial, 4> a;
    for (long m = 1; m <= 4; ++m) {
        PiMonomial acc;
        for (long d = 0; d <= m; ++d)
            acc = acc + b[static_cast<size_t>(m - d)] * projection_integral(m, d, ctx);
        a[static_cast<size_t>(m - 1)] = acc;
    }
    return a;
}

std::array<PiMonomial, 4> k_coefficients(const ProjectionContext &ctx) {
    return solve_projection_coefficients(a_coefficients(ctx));
}

std::vector<IntegrandTerm> projection_integrand(long m, const ProjectionContext &ctx) {
    const long k = ctx.k, sigma = ctx.sigma;
    const long r = k - 1 - sigma;
    const CoefficientSet set = c_coefficients(ctx);
    const auto &b = g22_coefficients();
    const long double md = static_cast<long double>(m);

    std::vector<IntegrandTerm> terms;
    // Constant-term pieces (G22 weight b(m)), always present:
    // (4 pi y)^(2-sigma) and (4 pi y)^(sigma+1-k) with 4 pi y = t/m.
    long double b_m = to_long_double(b[static_cast<size_t>(m)]);
    terms.push_back(
        {b_m * set.c0_prime.value_ld() * powl(md, static_cast<long double>(sigma - 2)),
         2 - sigma});
    terms.push_back({b_m * set.c0_double_prime.value_ld() *
                         powl(md, static_cast<long double>(k - 1 - sigma)),
                     sigma + 1 - k});

    for (long d = 1; d <= m; ++d) {
        std::vector<Rational> w = whittaker_poly(sigma - 1, r);
        Rational gamma_alpha_inv = gamma_reciprocal_int(sigma - 1);
        long double cd = set.c[static_cast<size_t>(d - 1)].value_ld() *
                         static_cast<long double>(to_long_double(b[static_cast<size_t>(m - d)]));
        for (long i = 0; i <= r; ++i) {
            Rational wc = w[static_cast<size_t>(i)] * gamma_alpha_inv;
            if (wc == 0) continue;
            // (4 pi d y)^(r-i) (4 pi y)^(sigma+1-k) with 4 pi y = t/m:
            // d^(r-i) m^(i - ... ) t^(-i) since r + sigma + 1 - k = 0.
            long double c = cd * static_cast<long double>(to_long_double(wc)) *
                            powl(static_cast<long double>(d), static_cast<long double>(r - i)) *
                            powl(md, static_cast<long double>(i));
            terms.push_back({c, -i});
        }
    }
    return terms;
}

namespace {

long double integrand_value(const std::vector<IntegrandTerm> &terms, long k, long double t) {
    long double v = 0.0L;
    for (const auto &term : terms)
        v += term.coeff * powl(t, static_cast<long double>(term.power + k - 2));
    return v * expl(-t);
}

// Adaptive Simpson with absolute tolerance.
long double adaptive_simpson(const std::vector<IntegrandTerm> &terms, long k, long double a,
                             long double b, long double fa, long double fm, long double fb,
                             long double whole, long double tol, int depth) {
    long double m = 0.5L * (a + b);
    long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
    long double flm = integrand_value(terms, k, lm);
    long double frm = integrand_value(terms, k, rm);
    long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    long double delta = left + right - whole;
    if (depth <= 0 || fabsl(delta) <= 15.0L * tol)
        return left + right + delta / 15.0L;
    return adaptive_simpson(terms, k, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
           adaptive_simpson(terms, k, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}

}  // namespace

QuadratureResult quadrature_a_coefficient(long m, const ProjectionContext &ctx,
                                          long double rel_tol) {
    std::vector<IntegrandTerm> terms = projection_integrand(m, ctx);
    const long k = ctx.k;
    long max_power = 0;
    long double coeff_scale = 0.0L;
    for (const auto &t : terms) {
        max_power = std::max(max_power, t.power + k - 2);
        coeff_scale += fabsl(t.coeff);
    }
    // Cut where the tail of every t^P e^-t term is negligible.
    long double cut = std::max<long double>(80.0L, 4.0L * static_cast<long double>(max_power));
    while (coeff_scale * powl(cut, static_cast<long double>(max_power)) * expl(-cut) >
           1e-45L * coeff_scale)
        cut += 16.0L;

    // Scale estimate for the absolute tolerance from a coarse pass.
    long double coarse = 0.0L;
    const int samples = 4096;
    for (int i = 1; i <= samples; ++i) {
        long double t = cut * (static_cast<long double>(i) - 0.5L) / samples;
        coarse += integrand_value(terms, k, t);
    }
    coarse = fabsl(coarse) * cut / samples;
    if (coarse == 0.0L) coarse = coeff_scale;

    long double tol = rel_tol * coarse;
    long double fa = integrand_value(terms, k, 0.0L);
    long double fb = integrand_value(terms, k, cut);
    long double fm = integrand_value(terms, k, 0.5L * cut);
    long double whole = cut / 6.0L * (fa + 4.0L * fm + fb);
    long double integral =
        adaptive_simpson(terms, k, 0.0L, cut, fa, fm, fb, whole, tol, 48);
    long double inv_fact = 1.0L;
    for (long j = 2; j <= k - 2; ++j) inv_fact *= static_cast<long double>(j);
    long double value = integral / inv_fact;
    long double err = 2.0L * tol / inv_fact + fabsl(value) * 1e-16L;
    return {value, err, true};
}

}  // namespace f12
