#include "f12/qexp.hpp"

#include "f12/special_values.hpp"

#include <numeric>

namespace f12 {

namespace {

long lcm_level(long a, long b) { return std::lcm(a, b); }

std::vector<long> smallest_prime_factor(long n) {
    std::vector<long> spf(static_cast<size_t>(n) + 1, 0);
    for (long i = 2; i <= n; ++i) {
        if (spf[static_cast<size_t>(i)] == 0) {
            for (long j = i; j <= n; j += i)
                if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = i;
        }
    }
    return spf;
}

}  // namespace

QExpansion QExpansion::truncated(long new_precision) const {
    if (new_precision > precision())
        throw std::out_of_range("QExpansion::truncated: precision exhausted");
    return QExpansion(weight_, level_,
                      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_precision));
}

QExpansion operator+(const QExpansion &f, const QExpansion &g) {
    if (f.weight() != g.weight())
        throw std::invalid_argument("QExpansion: adding different weights");
    long prec = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<size_t>(prec));
    for (long n = 0; n < prec; ++n) c[static_cast<size_t>(n)] = f.a(n) + g.a(n);
    return QExpansion(f.weight(), lcm_level(f.level(), g.level()), std::move(c));
}

QExpansion operator-(const QExpansion &f, const QExpansion &g) {
    return f + (Rational(-1) * g);
}

QExpansion operator*(const QExpansion &f, const QExpansion &g) {
    long prec = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    for (long i = 0; i < prec; ++i) {
        if (f.a(i) == 0) continue;
        for (long j = 0; i + j < prec; ++j) {
            if (g.a(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += f.a(i) * g.a(j);
        }
    }
    return QExpansion(f.weight() + g.weight(), lcm_level(f.level(), g.level()), std::move(c));
}

QExpansion operator*(const Rational &c, const QExpansion &f) {
    std::vector<Rational> v = f.coeffs();
    for (auto &x : v) x *= c;
    return QExpansion(f.weight(), f.level(), std::move(v));
}

QExpansion operator/(const QExpansion &f, const Rational &c) {
    if (c == 0) throw std::domain_error("QExpansion: division by zero");
    return (1 / c) * f;
}

QExpansion pow_series(const QExpansion &f, unsigned e) {
    if (e == 0)
        return QExpansion(0, f.level(),
                          [&] {
                              std::vector<Rational> one(static_cast<size_t>(f.precision()),
                                                        Rational(0));
                              one[0] = 1;
                              return one;
                          }());
    QExpansion acc = f;
    for (unsigned i = 1; i < e; ++i) acc = acc * f;
    return acc;
}

QExpansion q_shift(const QExpansion &f, long shift) {
    std::vector<Rational> c(static_cast<size_t>(f.precision() + shift), Rational(0));
    for (long n = 0; n < f.precision(); ++n) c[static_cast<size_t>(n + shift)] = f.a(n);
    return QExpansion(f.weight(), f.level(), std::move(c));
}

QExpansion eisenstein(long k, long precision) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein: need even k >= 4");
    Rational alpha = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
    std::vector<Rational> sigma(static_cast<size_t>(precision), Rational(0));
    for (long d = 1; d < precision; ++d) {
        Integer dk = pow_integer(Integer(d), static_cast<unsigned long>(k - 1));
        for (long n = d; n < precision; n += d) sigma[static_cast<size_t>(n)] += Rational(dk);
    }
    std::vector<Rational> c(static_cast<size_t>(precision));
    c[0] = 1;
    for (long n = 1; n < precision; ++n) c[static_cast<size_t>(n)] = alpha * sigma[static_cast<size_t>(n)];
    return QExpansion(k, 1, std::move(c));
}

QExpansion g2_level(long p, long precision) {
    std::vector<Rational> c(static_cast<size_t>(precision), Rational(0));
    c[0] = make_rational(p - 1, 24);
    for (long d = 1; d < precision; ++d) {
        if (d % p == 0) continue;
        for (long n = d; n < precision; n += d) c[static_cast<size_t>(n)] += d;
    }
    return QExpansion(2, p, std::move(c));
}

QExpansion eta_euler_product(long precision) {
    std::vector<Rational> c(static_cast<size_t>(precision), Rational(0));
    for (long k = 0;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= precision && e2 >= precision) break;
        Rational s = (k % 2 == 0) ? Rational(1) : Rational(-1);
        if (e1 < precision) c[static_cast<size_t>(e1)] += s;
        if (k > 0 && e2 < precision) c[static_cast<size_t>(e2)] += s;
    }
    return QExpansion(0, 1, std::move(c));
}

std::vector<Integer> tau_coefficients(long n_terms) {
    // delta/q = F^24 with F = prod(1-q^n); F^3 is the sparse Jacobi series
    // sum (-1)^k (2k+1) q^(k(k+1)/2), so two dense squarings from F^6 do it.
    if (n_terms > 400000)
        throw std::invalid_argument("tau_coefficients: 128-bit bounds checked only to 4e5");
    size_t n = static_cast<size_t>(n_terms);
    std::vector<std::pair<long, long>> sparse;  // (exponent, coefficient) of F^3
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e >= n_terms) break;
        sparse.emplace_back(e, (k % 2 == 0 ? (2 * k + 1) : -(2 * k + 1)));
    }
    std::vector<long long> f6(n, 0);
    for (auto [ei, ci] : sparse)
        for (auto [ej, cj] : sparse) {
            if (ei + ej >= n_terms) break;
            f6[static_cast<size_t>(ei + ej)] += static_cast<long long>(ci) * cj;
        }
    std::vector<long long> f12(n, 0);
    for (size_t m = 0; m < n; ++m) {
        __int128 acc = 0;
        for (size_t i = 0; i <= m; ++i) acc += static_cast<__int128>(f6[i]) * f6[m - i];
        f12[m] = static_cast<long long>(acc);  // weight-6 growth, fits 64 bits
    }
    std::vector<Integer> tau(n);
    for (size_t m = 0; m < n; ++m) {
        __int128 acc = 0;
        for (size_t i = 0; i <= m; ++i) acc += static_cast<__int128>(f12[i]) * f12[m - i];
        bool neg = acc < 0;
        unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-acc)
                                    : static_cast<unsigned __int128>(acc);
        uint64_t limbs[2] = {static_cast<uint64_t>(mag), static_cast<uint64_t>(mag >> 64)};
        Integer t;
        mpz_import(t.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
        tau[m] = neg ? Integer(-t) : t;
    }
    // tau is indexed so tau[m] = tau(m+1); re-pack as a(1..n_terms).
    return tau;
}

QExpansion delta_qexp(long precision) {
    if (precision <= 4096) {
        QExpansion e4 = eisenstein(4, precision);
        QExpansion e6 = eisenstein(6, precision);
        QExpansion num = pow_series(e4, 3) - pow_series(e6, 2).with_weight(12);
        return (num / Rational(1728)).with_weight(12);
    }
    std::vector<Integer> tau = tau_coefficients(precision - 1);
    std::vector<Rational> c(static_cast<size_t>(precision), Rational(0));
    for (long m = 1; m < precision; ++m) c[static_cast<size_t>(m)] = Rational(tau[static_cast<size_t>(m - 1)]);
    return QExpansion(12, 1, std::move(c));
}

QExpansion g20_qexp(long precision) {
    return (delta_qexp(precision) * eisenstein(8, precision)).with_weight(20);
}

QExpansion v_operator(const QExpansion &f, long m) {
    if (m < 1) throw std::invalid_argument("v_operator: m >= 1");
    std::vector<Rational> c(static_cast<size_t>(f.precision() * m), Rational(0));
    for (long n = 0; n < f.precision(); ++n) c[static_cast<size_t>(m * n)] = f.a(n);
    return QExpansion(f.weight(), f.level() * m, std::move(c));
}

QExpansion u_operator(const QExpansion &f, long m) {
    if (m < 1) throw std::invalid_argument("u_operator: m >= 1");
    long prec = (f.precision() + m - 1) / m;
    if (prec < 1) throw std::out_of_range("u_operator: precision exhausted");
    std::vector<Rational> c(static_cast<size_t>(prec));
    for (long n = 0; n < prec; ++n) c[static_cast<size_t>(n)] = f.a(m * n);
    return QExpansion(f.weight(), f.level(), std::move(c));
}

QExpansion hecke_tp(const QExpansion &f, long p) {
    if (f.level() != 1) throw std::invalid_argument("hecke_tp: level 1 only");
    long prec = f.precision() / p;
    if (prec < 2) throw std::out_of_range("hecke_tp: precision exhausted");
    Rational pk = Rational(pow_integer(Integer(p), static_cast<unsigned long>(f.weight() - 1)));
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    for (long n = 0; n < prec; ++n) {
        c[static_cast<size_t>(n)] = f.a(p * n);
        if (n % p == 0) c[static_cast<size_t>(n)] += pk * f.a(n / p);
    }
    return QExpansion(f.weight(), 1, std::move(c));
}

DirichletCoefficients multiplicative_extend(
    const std::vector<std::pair<long, Rational>> &prime_values, long weight, long n_terms) {
    std::vector<long> spf = smallest_prime_factor(n_terms);
    std::vector<Rational> prime_at(static_cast<size_t>(n_terms) + 1, Rational(0));
    for (const auto &[p, ap] : prime_values)
        if (p <= n_terms) prime_at[static_cast<size_t>(p)] = ap;

    std::vector<Rational> a(static_cast<size_t>(n_terms) + 1, Rational(0));
    a[1] = 1;
    for (long n = 2; n <= n_terms; ++n) {
        long p = spf[static_cast<size_t>(n)];
        long m = n, r = 0;
        while (m % p == 0) {
            m /= p;
            ++r;
        }
        if (m > 1) {
            a[static_cast<size_t>(n)] = a[static_cast<size_t>(m)] * a[static_cast<size_t>(n / m)];
            continue;
        }
        // n = p^r
        if (r == 1) {
            a[static_cast<size_t>(n)] = prime_at[static_cast<size_t>(p)];
        } else {
            Rational pk(pow_integer(Integer(p), static_cast<unsigned long>(weight - 1)));
            a[static_cast<size_t>(n)] =
                prime_at[static_cast<size_t>(p)] * a[static_cast<size_t>(n / p)] -
                pk * a[static_cast<size_t>(n / p / p)];
        }
    }
    DirichletCoefficients d;
    d.values.assign(a.begin() + 1, a.end());
    return d;
}

}  // namespace f12
