#include "f12/numeric.hpp"

#include "f12/qexp.hpp"
#include "f12/special_values.hpp"
#include "f12/sym_square_fe.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>

namespace f12 {

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kEps = 5.42101086242752217e-20L;  // long double ulp scale
}  // namespace

NumericValue operator+(const NumericValue &a, const NumericValue &b) {
    NumericValue r{a.value + b.value, a.error + b.error};
    r.error += fabsl(r.value) * kEps;
    return r;
}
NumericValue operator-(const NumericValue &a, const NumericValue &b) {
    NumericValue r{a.value - b.value, a.error + b.error};
    r.error += fabsl(r.value) * kEps;
    return r;
}
NumericValue operator*(const NumericValue &a, const NumericValue &b) {
    NumericValue r{a.value * b.value,
                   fabsl(a.value) * b.error + fabsl(b.value) * a.error + a.error * b.error};
    r.error += fabsl(r.value) * kEps;
    return r;
}
NumericValue operator/(const NumericValue &a, const NumericValue &b) {
    long double denom = fabsl(b.value) - b.error;
    if (denom <= 0.0L) throw std::domain_error("NumericValue: division by possibly-zero");
    NumericValue r{a.value / b.value,
                   (a.error + fabsl(a.value / b.value) * b.error) / denom};
    r.error += fabsl(r.value) * kEps;
    return r;
}

bool NumericValue::consistent_with(long double x, long double rel_slack) const {
    long double tol = error + rel_slack * fabsl(x);
    return fabsl(value - x) <= tol;
}

long double zeta_numeric(long n) {
    if (n < 2) throw std::invalid_argument("zeta_numeric: n >= 2");
    if (n % 2 == 0) return zeta_exact(n).value_ld();
    // Euler-Maclaurin with N = 64 and eight correction terms.
    const long N = 64;
    long double s = static_cast<long double>(n);
    long double acc = 0.0L;
    for (long m = N - 1; m >= 1; --m) acc += powl(static_cast<long double>(m), -s);
    acc += 0.5L * powl(static_cast<long double>(N), -s);
    acc += powl(static_cast<long double>(N), 1.0L - s) / (s - 1.0L);
    long double rising = s;  // (s)(s+1)...(s+2j-2)
    for (int j = 1; j <= 8; ++j) {
        long double b2j = to_long_double(bernoulli(static_cast<unsigned>(2 * j)));
        long double fact = 1.0L;
        for (int i = 2; i <= 2 * j; ++i) fact *= i;
        acc += b2j / fact * rising * powl(static_cast<long double>(N), -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    return acc;
}

namespace {

// Gamma(s, y) = (s-1)! e^-y sum_{j<s} y^j / j! for integer s >= 1.
long double incomplete_gamma_int(long s, long double y) {
    long double sum = 0.0L, term = 1.0L, fact = 1.0L;
    for (long j = 0; j < s; ++j) {
        if (j > 0) {
            term *= y / static_cast<long double>(j);
            fact *= static_cast<long double>(j);
        }
        sum += term;
    }
    return fact * expl(-y) * sum;
}

struct FormData {
    long weight;
    std::vector<long double> coeffs;  // a(1).. as long double, exact upstream
};

const FormData &form_data(Level1Form f) {
    static std::mutex mu;
    static std::map<Level1Form, FormData> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    const long n_terms = 96;
    FormData d;
    QExpansion q = (f == Level1Form::Delta) ? delta_qexp(n_terms + 1) : g20_qexp(n_terms + 1);
    d.weight = q.weight();
    d.coeffs.resize(static_cast<size_t>(n_terms));
    for (long n = 1; n <= n_terms; ++n)
        d.coeffs[static_cast<size_t>(n - 1)] = to_long_double(q.a(n));
    return cache.emplace(f, std::move(d)).first->second;
}

}  // namespace

NumericValue l_value_level1(Level1Form f, long w) {
    const FormData &d = form_data(f);
    const long k = d.weight;
    if (w < 1 || w > k - 1) throw std::invalid_argument("l_value_level1: w in [1, k-1]");
    long double lambda = 0.0L, absacc = 0.0L;
    size_t used = 0;
    for (size_t i = 0; i < d.coeffs.size(); ++i) {
        long double n = static_cast<long double>(i + 1);
        long double y = 2.0L * kPi * n;
        long double t = d.coeffs[i] * (powl(y, static_cast<long double>(-w)) *
                                           incomplete_gamma_int(w, y) +
                                       powl(y, static_cast<long double>(w - k)) *
                                           incomplete_gamma_int(k - w, y));
        lambda += t;
        absacc += fabsl(t);
        used = i + 1;
        if (i > 4 && fabsl(t) < fabsl(lambda) * 1e-26L) break;
    }
    // Tail: |a(n)| <= sqrt(3) n^(k/2), Gamma(s,y) <= 2 y^(s-1) e^-y here.
    long double N = static_cast<long double>(used);
    long double tail = 2.0L * (4.0L * 1.7320508L / (2.0L * kPi)) *
                       powl(N + 1.0L, static_cast<long double>(k) / 2.0L - 1.0L) *
                       expl(-2.0L * kPi * (N + 1.0L));
    NumericValue lam{lambda, tail + absacc * 8.0L * kEps};
    long double fact = 1.0L;
    for (long j = 2; j <= w - 1; ++j) fact *= static_cast<long double>(j);
    long double scale = powl(2.0L * kPi, static_cast<long double>(w)) / fact;
    return NumericValue{lam.value * scale, lam.error * scale};
}

NumericValue petersson_norm(long k, long l) {
    if (!((k == 12 && l == 8) || (k == 20 && (l == 12 || l == 14 || l == 16))))
        throw std::invalid_argument("petersson_norm: (k,l) outside 4 <= k-l <= k/2-2 with l+r=k");
    auto alpha = [](long m) -> Rational {
        return Rational(-2 * m) / bernoulli(static_cast<unsigned>(m));
    };
    Rational ar = alpha(k - l), al = alpha(l), ak = alpha(k);
    Rational ratio = ar / (al + ar - ak);
    Level1Form f = (k == 12) ? Level1Form::Delta : Level1Form::G20;
    NumericValue lk = l_value_level1(f, k - 1);
    NumericValue ll = l_value_level1(f, l);
    long double front = powl(4.0L * kPi, static_cast<long double>(1 - k));
    long double fact = 1.0L;
    for (long j = 2; j <= k - 2; ++j) fact *= static_cast<long double>(j);
    long double zl = zeta_exact(l).value_ld();
    NumericValue c{front * fact / zl * to_long_double(ratio), 0.0L};
    c.error = fabsl(c.value) * 32.0L * kEps;
    return c * lk * ll;
}

const std::vector<long double> &tau_table(long n_terms) {
    static std::mutex mu;
    static std::vector<long double> table;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<long>(table.size()) < n_terms) {
        std::vector<Integer> tau = tau_coefficients(n_terms);
        table.resize(static_cast<size_t>(n_terms));
        for (size_t i = 0; i < tau.size(); ++i) table[i] = to_long_double(Rational(tau[i]));
    }
    return table;
}

NumericValue sym_square_numeric(long argument, long n_terms) {
    if (argument < 14 || argument > 20)
        throw std::invalid_argument("sym_square_numeric: argument in [14, 20]");
    const long k = 12;
    const long N = n_terms > 0 ? n_terms : (argument == 14) ? 100000 : 10000;
    const auto &tau = tau_table(N);
    long double sum = 0.0L;
    long double monitor = 0.0L;  // max tau(n)^2 / n^11.5
    for (long n = N; n >= 1; --n) {
        long double t2 = tau[static_cast<size_t>(n - 1)] * tau[static_cast<size_t>(n - 1)];
        sum += t2 * powl(static_cast<long double>(n), static_cast<long double>(-argument));
        monitor = std::max(monitor, t2 * powl(static_cast<long double>(n), -11.5L));
    }
    long double tail = 4.0L * monitor *
                       powl(static_cast<long double>(N), 12.5L - static_cast<long double>(argument)) /
                       (static_cast<long double>(argument) - 12.5L);
    long double pre = zeta_exact(2 * argument + 2 - 2 * k).value_ld() /
                      zeta_numeric(argument + 1 - k);
    NumericValue r{pre * sum, fabsl(pre) * (tail + fabsl(sum) * static_cast<long double>(N) * kEps)};
    r.error += fabsl(r.value) * 8.0L * kEps;
    return r;
}

MainProduct main_numeric_product(long s, const PiMonomial &sym2_exact_edge) {
    MainProduct out;
    NumericValue g_part = l_value_level1(Level1Form::G20, s + 10) *
                          l_value_level1(Level1Form::G20, s + 9);
    long v = s + 11;
    NumericValue sym2;
    if (v >= 14) {
        sym2 = sym_square_numeric(v);
    } else if (v <= 9) {
        NumericValue right = sym_square_numeric(23 - v);
        long double factor = sym_square_reflection_factor(v).value_ld();
        sym2 = NumericValue{right.value * factor, right.error * fabsl(factor)};
        sym2.error += fabsl(sym2.value) * 4.0L * kEps;
    } else {
        // v in {11, 12}: no convergent series on either side of the
        // reflection; fall back to the supplied exact value times the norm.
        if (sym2_exact_edge.is_zero())
            throw std::invalid_argument(
                "main_numeric_product: s in {0,1} needs the exact edge value");
        NumericValue norm = petersson_norm(12, 8);
        long double exact = sym2_exact_edge.value_ld();
        sym2 = NumericValue{exact * norm.value, fabsl(exact) * norm.error};
        sym2.error += fabsl(sym2.value) * 4.0L * kEps;
        out.sym2_from_fixture = true;
    }
    out.value = sym2 * g_part;
    return out;
}

bool lemma1_convolution_check(unsigned seed) {
    const long n_max = 200;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(-3, 3);

    std::vector<long> primes;
    for (long p = 2; p <= n_max; ++p) {
        bool is_p = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                is_p = false;
                break;
            }
        if (is_p) primes.push_back(p);
    }

    // h_r from (trace, norm): h_{r+1} = t h_r - n h_{r-1}.
    auto prime_powers = [n_max](const Rational &t, const Rational &nm) {
        std::vector<Rational> h = {Rational(1), t};
        while (true) {
            // need powers while p^r <= n_max; caller slices what it needs
            if (h.size() > 9) break;  // 2^8 = 256 > 200
            h.push_back(t * h[h.size() - 1] - nm * h[h.size() - 2]);
        }
        return h;
    };

    std::vector<Rational> rhs(static_cast<size_t>(n_max) + 1, Rational(0));
    std::vector<Rational> A(rhs), B(rhs);
    A[1] = B[1] = rhs[1] = 1;

    struct PrimeData {
        long p;
        std::vector<Rational> ha, hb, euler;
    };
    std::vector<PrimeData> data;
    for (long p : primes) {
        Rational alpha(pick(rng)), alpha_p(pick(rng));
        Rational beta(pick(rng)), beta_p(pick(rng));
        Rational ta = alpha + alpha_p, na = alpha * alpha_p;
        Rational tb = beta + beta_p, nb = beta * beta_p;
        PrimeData d;
        d.p = p;
        d.ha = prime_powers(ta, na);
        d.hb = prime_powers(tb, nb);
        // Quartic with the four products as roots, in symmetric functions:
        Rational q1 = ta * tb;
        Rational q2 = na * (tb * tb - 2 * nb) + ta * ta * nb;
        Rational q3 = na * nb * ta * tb;
        Rational q4 = na * na * nb * nb;
        // Series of (1 - na nb x^2) / Q(x):
        std::vector<Rational> inv(9, Rational(0));
        inv[0] = 1;
        for (size_t j = 1; j < inv.size(); ++j) {
            Rational acc(0);
            acc += q1 * inv[j - 1];
            if (j >= 2) acc -= q2 * inv[j - 2];
            if (j >= 3) acc += q3 * inv[j - 3];
            if (j >= 4) acc -= q4 * inv[j - 4];
            inv[j] = acc;
        }
        d.euler.assign(9, Rational(0));
        for (size_t j = 0; j < 9; ++j) {
            d.euler[j] = inv[j];
            if (j >= 2) d.euler[j] -= na * nb * inv[j - 2];
        }
        data.push_back(std::move(d));
    }

    // Multiplicative fill of A, B and convolution of the Euler series.
    for (long n = 2; n <= n_max; ++n) {
        long m = n, p = 0;
        for (const auto &d : data)
            if (m % d.p == 0) {
                p = d.p;
                break;
            }
        long pr = 1;
        int r = 0;
        while (m % p == 0) {
            m /= p;
            pr *= p;
            ++r;
        }
        const PrimeData *pd = nullptr;
        for (const auto &d : data)
            if (d.p == p) pd = &d;
        A[static_cast<size_t>(n)] = A[static_cast<size_t>(m)] * pd->ha[static_cast<size_t>(r)];
        B[static_cast<size_t>(n)] = B[static_cast<size_t>(m)] * pd->hb[static_cast<size_t>(r)];
        rhs[static_cast<size_t>(n)] = rhs[static_cast<size_t>(m)] * pd->euler[static_cast<size_t>(r)];
    }
    for (long n = 1; n <= n_max; ++n)
        if (A[static_cast<size_t>(n)] * B[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)])
            return false;
    return true;
}

NumericValue rankin_identity_residual() {
    const long N = 512;
    QExpansion g = g20_qexp(N + 1);
    QExpansion g22 = g2_level(2, N + 1);
    long double sum = 0.0L;
    for (long n = N; n >= 1; --n)
        sum += to_long_double(g.a(n)) * to_long_double(g22.a(n)) *
               powl(static_cast<long double>(n), -19.0L);
    // |a(n) b(n)| <= sqrt(3) n^10.5 * 2n; tail of n^(-7.3)-ish series.
    long double tail = 4.0L * powl(static_cast<long double>(N), -6.5L) / 6.5L;
    long double l2_factor = (1.0L - powl(2.0L, -18.0L)) * zeta_exact(18).value_ld();
    NumericValue lhs{l2_factor * sum, l2_factor * (tail + fabsl(sum) * 1024.0L * kEps)};

    NumericValue l19 = l_value_level1(Level1Form::G20, 19);
    NumericValue l18 = l_value_level1(Level1Form::G20, 18);
    long double euler2 = 1.0L - 456.0L * powl(2.0L, -18.0L) + powl(2.0L, -17.0L);
    NumericValue rhs = NumericValue{euler2, fabsl(euler2) * kEps} * l19 * l18;
    NumericValue diff = lhs - rhs;
    return NumericValue{diff.value / rhs.value, (diff.error + fabsl(diff.value / rhs.value) * rhs.error) / fabsl(rhs.value)};
}

}  // namespace f12
