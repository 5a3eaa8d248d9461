#include "f12/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>
#include <map>
#include <stdexcept>

namespace f12 {

namespace {

// Deterministic Miller-Rabin below 3.3e24 with the standard 13-prime base
// set; GMP adds extra rounds for anything larger.
bool miller_rabin_gmp(const Integer &n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer pollard_rho(const Integer &n) {
    // Brent's cycle variant with batched gcds.
    if (n % 2 == 0) return Integer(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xf12f12f12ULL);
    while (true) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer x = y, ys = y, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Integer d = x - y;
                    if (d < 0) d = -d;
                    q = q * d % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                Integer d = x - ys;
                if (d < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // Rare cycle degenerate; retry with new parameters.
    }
}

const std::vector<uint32_t> &small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (uint64_t m = static_cast<uint64_t>(p) * p; m <= limit; m += p)
                composite[static_cast<size_t>(m)] = true;
        }
        return out;
    }();
    return primes;
}

void factor_integer(Integer n, std::map<Integer, long> &out, long exp_sign) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        unsigned long v = mpz_get_ui(n.get_mpz_t());
        for (uint32_t p : small_primes()) {
            if (static_cast<unsigned long>(p) * p > v) break;
            while (v % p == 0) {
                out[Integer(p)] += exp_sign;
                v /= p;
            }
        }
        if (v > 1) {
            Integer rest(v);
            if (miller_rabin_gmp(rest)) {
                out[rest] += exp_sign;
            } else {
                Integer d = pollard_rho(rest);
                factor_integer(d, out, exp_sign);
                factor_integer(rest / d, out, exp_sign);
            }
        }
        return;
    }
    for (uint32_t p : small_primes()) {
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += exp_sign;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return;
    if (miller_rabin_gmp(n)) {
        out[n] += exp_sign;
        return;
    }
    Integer d = pollard_rho(n);
    factor_integer(d, out, exp_sign);
    factor_integer(n / d, out, exp_sign);
}

}  // namespace

Rational Factorization::to_rational() const {
    Rational num(1), den(1);
    for (const auto &[p, e] : factors) {
        if (e >= 0)
            num *= Rational(pow_integer(p, static_cast<unsigned long>(e)));
        else
            den *= Rational(pow_integer(p, static_cast<unsigned long>(-e)));
    }
    Rational r = num / den;
    if (sign < 0) r = -r;
    return r;
}

std::string Factorization::str() const {
    std::string num, den;
    int nnum = 0, nden = 0;
    for (const auto &[p, e] : factors) {
        std::string part = p.get_str();
        long a = e >= 0 ? e : -e;
        if (a != 1) part += "^" + std::to_string(a);
        if (e >= 0) {
            if (!num.empty()) num += " * ";
            num += part;
            ++nnum;
        } else {
            if (!den.empty()) den += " * ";
            den += part;
            ++nden;
        }
    }
    if (num.empty()) num = "1";
    std::string s = (sign < 0 ? "-" : "") + num;
    if (nden > 0) s += " / " + (nden > 1 ? "(" + den + ")" : den);
    return s;
}

Factorization factor_rational(const Rational &q) {
    if (q == 0) throw std::domain_error("factor_rational: zero has no factorization");
    Factorization f;
    f.sign = sgn(q) < 0 ? -1 : 1;
    std::map<Integer, long> exps;
    factor_integer(q.get_num(), exps, +1);
    factor_integer(q.get_den(), exps, -1);
    for (auto &[p, e] : exps)
        if (e != 0) f.factors.emplace_back(p, e);
    return f;
}

bool is_probable_prime(const Integer &n) { return n > 1 && miller_rabin_gmp(n); }

}  // namespace f12
