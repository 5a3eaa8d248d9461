#pragma once

// Truncated q-expansions over exact rationals, the classical level-1 forms,
// the G2 family, and Hecke / U / V operators.

#include "f12/rational.hpp"

#include <vector>

namespace f12 {

class QExpansion {
  public:
    QExpansion() = default;
    QExpansion(long weight, long level, std::vector<Rational> coeffs)
        : weight_(weight), level_(level), coeffs_(std::move(coeffs)) {}

    long weight() const { return weight_; }
    long level() const { return level_; }
    long precision() const { return static_cast<long>(coeffs_.size()); }

    // Coefficient of q^n; reading past the stored precision throws rather
    // than zero-fills (silent truncation corrupts Hecke checks).
    const Rational &a(long n) const {
        if (n < 0 || n >= precision())
            throw std::out_of_range("QExpansion: precision exhausted at q^" +
                                    std::to_string(n));
        return coeffs_[static_cast<size_t>(n)];
    }

    const std::vector<Rational> &coeffs() const { return coeffs_; }

    QExpansion truncated(long new_precision) const;
    QExpansion with_weight(long w) const { return QExpansion(w, level_, coeffs_); }
    QExpansion with_level(long l) const { return QExpansion(weight_, l, coeffs_); }

    friend QExpansion operator+(const QExpansion &f, const QExpansion &g);
    friend QExpansion operator-(const QExpansion &f, const QExpansion &g);
    friend QExpansion operator*(const QExpansion &f, const QExpansion &g);
    friend QExpansion operator*(const Rational &c, const QExpansion &f);
    friend QExpansion operator/(const QExpansion &f, const Rational &c);

    bool same_series(const QExpansion &g) const { return coeffs_ == g.coeffs_; }

  private:
    long weight_{0};
    long level_{1};
    std::vector<Rational> coeffs_;
};

QExpansion pow_series(const QExpansion &f, unsigned e);

// Multiply by q^shift (pads low coefficients with zeros, keeps precision
// window [0, precision + shift)).
QExpansion q_shift(const QExpansion &f, long shift);

// E_k = 1 + (-2k/B_k) sum sigma_{k-1}(n) q^n, k even >= 4.
QExpansion eisenstein(long k, long precision);

// G_{2,p}(z) = G_2(z) - p G_2(pz): constant term (p-1)/24, a(n) = sum of
// divisors of n prime to p. Weight 2, level p.
QExpansion g2_level(long p, long precision);

// Euler function prod (1 - q^n) by the pentagonal number theorem
// (the eta series with the q^(1/24) factor dropped). Weight tag 0.
QExpansion eta_euler_product(long precision);

// Ramanujan delta, a(1) = 1. Built from (E4^3 - E6^2)/1728 at moderate
// precision; large precisions switch to the integer fast path below.
QExpansion delta_qexp(long precision);

// tau(1..n_terms) through the eta^3 sparse-square pipeline in 128-bit
// integers; exact for n_terms <= ~3e5 (bounds asserted).
std::vector<Integer> tau_coefficients(long n_terms);

// The normalized weight-20 level-1 cusp form delta * E8.
QExpansion g20_qexp(long precision);

// f(z) -> f(mz) and the index-lowering inverse.
QExpansion v_operator(const QExpansion &f, long m);
QExpansion u_operator(const QExpansion &f, long m);

// Classical T_p on level 1: a(n) -> a(pn) + p^(k-1) a(n/p).
QExpansion hecke_tp(const QExpansion &f, long p);

struct DirichletCoefficients {
    std::vector<Rational> values;  // values[n-1] = a(n)

    long length() const { return static_cast<long>(values.size()); }
    const Rational &a(long n) const {
        if (n < 1 || n > length())
            throw std::out_of_range("DirichletCoefficients: index " + std::to_string(n));
        return values[static_cast<size_t>(n - 1)];
    }
};

// Extends eigenform coefficients at primes to all n via
// a(p^(r+1)) = a(p) a(p^r) - p^(k-1) a(p^(r-1)) and multiplicativity.
DirichletCoefficients multiplicative_extend(
    const std::vector<std::pair<long, Rational>> &prime_values, long weight, long n_terms);

}  // namespace f12
