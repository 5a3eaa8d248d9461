#pragma once

// Exact monomials c * pi^(e/2). Half-unit exponents keep sqrt(pi) from
// half-integer gamma values and pi^(-7s/2) gamma factors exact.

#include "f12/rational.hpp"

namespace f12 {

struct PiMonomial {
    Rational coeff{0};
    long half_exp{0};  // value = coeff * pi^(half_exp / 2)

    PiMonomial() = default;
    explicit PiMonomial(Rational c, long half_pi_exponent = 0)
        : coeff(std::move(c)), half_exp(coeff == 0 ? 0 : half_pi_exponent) {}

    static PiMonomial zero() { return PiMonomial(); }
    bool is_zero() const { return coeff == 0; }

    // Full pi powers only (even half exponent).
    bool has_integer_pi_power() const { return half_exp % 2 == 0; }
    long pi_power() const {
        if (!has_integer_pi_power())
            throw std::domain_error("PiMonomial: odd half-exponent has no integer pi power");
        return half_exp / 2;
    }

    friend PiMonomial operator*(const PiMonomial &a, const PiMonomial &b) {
        return PiMonomial(a.coeff * b.coeff, a.half_exp + b.half_exp);
    }
    friend PiMonomial operator/(const PiMonomial &a, const PiMonomial &b) {
        if (b.is_zero()) throw std::domain_error("PiMonomial: division by zero");
        return PiMonomial(a.coeff / b.coeff, a.half_exp - b.half_exp);
    }
    friend PiMonomial operator+(const PiMonomial &a, const PiMonomial &b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.half_exp != b.half_exp)
            throw std::domain_error("PiMonomial: addition with mismatched pi exponents");
        return PiMonomial(a.coeff + b.coeff, a.half_exp);
    }
    friend PiMonomial operator-(const PiMonomial &a, const PiMonomial &b) {
        return a + PiMonomial(-b.coeff, b.half_exp);
    }
    PiMonomial operator-() const { return PiMonomial(-coeff, half_exp); }

    friend PiMonomial operator*(const PiMonomial &a, const Rational &r) {
        return PiMonomial(a.coeff * r, a.half_exp);
    }
    friend PiMonomial operator*(const Rational &r, const PiMonomial &a) { return a * r; }
    friend PiMonomial operator/(const PiMonomial &a, const Rational &r) {
        if (r == 0) throw std::domain_error("PiMonomial: division by zero rational");
        return PiMonomial(a.coeff / r, a.half_exp);
    }

    // Zeros compare equal regardless of stored exponent (normalized anyway).
    friend bool operator==(const PiMonomial &a, const PiMonomial &b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.coeff == b.coeff && a.half_exp == b.half_exp;
    }
    friend bool operator!=(const PiMonomial &a, const PiMonomial &b) { return !(a == b); }

    std::string str() const;

    // Numeric evaluation with pi in long double.
    long double value_ld() const;
};

PiMonomial pow(const PiMonomial &base, long e);

}  // namespace f12
