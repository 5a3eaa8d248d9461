#include "f12/assemble.hpp"

#include "f12/holproj.hpp"
#include "f12/qexp.hpp"
#include "f12/reference_tables.hpp"
#include "f12/special_values.hpp"
#include "f12/sym_square_fe.hpp"

#include <stdexcept>

namespace f12 {

namespace {

PiMonomial parse_pi_value(const reference::PiValue &v) {
    return PiMonomial(rational_from_string(v.rational), 2 * v.pi_power);
}

PiMonomial published_sym_square(long s) {
    return parse_pi_value(reference::sym_square_rows[static_cast<size_t>(reference::point_index(s))]);
}

PiMonomial published_g20_product(long s) {
    return parse_pi_value(reference::g20_product_rows[static_cast<size_t>(reference::point_index(s))]);
}

PiMonomial published_main(long s) {
    const auto &row = reference::main_rows[static_cast<size_t>(reference::point_index(s))];
    return PiMonomial(reference::main_row_rational(row), 2 * row.pi_power);
}

}  // namespace

PiMonomial sym_square_fixture(long argument) {
    // Classical right-edge values, arguments 12, 14, 16, 18, 20.
    switch (argument) {
        case 12: return PiMonomial(pow2_rational(23) / Rational(factorial(11)), 2 * 13);
        case 14: return PiMonomial(pow2_rational(28) / Rational(factorial(14)), 2 * 17);
        case 16: return PiMonomial(pow2_rational(31) / (3 * Rational(factorial(16))), 2 * 21);
        case 18: return PiMonomial(pow2_rational(35) / (15 * Rational(factorial(18))), 2 * 25);
        case 20: return PiMonomial(pow2_rational(41) / (245 * Rational(factorial(20))), 2 * 29);
        default: throw std::invalid_argument("sym_square_fixture: argument in {12,...,20} even");
    }
}

PiMonomial sym_square_value(long s) {
    reference::point_index(s);  // validates
    long a = s + 11;
    if (a >= 12) return sym_square_fixture(a);
    return sym_square_reflection_factor(a) * sym_square_fixture(23 - a);
}

Rational pair_denominator(long s) {
    Rational d = 1 - 456 * pow2_rational(-9 - s) + pow2_rational(1 - 2 * s);
    if (d == 0) throw std::domain_error("pair_denominator: vanishing Euler correction");
    return d;
}

PiMonomial g20_pair_value(long s) {
    ProjectionContext ctx(s);
    std::array<PiMonomial, 4> k = k_coefficients(ctx);
    PiMonomial paired = k[0] + trace_constant_check() * k[1];
    PiMonomial front(Rational(3) * pow2_rational(38) / 2 /
                         Rational(factorial(static_cast<unsigned long>(s + 9))),
                     2 * 19);  // (3/2) (4 pi)^19 / Gamma(s+10)
    return front * paired / pair_denominator(s);
}

Rational trace_constant_check() {
    // <g20(z), g20(2z)> = 2^(-k/2) 3^-1 2^(1-k/2) a(2) <g20, g20>
    const long k = 20;
    Rational a2 = g20_qexp(4).a(2);
    Rational c = pow2_rational(-k / 2) * pow2_rational(1 - k / 2) / 3 * a2;
    if (c != make_rational(19, 65536))
        throw std::domain_error("trace_constant_check: expected 19/2^16, got " + to_string(c));
    return c;
}

CriticalRow main_table_row(long s) {
    CriticalRow row;
    row.s = s;
    row.exact = sym_square_value(s) * g20_pair_value(s);
    row.pi_power = row.exact.pi_power();
    row.factored = factor_rational(row.exact.coeff);
    NumericValue delta_norm = petersson_norm(12, 8);
    NumericValue g20_norm = petersson_norm(20, 12);
    row.numeric = row.exact.value_ld() * delta_norm.value * g20_norm.value;

    const auto &published = reference::main_rows[static_cast<size_t>(reference::point_index(s))];
    PiMonomial pub = published_main(s);
    if (pub == row.exact) {
        row.flags.push_back("matches-published");
    } else {
        row.flags.push_back("differs-from-published");
        row.flags.push_back("published=" + pub.str());
    }
    if (2 * published.pi_power != row.exact.half_exp) row.flags.push_back("pi-power-differs");
    return row;
}

std::vector<CriticalRow> main_table() {
    std::vector<CriticalRow> rows;
    for (long s : kCriticalPoints) rows.push_back(main_table_row(s));
    return rows;
}

std::vector<FePairCertificate> sym_square_fe_pairs(ValueSource source) {
    std::vector<FePairCertificate> out;
    for (long s : {-8, -6, -4, -2, 0}) {
        long a = s + 11;         // left argument, pairs with 23 - a
        long s_right = 12 - a;   // point carrying argument 23 - a
        FePairCertificate cert;
        cert.name = "sym2-D*(" + std::to_string(a) + ")=D*(" + std::to_string(23 - a) + ")";
        cert.s_left = s;
        cert.s_right = s_right;
        PiMonomial left = source == ValueSource::Pipeline ? sym_square_value(s)
                                                          : published_sym_square(s);
        PiMonomial right = source == ValueSource::Pipeline ? sym_square_value(s_right)
                                                           : published_sym_square(s_right);
        PiMonomial ratio = (sym_square_gamma_factor(a) * left) /
                           (sym_square_gamma_factor(23 - a) * right);
        cert.pi_balanced = ratio.half_exp == 0;
        cert.ratio = cert.pi_balanced ? ratio.coeff : Rational(0);
        if (!cert.pi_balanced) cert.note = "pi exponents unbalanced: " + ratio.str();
        out.push_back(std::move(cert));
    }
    return out;
}

namespace {

// Lambda(w) = (2 pi)^-w Gamma(w) L(w) gamma-side for integer w.
PiMonomial completed_weight20_gamma(long w) {
    return PiMonomial(pow2_rational(-w) * Rational(factorial(static_cast<unsigned long>(w - 1))),
                      -2 * w);
}

}  // namespace

std::vector<FePairCertificate> g20_fe_pairs(ValueSource source) {
    std::vector<FePairCertificate> out;
    for (long s : {-8, -6, -4, -2, 0}) {
        long t = 1 - s;
        FePairCertificate cert;
        cert.name = "g20-Lambda(" + std::to_string(s + 10) + ")Lambda(" + std::to_string(s + 9) +
                    ")=Lambda(" + std::to_string(11 - s) + ")Lambda(" + std::to_string(10 - s) + ")";
        cert.s_left = s;
        cert.s_right = t;
        PiMonomial left = source == ValueSource::Pipeline ? g20_pair_value(s)
                                                          : published_g20_product(s);
        PiMonomial right = source == ValueSource::Pipeline ? g20_pair_value(t)
                                                           : published_g20_product(t);
        PiMonomial ratio = (completed_weight20_gamma(s + 10) * completed_weight20_gamma(s + 9) * left) /
                           (completed_weight20_gamma(t + 10) * completed_weight20_gamma(t + 9) * right);
        cert.pi_balanced = ratio.half_exp == 0;
        cert.ratio = cert.pi_balanced ? ratio.coeff : Rational(0);
        if (!cert.pi_balanced) cert.note = "pi exponents unbalanced: " + ratio.str();
        out.push_back(std::move(cert));
    }
    return out;
}

std::vector<std::pair<long, PiMonomial>> g20_fe_implied_left(ValueSource source) {
    std::vector<std::pair<long, PiMonomial>> out;
    for (long s : {-8, -6, -4, -2, 0}) {
        long t = 1 - s;
        PiMonomial right = source == ValueSource::Pipeline ? g20_pair_value(t)
                                                           : published_g20_product(t);
        PiMonomial implied = (completed_weight20_gamma(11 - s) * completed_weight20_gamma(10 - s) /
                              (completed_weight20_gamma(s + 10) * completed_weight20_gamma(s + 9))) *
                             right;
        out.emplace_back(s, implied);
    }
    return out;
}

std::vector<FePairCertificate> standard_fe_pairs(ValueSource source) {
    std::vector<FePairCertificate> out;
    auto gamma_tilde = [](long s) {
        // 2^-3s pi^(-7s/2) Gamma((s+1)/2) Gamma(s+9) Gamma(s+10) Gamma(s+11)
        PiMonomial g(pow2_rational(-3 * s), -7 * s);
        return g * gamma_exact_half(s + 1) * gamma_exact(s + 9) * gamma_exact(s + 10) *
               gamma_exact(s + 11);
    };
    for (long s : {-8, -6, -4, -2, 0}) {
        long t = 1 - s;
        FePairCertificate cert;
        cert.name = "standard-Psi(" + std::to_string(s) + ")=Psi(" + std::to_string(t) + ")";
        cert.s_left = s;
        cert.s_right = t;
        auto value = [&](long point) {
            if (source == ValueSource::Pipeline)
                return sym_square_value(point) * g20_pair_value(point);
            return published_main(point);
        };
        PiMonomial ratio = (gamma_tilde(s) * value(s)) / (gamma_tilde(t) * value(t));
        cert.pi_balanced = ratio.half_exp == 0;
        cert.ratio = cert.pi_balanced ? ratio.coeff : Rational(0);
        if (!cert.pi_balanced) cert.note = "pi exponents unbalanced: " + ratio.str();
        out.push_back(std::move(cert));
    }
    return out;
}

std::vector<long> g20_product_positivity_violations(ValueSource source) {
    // Right-edge completed values are positive term-by-term, and the
    // functional equation keeps every L(w, g20), w in (0, 20), positive;
    // the product column must therefore be positive at every point.
    std::vector<long> bad;
    for (long s : kCriticalPoints) {
        PiMonomial v = source == ValueSource::Pipeline ? g20_pair_value(s)
                                                       : published_g20_product(s);
        if (v.coeff <= 0) bad.push_back(s);
    }
    return bad;
}

}  // namespace f12
