#include "f12/level2.hpp"

#include <stdexcept>

namespace f12 {

namespace {

// Coordinates of f in the span of basis, matched on q^1..q^4.
std::vector<Rational> coordinates(const std::vector<QExpansion> &basis, const QExpansion &f) {
    size_t n = basis.size();
    RatMatrix m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (size_t row = 0; row < n; ++row) {
        for (size_t i = 0; i < n; ++i) m[row][i] = basis[i].a(static_cast<long>(row) + 1);
        rhs[row] = f.a(static_cast<long>(row) + 1);
    }
    return solve_linear(std::move(m), std::move(rhs));
}

}  // namespace

std::vector<QExpansion> spanning_set(long precision) {
    if (precision < 16) throw std::invalid_argument("spanning_set: precision >= 16");
    long p = precision;
    QExpansion f = eta_euler_product(p);
    QExpansion f2 = v_operator(f, 2).truncated(p);
    // (eta(z) eta(2z))^8 = q * (F(q) F(q^2))^8, weight 8 on level 2
    QExpansion core = q_shift(pow_series(f * f2, 8), 1).truncated(p).with_weight(8).with_level(2);

    QExpansion e4 = eisenstein(4, p);
    QExpansion e43 = pow_series(e4, 3);
    QExpansion e43_2 = pow_series(v_operator(e4, 2).truncated(p), 3);
    QExpansion delta = delta_qexp(p);
    QExpansion delta2 = v_operator(delta, 2).truncated(p);

    std::vector<QExpansion> out = {
        (core * e43).with_weight(20),
        (core * e43_2).with_weight(20),
        (core * delta).with_weight(20),
        (core * delta2).with_weight(20),
    };
    RatMatrix lead(4, std::vector<Rational>(8));
    for (size_t i = 0; i < 4; ++i)
        for (long n = 1; n <= 8; ++n) lead[i][static_cast<size_t>(n - 1)] = out[i].a(n);
    if (matrix_rank(lead) != 4)
        throw std::domain_error("spanning_set: rank deficient (expected dimension 4)");
    for (const auto &g : out)
        if (g.a(0) != 0) throw std::domain_error("spanning_set: nonzero constant term");
    return out;
}

std::pair<QExpansion, QExpansion> newforms(long precision) {
    if (precision < 8) throw std::invalid_argument("newforms: precision >= 8");
    long p = std::max<long>(2 * precision + 2, 24);
    std::vector<QExpansion> basis = spanning_set(p);

    // U2 in basis coordinates, columns = images.
    RatMatrix u(4, std::vector<Rational>(4));
    for (size_t i = 0; i < 4; ++i) {
        std::vector<Rational> c = coordinates(basis, u_operator(basis[i], 2));
        for (size_t row = 0; row < 4; ++row) u[row][i] = c[row];
    }

    auto eigenform = [&](long eigenvalue) {
        RatMatrix shifted = u;
        for (size_t i = 0; i < 4; ++i) shifted[i][i] -= Rational(eigenvalue);
        auto ns = null_space(shifted);
        if (ns.size() != 1)
            throw std::domain_error("newforms: eigenspace dimension " + std::to_string(ns.size()) +
                                    " for " + std::to_string(eigenvalue));
        std::vector<Rational> w = ns[0];
        std::vector<Rational> coeffs(static_cast<size_t>(precision), Rational(0));
        for (long n = 0; n < precision; ++n)
            for (size_t i = 0; i < 4; ++i) coeffs[static_cast<size_t>(n)] += w[i] * basis[i].a(n);
        QExpansion h(20, 2, std::move(coeffs));
        if (h.a(1) == 0) throw std::domain_error("newforms: vanishing first coefficient");
        return ((1 / h.a(1)) * h).with_level(2);
    };
    return {eigenform(-512), eigenform(512)};
}

const FormBasis &level2_basis() {
    static const FormBasis basis = [] {
        FormBasis b;
        long p = 32;
        QExpansion g20 = g20_qexp(p);
        auto [h1, h2] = newforms(p);
        b.forms = {g20.with_level(2), v_operator(g20, 2).truncated(p), h1, h2};
        b.labels = {"g20(z)", "g20(2z)", "h1", "h2"};
        b.coefficient_matrix.assign(4, std::vector<Rational>(4));
        for (long n = 1; n <= 4; ++n)
            for (size_t i = 0; i < 4; ++i)
                b.coefficient_matrix[static_cast<size_t>(n - 1)][i] = b.forms[i].a(n);
        b.coefficient_inverse = invert_matrix(b.coefficient_matrix);
        return b;
    }();
    return basis;
}

std::array<PiMonomial, 4> solve_projection_coefficients(const std::array<PiMonomial, 4> &a) {
    long half_exp = 0;
    bool seen = false;
    for (const auto &v : a) {
        if (v.is_zero()) continue;
        if (!seen) {
            half_exp = v.half_exp;
            seen = true;
        } else if (v.half_exp != half_exp) {
            throw std::domain_error("solve_projection_coefficients: mixed pi exponents");
        }
    }
    const FormBasis &basis = level2_basis();
    std::vector<Rational> rhs(4);
    for (size_t i = 0; i < 4; ++i) rhs[i] = a[i].coeff;
    std::vector<Rational> k = solve_linear(basis.coefficient_matrix, rhs);
    std::array<PiMonomial, 4> out;
    for (size_t i = 0; i < 4; ++i) out[i] = PiMonomial(k[i], half_exp);
    return out;
}

}  // namespace f12
