#pragma once

// Independent floating-point evaluation: completed-L values by the
// incomplete-gamma series, Petersson norms by Rankin's theorem, the
// symmetric-square Dirichlet series, and the Euler-product convolution
// identities.

#include "f12/pi_monomial.hpp"
#include "f12/rational.hpp"

#include <vector>

namespace f12 {

struct NumericValue {
    long double value{0.0L};
    long double error{0.0L};

    friend NumericValue operator+(const NumericValue &a, const NumericValue &b);
    friend NumericValue operator-(const NumericValue &a, const NumericValue &b);
    friend NumericValue operator*(const NumericValue &a, const NumericValue &b);
    friend NumericValue operator/(const NumericValue &a, const NumericValue &b);

    bool consistent_with(long double x, long double rel_slack = 0.0L) const;
};

// Conjugate Satake pair stored by trace and norm; for an eigenform of
// weight k: trace = a(p), norm = p^(k-1).
struct EulerFactorPair {
    Rational trace;
    Rational norm;
};

enum class Level1Form { Delta, G20 };

// zeta(n) numerically for integer n >= 2 (Euler-Maclaurin for odd n).
long double zeta_numeric(long n);

// L(w, f) for integer 1 <= w <= k-1 from the symmetric incomplete-gamma
// series for the completed function (root number +1 for k = 0 mod 4).
NumericValue l_value_level1(Level1Form f, long w);

// Rankin: <f_k, f_k> = (4 pi)^(1-k) (k-2)! / zeta(l) * alpha_r /
// (alpha_l + alpha_r - alpha_k) * L(k-1, f_k) L(l, f_k), with r = k - l.
NumericValue petersson_norm(long k, long l);

// zeta(2s+2-2k)/zeta(s+1-k) * sum tau(n)^2 n^-s for argument in {14,...,20};
// the tail bound is monitored from the computed stream. n_terms = 0 picks
// the default truncation (1e5 at argument 14, 1e4 above).
NumericValue sym_square_numeric(long argument, long n_terms = 0);

// L(s+11, delta x delta) * L(s+10, g20) * L(s+9, g20) assembled from the
// series above (left-edge symmetric-square arguments go through the exact
// reflection). Arguments 11 and 12 (s = 0, 1) are not reachable by the
// convergent series; the caller supplies the exact value used there and the
// result is flagged via sym2_from_fixture.
struct MainProduct {
    NumericValue value;
    bool sym2_from_fixture{false};
};
MainProduct main_numeric_product(long s, const PiMonomial &sym2_exact_edge = PiMonomial());

// One randomized exact check (n <= 200) of the degree-4 convolution
// identity for Dirichlet series built from two conjugate Satake pairs.
bool lemma1_convolution_check(unsigned seed);

// Relative residual of the level-2 Rankin identity at s = 19:
// L_2-factor * sum a(n) b(n) n^-19 against
// (1 - 456*2^(1-s) + 2^(21-2s)) L(19) L(18).
NumericValue rankin_identity_residual();

// Exact tau(1..n) as long doubles (int128-exact upstream), shared by the
// series evaluations.
const std::vector<long double> &tau_table(long n_terms);

}  // namespace f12
