#pragma once

// Final exact values: the symmetric-square column with its functional-
// equation transport, the weight-20 product column, the main table, and
// the three functional-equation diagnostics.

#include "f12/factor.hpp"
#include "f12/numeric.hpp"
#include "f12/pi_monomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace f12 {

struct CriticalRow {
    long s{0};
    PiMonomial exact;        // units <delta,delta> <g20,g20>
    Factorization factored;  // of exact.coeff
    long pi_power{0};
    long double numeric{0.0L};  // exact * pi-power * numeric norms
    std::vector<std::string> flags;
};

// L(s+11, delta x delta) in units <delta,delta>: right-edge rows are the
// classical fixtures, left-edge rows their exact D* transport.
PiMonomial sym_square_value(long s);

// The five trusted right-edge fixtures, keyed by argument in {12,...,20}.
PiMonomial sym_square_fixture(long argument);

// L(s+10, g20) L(s+9, g20) in units <g20, g20> through the projection
// pipeline and the trace-operator constant.
PiMonomial g20_pair_value(long s);

// Recomputes the oldform pairing constant 2^-16 * 19 from a(2) of g20;
// throws on mismatch.
Rational trace_constant_check();

// Euler correction 1 - 456*2^(-9-s) + 2^(1-2s); exactly nonzero at the
// ten points.
Rational pair_denominator(long s);

CriticalRow main_table_row(long s);
std::vector<CriticalRow> main_table();

enum class ValueSource { Pipeline, Published };

struct FePairCertificate {
    std::string name;
    long s_left{0};
    long s_right{0};
    bool pi_balanced{false};
    Rational ratio;          // exact; 1 when the pair satisfies the FE
    std::string note;
};

// D*(a) / D*(23-a) over the five symmetric-square pairings.
std::vector<FePairCertificate> sym_square_fe_pairs(ValueSource source);

// Completed weight-20 pairing Lambda(s+10)Lambda(s+9) / Lambda(11-s)Lambda(10-s).
std::vector<FePairCertificate> g20_fe_pairs(ValueSource source);

// Left-edge product values implied by the functional equation applied to
// the right-edge members (exact transport; meaningful wherever the right
// member itself stands up to the series numerics).
std::vector<std::pair<long, PiMonomial>> g20_fe_implied_left(ValueSource source);

// The degree-7 standard functional equation Psi(s) = Psi(1-s) across the
// main table (constant and norms cancel in the ratio).
std::vector<FePairCertificate> standard_fe_pairs(ValueSource source);

// Positivity screen of the columns that must be positive when the
// underlying L-values are (right-edge products of positive completed
// values); returns the s-values of offending rows.
std::vector<long> g20_product_positivity_violations(ValueSource source);

}  // namespace f12
