#pragma once

// Prime factorization of exact rationals for the factored table renderings.

#include "f12/rational.hpp"

#include <utility>
#include <vector>

namespace f12 {

struct Factorization {
    int sign{1};                                 // +1 or -1
    std::vector<std::pair<Integer, long>> factors;  // (prime, signed exponent), primes ascending

    Rational to_rational() const;
    std::string str() const;  // e.g. "2^3 * 3 * 19" or "-2^31 * 17 / (3 * 5^2)"
};

// Trial division to 10^6, then Pollard-Brent rho with Miller-Rabin
// certification. Terminates for anything with factors reachable by rho;
// table entries are smooth or have few moderate primes.
Factorization factor_rational(const Rational &q);

bool is_probable_prime(const Integer &n);

}  // namespace f12
