#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f12/theta_e8.hpp"
#include "f12/reference_tables.hpp"

#include <algorithm>
#include <set>

using namespace f12;
namespace ref = f12::reference;

namespace {

LatticeVector vec(std::initializer_list<int> doubled) {
    LatticeVector v;
    int i = 0, s = 0;
    for (int d : doubled) {
        v.doubled[static_cast<size_t>(i++)] = static_cast<int8_t>(d);
        s += d * d;
    }
    v.sum_sq = s;
    return v;
}

GramTarget target(std::initializer_list<std::initializer_list<int>> rows) {
    GramTarget t;
    int i = 0;
    for (const auto &row : rows) {
        int j = 0;
        for (int x : row) t.gram[static_cast<size_t>(i)][static_cast<size_t>(j++)] = x;
        ++i;
    }
    return t;
}

}  // namespace

TEST_CASE("shell sizes and membership invariants") {
    const int expected[3] = {240, 2160, 6720};
    for (int norm : {2, 4, 6}) {
        auto shell = enumerate_vectors(norm);
        CHECK(static_cast<int>(shell.size()) == expected[norm / 2 - 1]);
        CHECK(shell.size() % 2 == 0);
        std::set<std::array<int8_t, 8>> seen;
        for (const auto &v : shell) {
            CHECK(v.sum_sq == 4 * norm);
            int sum = 0, par = ((v.doubled[0] % 2) + 2) % 2;
            for (int i = 0; i < 8; ++i) {
                CHECK(((v.doubled[static_cast<size_t>(i)] % 2) + 2) % 2 == par);
                sum += v.doubled[static_cast<size_t>(i)];
            }
            CHECK(((sum % 4) + 4) % 4 == 0);
            seen.insert(v.doubled);
        }
        CHECK(seen.size() == shell.size());  // deduplicated
        // closed under negation
        for (const auto &v : shell) {
            std::array<int8_t, 8> neg;
            for (int i = 0; i < 8; ++i) neg[static_cast<size_t>(i)] = static_cast<int8_t>(-v.doubled[static_cast<size_t>(i)]);
            CHECK(seen.count(neg) == 1);
        }
    }
    CHECK_THROWS_AS(enumerate_vectors(10), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_vectors(3), std::invalid_argument);
}

TEST_CASE("spherical weight") {
    LatticeVector v1 = vec({2, 2, 0, 0, 0, 0, 0, 0});
    LatticeVector v2 = vec({2, 0, 2, 0, 0, 0, 0, 0});
    LatticeVector v3 = vec({0, 2, 2, 0, 0, 0, 0, 0});
    // det = -2 on true coordinates, so weight (-2)^8 = 256
    CHECK(spherical_weight(v1, v2, v3) == Rational(256));
    CHECK(spherical_weight(v1, v1, v3) == 0);  // repeated column

    // coordinates 7 and 8 are invisible to the projection
    LatticeVector v3b = vec({0, 2, 2, 0, 0, 0, 2, -2});
    v3b.sum_sq = v3.sum_sq;  // weight only reads coordinates
    CHECK(spherical_weight(v1, v2, v3b) == spherical_weight(v1, v2, v3));
}

TEST_CASE("fourier coefficients of the leading classes") {
    Rational base = fourier_coefficient(minimal_gram_target());
    CHECK(base > 0);
    CHECK(Rational(fourier_coefficient(target({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) / base) == 164);
    CHECK(Rational(fourier_coefficient(target({{6, 0, 1}, {0, 2, 1}, {1, 1, 2}})) / base) == 1328);
    CHECK(Rational(fourier_coefficient(target({{4, 0, 0}, {0, 2, 0}, {0, 0, 2}})) / base) == -1008);
}

TEST_CASE("gram symmetry and degeneracy") {
    // simultaneous permutation of rows/columns relabels the triple
    Rational a = fourier_coefficient(target({{6, 0, 1}, {0, 2, 1}, {1, 1, 2}}));
    Rational b = fourier_coefficient(target({{2, 0, 1}, {0, 6, 1}, {1, 1, 2}}));
    Rational c = fourier_coefficient(target({{2, 1, 1}, {1, 2, 1}, {1, 1, 6}}));
    CHECK(a == b);
    CHECK(a == c);

    // not positive semidefinite: no triples
    CHECK(fourier_coefficient(target({{2, 3, 0}, {3, 2, 0}, {0, 0, 2}})) == 0);

    CHECK_THROWS_AS(fourier_coefficient(target({{2, 1, 0}, {0, 2, 0}, {0, 0, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(fourier_coefficient(target({{3, 0, 0}, {0, 2, 0}, {0, 0, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(fourier_coefficient(target({{8, 0, 0}, {0, 2, 0}, {0, 0, 2}})),
                    std::invalid_argument);
}

TEST_CASE("partitioning does not change the exact sum") {
    GramTarget t = target({{4, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    ThetaOptions one, three;
    one.threads = 1;
    three.threads = 3;
    CHECK(fourier_coefficient(t, one) == fourier_coefficient(t, three));
}

TEST_CASE("time budget is enforced") {
    ThetaOptions opts;
    opts.budget_seconds = 1e-9;
    GramTarget heavy;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) heavy.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i == j) ? 4 : 2;
    CHECK_THROWS_AS(fourier_coefficient(heavy, opts), std::runtime_error);
}
