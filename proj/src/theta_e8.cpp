#include "f12/theta_e8.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>

namespace f12 {

namespace {

void enumerate_parity(int target_sum_sq, int parity, std::vector<LatticeVector> &out) {
    // DFS over doubled coordinates of one parity with remaining-norm pruning.
    std::array<int8_t, 8> d{};
    int limit = 0;
    while (limit * limit <= target_sum_sq) ++limit;
    auto rec = [&](auto &&self, int pos, int remaining, int sum) -> void {
        if (pos == 8) {
            if (remaining == 0 && sum % 4 == 0) {
                LatticeVector v;
                v.doubled = d;
                v.sum_sq = target_sum_sq;
                out.push_back(v);
            }
            return;
        }
        int slots = 8 - pos - 1;
        for (int c = -limit; c <= limit; ++c) {
            if (((c % 2) + 2) % 2 != parity) continue;
            int cc = c * c;
            if (cc > remaining) continue;
            // Odd parity needs every remaining slot to carry at least 1.
            if (parity == 1 && remaining - cc < slots) continue;
            d[static_cast<size_t>(pos)] = static_cast<int8_t>(c);
            self(self, pos + 1, remaining - cc, sum + c);
        }
    };
    rec(rec, 0, target_sum_sq, 0);
}

int dot_doubled(const LatticeVector &a, const LatticeVector &b) {
    int s = 0;
    for (int i = 0; i < 8; ++i) s += static_cast<int>(a.doubled[static_cast<size_t>(i)]) *
                                     static_cast<int>(b.doubled[static_cast<size_t>(i)]);
    return s;
}

struct ComplexI128 {
    __int128 re{0}, im{0};
};

// Re(det^8) over the doubled coordinates (so 2^24 times the true weight).
__int128 weight_re_det8(const LatticeVector &v1, const LatticeVector &v2,
                        const LatticeVector &v3) {
    const LatticeVector *v[3] = {&v1, &v2, &v3};
    long long re[3][3], im[3][3];
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            re[i][j] = v[j]->doubled[static_cast<size_t>(i)];
            im[i][j] = v[j]->doubled[static_cast<size_t>(i + 3)];
        }
    auto mul = [](long long ar, long long ai, long long br, long long bi) {
        return std::pair<long long, long long>{ar * br - ai * bi, ar * bi + ai * br};
    };
    // Cofactor expansion along the first row.
    long long dre = 0, dim = 0;
    for (int j = 0; j < 3; ++j) {
        int c1 = (j + 1) % 3, c2 = (j + 2) % 3;
        if (c1 > c2) std::swap(c1, c2);
        auto [m1r, m1i] = mul(re[1][c1], im[1][c1], re[2][c2], im[2][c2]);
        auto [m2r, m2i] = mul(re[1][c2], im[1][c2], re[2][c1], im[2][c1]);
        auto [tr, ti] = mul(re[0][j], im[0][j], m1r - m2r, m1i - m2i);
        if (j == 1) {
            dre -= tr;
            dim -= ti;
        } else {
            dre += tr;
            dim += ti;
        }
    }
    // det^8 by three squarings; the final one needs 128 bits.
    long long r2 = dre * dre - dim * dim, i2 = 2 * dre * dim;
    long long r4 = r2 * r2 - i2 * i2, i4 = 2 * r2 * i2;
    __int128 r8 = static_cast<__int128>(r4) * r4 - static_cast<__int128>(i4) * i4;
    return r8;
}

Integer integer_from_i128(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-x)
                                : static_cast<unsigned __int128>(x);
    uint64_t limbs[2] = {static_cast<uint64_t>(mag), static_cast<uint64_t>(mag >> 64)};
    Integer t;
    mpz_import(t.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
    return neg ? Integer(-t) : t;
}

bool positive_semidefinite(const GramTarget &t) {
    const auto &g = t.gram;
    long d1 = g[0][0];
    long d2 = static_cast<long>(g[0][0]) * g[1][1] - static_cast<long>(g[0][1]) * g[0][1];
    long d3 = 0;
    d3 += static_cast<long>(g[0][0]) * (static_cast<long>(g[1][1]) * g[2][2] -
                                        static_cast<long>(g[1][2]) * g[1][2]);
    d3 -= static_cast<long>(g[0][1]) * (static_cast<long>(g[0][1]) * g[2][2] -
                                        static_cast<long>(g[1][2]) * g[0][2]);
    d3 += static_cast<long>(g[0][2]) * (static_cast<long>(g[0][1]) * g[1][2] -
                                        static_cast<long>(g[1][1]) * g[0][2]);
    return d1 >= 0 && d2 >= 0 && d3 >= 0;
}

}  // namespace

std::vector<LatticeVector> enumerate_vectors(int norm) {
    if (norm <= 0 || norm % 2 != 0) throw std::invalid_argument("enumerate_vectors: even norm > 0");
    if (norm > 8) throw std::invalid_argument("enumerate_vectors: norm capped at 8");
    std::vector<LatticeVector> out;
    enumerate_parity(4 * norm, 0, out);
    enumerate_parity(4 * norm, 1, out);
    return out;
}

Rational spherical_weight(const LatticeVector &v1, const LatticeVector &v2,
                          const LatticeVector &v3) {
    return make_rational(Integer(integer_from_i128(weight_re_det8(v1, v2, v3))),
                         pow_integer(Integer(2), 24));
}

GramTarget minimal_gram_target() {
    GramTarget t;
    t.gram = {{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
    return t;
}

Rational fourier_coefficient(const GramTarget &target, const ThetaOptions &opts) {
    const auto &g = target.gram;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            if (g[i][j] != g[j][i]) throw std::invalid_argument("fourier_coefficient: not symmetric");
        if (g[i][i] % 2 != 0) throw std::invalid_argument("fourier_coefficient: odd diagonal");
        if (g[i][i] <= 0 || g[i][i] > 6)
            throw std::invalid_argument("fourier_coefficient: diagonal norms in {2,4,6}");
    }
    if (!positive_semidefinite(target)) return Rational(0);

    std::vector<LatticeVector> shell1 = enumerate_vectors(g[0][0]);
    std::vector<LatticeVector> shell2 = enumerate_vectors(g[1][1]);
    std::vector<LatticeVector> shell3 = enumerate_vectors(g[2][2]);
    const int want12 = 4 * g[0][1], want13 = 4 * g[0][2], want23 = 4 * g[1][2];

    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.budget_seconds));

    std::vector<Integer> partial(static_cast<size_t>(threads), Integer(0));
    std::vector<std::thread> pool;
    std::atomic<bool> expired{false};

    auto work = [&](int tid) {
        Integer acc(0);
        std::vector<const LatticeVector *> candidates;  // v3 with the right dot to v1
        for (size_t i1 = static_cast<size_t>(tid); i1 < shell1.size();
             i1 += static_cast<size_t>(threads)) {
            const LatticeVector &v1 = shell1[i1];
            if (opts.budget_seconds > 0 && std::chrono::steady_clock::now() > deadline) {
                expired.store(true);
                return;
            }
            candidates.clear();
            for (const auto &w : shell3)
                if (dot_doubled(v1, w) == want13) candidates.push_back(&w);
            if (candidates.empty()) continue;
            __int128 local = 0;
            for (const auto &v2 : shell2) {
                if (dot_doubled(v1, v2) != want12) continue;
                for (const LatticeVector *v3 : candidates) {
                    if (dot_doubled(v2, *v3) != want23) continue;
                    local += weight_re_det8(v1, v2, *v3);
                }
            }
            acc += integer_from_i128(local);
        }
        partial[static_cast<size_t>(tid)] = acc;
    };

    if (threads == 1) {
        work(0);
    } else {
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto &t : pool) t.join();
    }
    if (expired.load()) throw std::runtime_error("fourier_coefficient: time budget exceeded");

    Integer total(0);
    for (const Integer &p : partial) total += p;
    return make_rational(total, pow_integer(Integer(2), 24));
}

}  // namespace f12
