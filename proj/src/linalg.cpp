#include "f12/linalg.hpp"

#include <stdexcept>

namespace f12 {

namespace {

struct Eliminated {
    std::vector<std::vector<Integer>> rows;  // echelon form, fraction-free
    std::vector<long> pivot_cols;
    long rank{0};
};

// Clears denominators row-wise, then runs Bareiss one-step elimination.
Eliminated bareiss(const RatMatrix &m) {
    Eliminated out;
    if (m.empty()) return out;
    size_t nrows = m.size(), ncols = m[0].size();
    auto &a = out.rows;
    a.assign(nrows, std::vector<Integer>(ncols));
    for (size_t i = 0; i < nrows; ++i) {
        Integer l(1);
        for (size_t j = 0; j < ncols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        for (size_t j = 0; j < ncols; ++j) {
            Rational scaled = m[i][j] * Rational(l);
            a[i][j] = scaled.get_num();  // denominator is 1
        }
    }
    Integer prev(1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < nrows; ++i) {
            for (size_t j = col + 1; j < ncols; ++j) {
                Integer t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        out.pivot_cols.push_back(static_cast<long>(col));
        ++row;
    }
    out.rank = static_cast<long>(row);
    return out;
}

// Reduced row echelon form over the rationals built from the Bareiss result.
RatMatrix rref_from(const Eliminated &e, size_t ncols) {
    RatMatrix r(static_cast<size_t>(e.rank), std::vector<Rational>(ncols, Rational(0)));
    for (long i = 0; i < e.rank; ++i)
        for (size_t j = 0; j < ncols; ++j) r[static_cast<size_t>(i)][j] = Rational(e.rows[static_cast<size_t>(i)][j]);
    for (long i = e.rank - 1; i >= 0; --i) {
        size_t pc = static_cast<size_t>(e.pivot_cols[static_cast<size_t>(i)]);
        Rational inv = 1 / r[static_cast<size_t>(i)][pc];
        for (size_t j = pc; j < ncols; ++j) r[static_cast<size_t>(i)][j] *= inv;
        for (long k = 0; k < i; ++k) {
            Rational f = r[static_cast<size_t>(k)][pc];
            if (f == 0) continue;
            for (size_t j = pc; j < ncols; ++j)
                r[static_cast<size_t>(k)][j] -= f * r[static_cast<size_t>(i)][j];
        }
    }
    return r;
}

}  // namespace

long matrix_rank(RatMatrix m) { return bareiss(m).rank; }

std::vector<Rational> solve_linear(RatMatrix m, std::vector<Rational> rhs) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n || rhs.size() != n)
        throw std::invalid_argument("solve_linear: need square system");
    for (size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    Eliminated e = bareiss(m);
    if (e.rank < static_cast<long>(n)) throw std::domain_error("solve_linear: singular matrix");
    RatMatrix r = rref_from(e, n + 1);
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = r[i][n];
    return x;
}

RatMatrix invert_matrix(const RatMatrix &m) {
    size_t n = m.size();
    RatMatrix aug = m;
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("invert_matrix: not square");
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    Eliminated e = bareiss(aug);
    if (e.rank < static_cast<long>(n)) throw std::domain_error("invert_matrix: singular matrix");
    RatMatrix r = rref_from(e, 2 * n);
    RatMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
    return inv;
}

std::vector<std::vector<Rational>> null_space(RatMatrix m) {
    if (m.empty()) return {};
    size_t ncols = m[0].size();
    Eliminated e = bareiss(m);
    RatMatrix r = rref_from(e, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (long c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (long i = 0; i < e.rank; ++i) {
            size_t pc = static_cast<size_t>(e.pivot_cols[static_cast<size_t>(i)]);
            v[pc] = -r[static_cast<size_t>(i)][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace f12
