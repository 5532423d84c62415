#include "admrank/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace admrank {

namespace {

// Fraction-free row echelon (Bareiss). Returns pivot columns; m is reduced
// in place to an upper-echelon integer matrix with exact arithmetic.
std::vector<int> bareiss_echelon(IntMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    Int prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int matrix_rank(IntMatrix m) { return static_cast<int>(bareiss_echelon(m).size()); }

std::vector<std::vector<Int>> kernel_basis(IntMatrix m) {
    std::vector<std::vector<Int>> out;
    if (m.empty()) return out;
    const size_t cols = m[0].size();
    std::vector<int> pivots = bareiss_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // back-substitute over Q: x_f = 1, other free vars = 0
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            int pc = pivots[r];
            Rat s(0);
            for (size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0) s += Rat(m[r][j]) * x[j];
            x[pc] = -s / Rat(m[r][pc]);
        }
        out.push_back(primitive_normalize(x));
    }
    return out;
}

namespace {

// rational row echelon, in place; returns rank
int q_echelon(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat t = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

bool in_row_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    return !coordinates_in_span(basis, v).empty() ||
           std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::vector<Rat> coordinates_in_span(const std::vector<std::vector<Int>>& basis,
                                     const std::vector<Int>& v) {
    // solve sum_i x_i basis[i] = v by Gaussian elimination on the transpose
    if (basis.empty()) return {};
    const size_t n = basis[0].size();
    if (v.size() != n) throw std::logic_error("coordinates_in_span: size mismatch");
    const size_t k = basis.size();
    // augmented (n x (k+1)) system: columns are basis vectors, last column v
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1, Rat(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) m[j][i] = Rat(basis[i][j]);
    for (size_t j = 0; j < n; ++j) m[j][k] = Rat(v[j]);

    // echelon with pivot bookkeeping
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < k && r < n; ++c) {
        size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat t = m[i][c] / m[r][c];
            for (size_t j = c; j <= k; ++j) m[i][j] -= t * m[r][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    // consistency: rows past the pivots must have zero rhs
    for (size_t i = r; i < n; ++i)
        if (m[i][k] != 0) return {};
    std::vector<Rat> x(k, Rat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        int c = pivot_col_of_row[i];
        x[c] = m[i][k] / m[i][c];
    }
    return x;
}

} // namespace admrank
