#include "permspectra/ratlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace permspectra {

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_echelon(RatMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMatrix a) { return static_cast<int>(row_echelon(a).size()); }

std::optional<RatVector> solve_linear(RatMatrix a, RatVector b) {
    std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = row_echelon(a);
    // Inconsistent iff a pivot lands in the augmented column.
    for (int p : pivots)
        if (static_cast<std::size_t>(p) == cols) return std::nullopt;
    RatVector x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<RatVector> nullspace(RatMatrix a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    auto pivots = row_echelon(a);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> min_norm_solution(const RatMatrix& a, const RatVector& b) {
    std::size_t rows = a.size();
    if (rows == 0) return RatVector{};
    std::size_t cols = a[0].size();
    // Select a maximal independent subset of rows (with consistency check).
    RatMatrix aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    RatMatrix work = aug;
    auto pivots = row_echelon(work);
    for (int p : pivots)
        if (static_cast<std::size_t>(p) == cols) return std::nullopt;  // inconsistent
    // Greedily pick rows of the original system that keep the rank growing.
    RatMatrix sel;
    RatVector selb;
    RatMatrix probe;
    for (std::size_t i = 0; i < rows; ++i) {
        probe.push_back(a[i]);
        RatMatrix copy = probe;
        if (row_echelon(copy).size() == probe.size()) {
            sel.push_back(a[i]);
            selb.push_back(b[i]);
        } else {
            probe.pop_back();
        }
    }
    std::size_t m = sel.size();
    // Gram matrix G = sel * sel^T is invertible for independent rows.
    RatMatrix g(m, RatVector(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < cols; ++k) g[i][j] += sel[i][k] * sel[j][k];
    auto y = solve_linear(g, selb);
    if (!y) return std::nullopt;
    RatVector x(cols, Rat(0));
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t i = 0; i < m; ++i) x[k] += sel[i][k] * (*y)[i];
    return x;
}

std::vector<Int> char_poly(const IntMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");
    // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(A); M_{k+1} = A (M_k + c_k I).
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    IntMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        if (tr % Int(k) != 0) throw std::logic_error("char_poly: inexact division");
        Int ck = -tr / Int(k);
        coeffs[k] = ck;
        if (k == n) break;
        IntMatrix tmp = mk;
        for (std::size_t i = 0; i < n; ++i) tmp[i][i] += ck;
        IntMatrix next(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (m[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += m[i][l] * tmp[l][j];
            }
        mk = std::move(next);
    }
    return coeffs;
}

int extract_root_multiplicity(std::vector<Int>& poly, const Int& root) {
    int mult = 0;
    while (poly.size() > 1) {
        // Synthetic division by (x - root).
        std::vector<Int> q(poly.size() - 1);
        Int carry = 0;
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            carry = poly[i] + carry * root;
            q[i] = carry;
        }
        Int rem = poly.back() + carry * root;
        if (rem != 0) break;
        poly = std::move(q);
        ++mult;
    }
    return mult;
}

}  // namespace permspectra
