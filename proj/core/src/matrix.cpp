#include "charvar/matrix.hpp"

namespace charvar {

namespace {

// Row echelon form in place. Returns the list of pivot columns. Pivot
// choice is the first row with a nonzero entry in the current column, so
// the result is reproducible.
std::vector<int> echelonize(ScalarMatrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
        GaussianRational inv = GaussianRational(1) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GaussianRational factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::vector<std::vector<GaussianRational>> kernel_basis(const ScalarMatrix& m) {
    ScalarMatrix red = m;
    std::vector<int> pivots = echelonize(red);

    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussianRational> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -red.at(static_cast<int>(p), free_col);
        basis.push_back(std::move(v));
    }

    // rank-nullity, verified internally
    if (static_cast<int>(pivots.size() + basis.size()) != m.cols())
        throw std::logic_error("kernel_basis: rank-nullity violated");
    for (const auto& v : basis)
        for (const GaussianRational& e : apply(m, v))
            if (!e.is_zero()) throw std::logic_error("kernel_basis: vector not annihilated");
    return basis;
}

int rank(const ScalarMatrix& m) {
    ScalarMatrix red = m;
    return static_cast<int>(echelonize(red).size());
}

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    ScalarMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw std::domain_error("inverse: matrix is singular");
    ScalarMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

GaussianRational determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    ScalarMatrix red = m;
    int n = m.rows();
    GaussianRational det = 1;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r) {
            if (!red.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != row) {
            for (int c = col; c < n; ++c) std::swap(red.at(row, c), red.at(pivot, c));
            det = -det;
        }
        det *= red.at(row, col);
        GaussianRational inv = GaussianRational(1) / red.at(row, col);
        for (int r = row + 1; r < n; ++r) {
            if (red.at(r, col).is_zero()) continue;
            GaussianRational factor = red.at(r, col) * inv;
            for (int c = col; c < n; ++c) red.at(r, c) -= factor * red.at(row, c);
        }
        ++row;
    }
    return row == n ? det : GaussianRational(0);
}

std::vector<GaussianRational> apply(const ScalarMatrix& m, const std::vector<GaussianRational>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("apply: size mismatch");
    std::vector<GaussianRational> out(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

}  // namespace charvar
