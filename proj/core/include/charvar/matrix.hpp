#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"

namespace charvar {

/// Dense matrix with immutable dimensions. Instantiated with
/// GaussianRational (ScalarMatrix) and Polynomial (PolyMatrix).
template <class T>
class Matrix {
  public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix m(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k)
                for (int c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
        return m;
    }

    template <class S>
    Matrix scaled(const S& s) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const T& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<GaussianRational>;
using PolyMatrix = Matrix<Polynomial>;

/// Pfaffian by perfect-matching enumeration ((2n-1)!! terms). Rejects
/// non-skew input and odd dimension.
template <class T>
T pfaffian(const Matrix<T>& s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("pfaffian: matrix not square");
    if (s.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    for (int r = 0; r < s.rows(); ++r)
        for (int c = r; c < s.cols(); ++c)
            if (!(s.at(r, c) + s.at(c, r) == T(0)))
                throw std::invalid_argument("pfaffian: matrix not skew-symmetric");

    std::vector<int> active(s.rows());
    for (int k = 0; k < s.rows(); ++k) active[k] = k;

    // Pair the first active row with each later one; sign alternates with
    // the partner's position.
    struct Rec {
        const Matrix<T>& s;
        T run(std::vector<int> idx) {
            if (idx.empty()) return T(1);
            int first = idx[0];
            T sum = T(0);
            for (std::size_t j = 1; j < idx.size(); ++j) {
                std::vector<int> rest;
                rest.reserve(idx.size() - 2);
                for (std::size_t k = 1; k < idx.size(); ++k)
                    if (k != j) rest.push_back(idx[k]);
                T contrib = s.at(first, idx[j]) * run(std::move(rest));
                if (j % 2 == 1)
                    sum = sum + contrib;
                else
                    sum = sum - contrib;
            }
            return sum;
        }
    };
    return Rec{s}.run(std::move(active));
}

/// Determinant by cofactor expansion with column-mask memoization. Works
/// over any commutative ring; used as the independent oracle against
/// Pf(S)^2 and on polynomial matrices where elimination is unavailable.
template <class T>
T det_expansion(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n > 16) throw std::invalid_argument("det_expansion: dimension too large");
    std::vector<T> memo(std::size_t(1) << n, T(0));
    std::vector<bool> seen(std::size_t(1) << n, false);
    struct Rec {
        const Matrix<T>& m;
        int n;
        std::vector<T>& memo;
        std::vector<bool>& seen;
        T run(int row, unsigned mask) {
            if (row == n) return T(1);
            if (seen[mask]) return memo[mask];
            T sum = T(0);
            int parity = 0;
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                T contrib = m.at(row, c) * run(row + 1, mask | (1u << c));
                if (parity % 2 == 0)
                    sum = sum + contrib;
                else
                    sum = sum - contrib;
                ++parity;
            }
            seen[mask] = true;
            memo[mask] = sum;
            return sum;
        }
    };
    return Rec{m, n, memo, seen}.run(0, 0);
}

/// Basis of the right nullspace, by exact Gaussian elimination over Q(i)
/// with deterministic first-nonzero pivoting. rank + nullity = cols.
std::vector<std::vector<GaussianRational>> kernel_basis(const ScalarMatrix& m);

int rank(const ScalarMatrix& m);

ScalarMatrix inverse(const ScalarMatrix& m);

GaussianRational determinant(const ScalarMatrix& m);

/// Matrix-vector product helper for kernel verification.
std::vector<GaussianRational> apply(const ScalarMatrix& m, const std::vector<GaussianRational>& v);

}  // namespace charvar
