#pragma once

#include "kstab/rational.hpp"

#include <optional>
#include <vector>

namespace kstab {

/// Dense row-major matrix over an exact ring (Rational or Integer).
template <typename T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows);

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + static_cast<long>(i * cols_),
                              a_.begin() + static_cast<long>((i + 1) * cols_));
    }
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool operator==(const BasicMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

template <typename T>
BasicMatrix<T>::BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

template <typename T>
BasicMatrix<T> operator*(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    BasicMatrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <typename T>
std::vector<T> operator*(const BasicMatrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

using Matrix = BasicMatrix<Rational>;
using IntMatrix = BasicMatrix<Integer>;

Matrix to_rational(const IntMatrix& m);

/// v^T G w.
Rational bilinear(const Matrix& g, const Vec& v, const Vec& w);

Rational determinant(Matrix m);
Integer determinant(const IntMatrix& m);
std::size_t rank(Matrix m);
/// Unique solution of A x = b for square nonsingular A, nullopt otherwise.
std::optional<Vec> solve(Matrix a, Vec b);
Matrix inverse(const Matrix& m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia via exact congruence diagonalization.
Inertia inertia(const Matrix& symmetric);
bool is_negative_definite(const Matrix& symmetric);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<Integer> diagonal;  // min(rows, cols) entries
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite basis of the row lattice of `a` (nonzero rows only).
IntMatrix row_hermite_basis(const IntMatrix& a);

namespace lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Vec x;
    Rational value;
};

/// Exact two-phase simplex (Bland's rule): maximize c.x subject to A x = b, x >= 0.
Result maximize(const Matrix& a, const Vec& b, const Vec& c);

}  // namespace lp

}  // namespace kstab
