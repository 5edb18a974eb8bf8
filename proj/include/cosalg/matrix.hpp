#ifndef COSALG_MATRIX_HPP
#define COSALG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "cosalg/rational.hpp"

namespace cosalg {

template <typename T>
using Vec = std::vector<T>;

using RatVec = Vec<Rat>;
using CVec = Vec<CRat>;

/// Dense row-major matrix over an exact scalar type (Rat or CRat).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conj_value((*this)(i, j));
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!value_is_zero(v)) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Vec<T> row(std::size_t i) const {
        Vec<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Vec<T> col(std::size_t j) const {
        Vec<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const Vec<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    /// Rows and columns picked by index lists, in the given order.
    Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
        Matrix r(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) r(i, j) = (*this)(row_idx[i], col_idx[j]);
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (value_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = -m.data_[k];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Vec<T> operator*(const Matrix& m, const Vec<T>& v) {
        if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        Vec<T> r(m.rows_, T(0));
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
        return r;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using CMatrix = Matrix<CRat>;

template <typename T>
Vec<T> vec_add(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename T>
Vec<T> vec_sub(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <typename T>
Vec<T> vec_scale(const T& s, const Vec<T>& a) {
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

template <typename T>
bool vec_is_zero(const Vec<T>& a) {
    for (const auto& v : a)
        if (!value_is_zero(v)) return false;
    return true;
}

/// Plain bilinear a.b (no conjugation).
template <typename T>
T vec_dot(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
    T r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

/// Inner product a^* G b, sesquilinear in the first argument.
template <typename T>
T gram_dot(const Matrix<T>& gram, const Vec<T>& a, const Vec<T>& b) {
    T r(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        T la = conj_value(a[i]);
        if (value_is_zero(la)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r += la * gram(i, j) * b[j];
    }
    return r;
}

template <typename T>
Matrix<T> outer_product(const Vec<T>& a, const Vec<T>& b) {
    Matrix<T> r(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r(i, j) = a[i] * b[j];
    return r;
}

inline CMatrix complexify(const RatMatrix& m) {
    CMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = CRat(m(i, j));
    return r;
}

inline CVec complexify(const RatVec& v) {
    CVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = CRat(v[i]);
    return r;
}

}  // namespace cosalg

#endif
