#ifndef COSALG_LINALG_HPP
#define COSALG_LINALG_HPP

#include <optional>
#include <vector>

#include "cosalg/matrix.hpp"

namespace cosalg {

/// Row echelon form produced by fraction-free (Bareiss) elimination.
/// Pivot choice is deterministic: first column with a nonzero entry among the
/// remaining rows, then the smallest row index.
template <typename T>
struct Echelon {
    Matrix<T> mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    int swap_sign = 1;
};

namespace detail {

inline void integerize_row(RatVec& row) {
    mpz_class l(1);
    for (const Rat& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    if (l == 1) return;
    Rat f(l);
    for (Rat& q : row) q *= f;
}

inline void integerize_row(CVec& row) {
    mpz_class l(1);
    for (const CRat& z : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re.get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im.get_den_mpz_t());
    }
    if (l == 1) return;
    CRat f{Rat(l), Rat(0)};
    for (CRat& z : row) z *= f;
}

}  // namespace detail

/// Bareiss elimination. Rows are first scaled to integral entries so the
/// fraction-free update keeps intermediate values integral (Gaussian integers
/// in the complex case), which bounds coefficient growth.
template <typename T>
Echelon<T> row_echelon(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        Vec<T> r = m.row(i);
        detail::integerize_row(r);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
    }
    Echelon<T> out;
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && value_is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
            out.swap_sign = -out.swap_sign;
        }
        const T pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const T mic = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (pivot * m(i, j) - mic * m(r, j)) / prev;
            m(i, c) = T(0);
        }
        prev = pivot;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    out.rank = out.pivot_cols.size();
    return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
    return row_echelon(m).rank;
}

template <typename T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return T(1);
    // Bareiss on the unscaled matrix: the last pivot of a full-rank square
    // elimination equals det up to the row-swap sign and the row scalings,
    // so run plain fraction-free steps here without integerizing.
    Matrix<T> a = m;
    const std::size_t n = a.rows();
    T prev(1);
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = r;
        while (p < n && value_is_zero(a(p, r))) ++p;
        if (p == n) return T(0);
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
            sign = -sign;
        }
        const T pivot = a(r, r);
        for (std::size_t i = r + 1; i < n; ++i) {
            const T mic = a(i, r);
            for (std::size_t j = r + 1; j < n; ++j) a(i, j) = (pivot * a(i, j) - mic * a(r, j)) / prev;
            a(i, r) = T(0);
        }
        prev = pivot;
    }
    return sign == 1 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

/// Null-space basis. Deterministic: one vector per free column in ascending
/// column order, with entry 1 at that free column and 0 at the other free
/// columns.
template <typename T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m) {
    const std::size_t cols = m.cols();
    Echelon<T> e = row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t ri = e.rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            T acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (!value_is_zero(e.mat(ri, j)) && !value_is_zero(v[j])) acc += e.mat(ri, j) * v[j];
            }
            v[pc] = -acc / e.mat(ri, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = b for several right-hand sides at once. Returns nullopt when
/// any column of b lies outside the column space. Free variables are set to 0.
template <typename T>
std::optional<Matrix<T>> solve_multi(const Matrix<T>& m, const Matrix<T>& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t cols = m.cols(), extra = b.cols();
    Matrix<T> aug(m.rows(), cols + extra);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < extra; ++j) aug(i, cols + j) = b(i, j);
    }
    Echelon<T> e = row_echelon(aug);
    for (std::size_t c : e.pivot_cols)
        if (c >= cols) return std::nullopt;  // inconsistent system
    Matrix<T> x(cols, extra);
    for (std::size_t k = 0; k < extra; ++k) {
        Vec<T> v(cols, T(0));
        for (std::size_t ri = e.rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            T acc = e.mat(ri, cols + k);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!value_is_zero(e.mat(ri, j)) && !value_is_zero(v[j])) acc -= e.mat(ri, j) * v[j];
            v[pc] = acc / e.mat(ri, pc);
        }
        x.set_col(k, v);
    }
    return x;
}

template <typename T>
std::optional<Vec<T>> solve(const Matrix<T>& m, const Vec<T>& b) {
    Matrix<T> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    auto x = solve_multi(m, rhs);
    if (!x) return std::nullopt;
    return x->col(0);
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve_multi(m, Matrix<T>::identity(m.rows()));
    if (!x) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return x;
}

template <typename T>
Matrix<T> columns_to_matrix(const std::vector<Vec<T>>& cols, std::size_t dim) {
    Matrix<T> m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

/// Basis of the column space: the pivot columns of the original matrix, in
/// ascending pivot order.
template <typename T>
std::vector<Vec<T>> column_space_basis(const Matrix<T>& m) {
    Echelon<T> e = row_echelon(m);
    std::vector<Vec<T>> basis;
    for (std::size_t c : e.pivot_cols) basis.push_back(m.col(c));
    return basis;
}

/// Membership of v in span(basis vectors).
template <typename T>
bool in_span(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
    if (vec_is_zero(v)) return true;
    if (basis.empty()) return false;
    Matrix<T> m = columns_to_matrix(basis, v.size());
    return solve(m, v).has_value();
}

/// Orthogonal projection of v onto span(basis) with respect to the inner
/// product x^* gram y. Throws when the basis is not linearly independent
/// (singular normal system).
template <typename T>
Vec<T> gram_projection(const std::vector<Vec<T>>& basis, const Matrix<T>& gram, const Vec<T>& v) {
    if (basis.empty()) return Vec<T>(v.size(), T(0));
    const std::size_t dim = v.size(), k = basis.size();
    Matrix<T> b = columns_to_matrix(basis, dim);
    Matrix<T> bstar_g = b.conj_transpose() * gram;  // k x dim
    Matrix<T> normal = bstar_g * b;                 // k x k
    Vec<T> rhs = bstar_g * v;
    if (rank(normal) != k) throw std::invalid_argument("gram_projection: subspace basis not independent");
    auto x = solve(normal, rhs);
    return b * (*x);
}

/// Exact positive-definiteness test for a symmetric (or Hermitian) matrix via
/// signs of leading principal minors. Hermitian minors are real; a nonzero
/// imaginary part signals a non-Hermitian input and fails the test.
inline bool is_positive_definite(const RatMatrix& m) {
    if (!m.is_square()) return false;
    if (m != m.transpose()) return false;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        idx.push_back(k);
        if (determinant(m.submatrix(idx, idx)) <= 0) return false;
    }
    return true;
}

inline bool is_positive_definite(const CMatrix& m) {
    if (!m.is_square()) return false;
    if (m != m.conj_transpose()) return false;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        idx.push_back(k);
        CRat d = determinant(m.submatrix(idx, idx));
        if (d.im != 0 || d.re <= 0) return false;
    }
    return true;
}

}  // namespace cosalg

#endif
