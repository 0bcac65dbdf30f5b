#ifndef RIGIDITY_LINALG_HPP
#define RIGIDITY_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rigidity {

// Dense matrix over an exact field T (Fp61 or Rational).
// T needs +, -, *, /, ==, and explicit construction from int.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    Matrix select_rows(const std::vector<std::size_t>& rows) const {
        Matrix s(rows.size(), cols_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < cols_; ++c)
                s.at(i, c) = at(rows[i], c);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

// Gauss-Jordan reduction in place. Returns, per column, the pivot row
// chosen for that column (nullopt for free columns). Pivot rule: scan
// columns left to right, take the first not-yet-pivoted row in index
// order with a nonzero entry.
template <typename T>
std::vector<std::optional<std::size_t>> reduce_rref(Matrix<T>& m) {
    const T zero(0);
    std::vector<std::optional<std::size_t>> pivot_of_col(m.cols());
    std::vector<bool> pivoted(m.rows(), false);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t pr = m.rows();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!pivoted[r] && !(m.at(r, c) == zero)) {
                pr = r;
                break;
            }
        }
        if (pr == m.rows()) continue;
        pivoted[pr] = true;
        pivot_of_col[c] = pr;
        T inv = T(1) / m.at(pr, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m.at(r, c) == zero) continue;
            T f = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = m.at(r, j) - f * m.at(pr, j);
        }
    }
    return pivot_of_col;
}

template <typename T>
std::size_t matrix_rank(Matrix<T> m) {
    auto pivots = reduce_rref(m);
    std::size_t r = 0;
    for (const auto& p : pivots)
        if (p) ++r;
    return r;
}

template <typename T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const T zero(0);
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = n;
        for (std::size_t r = c; r < n; ++r) {
            if (!(m.at(r, c) == zero)) {
                pr = r;
                break;
            }
        }
        if (pr == n) return zero;
        if (pr != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(pr, j));
            det = -det;
        }
        det = det * m.at(c, c);
        T inv = T(1) / m.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c) == zero) continue;
            T f = m.at(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    return det;
}

// Basis of the right null space {x : Mx = 0}, one vector per free column,
// ordered by free-column index.
template <typename T>
std::vector<std::vector<T>> nullspace_basis(Matrix<T> m) {
    auto pivots = reduce_rref(m);
    const T zero(0);
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (pivots[f]) continue;
        std::vector<T> x(m.cols(), zero);
        x[f] = T(1);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!pivots[c]) continue;
            x[c] = -m.at(*pivots[c], f);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// First basis vector of {w : w^T M = 0}, or nullopt when rows are independent.
template <typename T>
std::optional<std::vector<T>> left_nullspace_vector(const Matrix<T>& m) {
    auto basis = nullspace_basis(m.transposed());
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

} // namespace rigidity

#endif
