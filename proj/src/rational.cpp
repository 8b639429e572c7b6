#include "dfv/rational.hpp"

#include <stdexcept>

namespace dfv {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: size mismatch");
    RationalMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("matrix sum: size mismatch");
    RationalMatrix r(rows, cols);
    for (size_t i = 0; i < data.size(); ++i) r.data[i] = data[i] + o.data[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("matrix difference: size mismatch");
    RationalMatrix r(rows, cols);
    for (size_t i = 0; i < data.size(); ++i) r.data[i] = data[i] - o.data[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows, cols);
    for (size_t i = 0; i < data.size(); ++i) r.data[i] = data[i] * c;
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RationalMatrix RationalMatrix::power(int k) const {
    if (rows != cols) throw std::invalid_argument("matrix power: not square");
    RationalMatrix r = identity(rows);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data)
        if (v != 0) return false;
    return true;
}

RationalMatrix from_int_matrix(const std::vector<std::vector<int>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    RationalMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(m[i].size()) != cols)
            throw std::invalid_argument("from_int_matrix: ragged input");
        for (int j = 0; j < cols; ++j) r(i, j) = m[i][j];
    }
    return r;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    RationalMatrix r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols; ++j) r(i, a.cols + j) = b(i, j);
    }
    return r;
}

RationalMatrix rref(RationalMatrix m) {
    int lead = 0;
    for (int row = 0; row < m.rows && lead < m.cols; ++row) {
        int pivot = -1;
        while (lead < m.cols) {
            for (int i = row; i < m.rows; ++i)
                if (m(i, lead) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot >= 0) break;
            ++lead;
        }
        if (pivot < 0) break;
        if (pivot != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
        Rational inv = m(row, lead);
        for (int j = 0; j < m.cols; ++j) m(row, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m(i, lead) == 0) continue;
            Rational f = m(i, lead);
            for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        ++lead;
    }
    return m;
}

int rank(RationalMatrix m) {
    m = rref(std::move(m));
    int r = 0;
    for (int i = 0; i < m.rows; ++i) {
        bool nonzero = false;
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++r;
    }
    return r;
}

RationalMatrix inverse_matrix(const RationalMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    RationalMatrix aug = rref(hstack(m, RationalMatrix::identity(m.rows)));
    for (int i = 0; i < m.rows; ++i)
        if (aug(i, i) != 1) throw std::invalid_argument("inverse: singular matrix");
    RationalMatrix inv(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv(i, j) = aug(i, m.cols + j);
    return inv;
}

RationalMatrix nullspace(const RationalMatrix& m) {
    RationalMatrix e = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(m.cols, false);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j)
            if (e(i, j) != 0) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RationalMatrix basis(static_cast<int>(free_cols.size()), m.cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        basis(static_cast<int>(k), free_cols[k]) = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            basis(static_cast<int>(k), pivot_col[i]) = -e(static_cast<int>(i), free_cols[k]);
    }
    return basis;
}

LinearSubspace row_space(const RationalMatrix& m) {
    RationalMatrix e = rref(m);
    int r = rank(m);
    RationalMatrix basis(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols; ++j) basis(i, j) = e(i, j);
    return LinearSubspace{m.cols, std::move(basis)};
}

}  // namespace dfv
