#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace dfv {

/**
 * Exact rational dense matrices: the arithmetic substrate of the
 * verification oracle.  No floating point anywhere.
 */

using Rational = boost::multiprecision::cpp_rational;

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> data;  // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Rational& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const {
        return data[static_cast<size_t>(i) * cols + j];
    }

    bool operator==(const RationalMatrix&) const = default;

    static RationalMatrix identity(int n);
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    RationalMatrix transposed() const;
    RationalMatrix power(int k) const;
    bool is_zero() const;
};

RationalMatrix from_int_matrix(const std::vector<std::vector<int>>& m);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

int rank(RationalMatrix m);
RationalMatrix rref(RationalMatrix m);
RationalMatrix inverse_matrix(const RationalMatrix& m);
// basis of {x : m x = 0}, one kernel vector per row of the result
RationalMatrix nullspace(const RationalMatrix& m);

struct LinearSubspace {
    int ambient = 0;
    RationalMatrix basis;  // rref rows spanning the space

    int dim() const { return basis.rows; }
};

LinearSubspace row_space(const RationalMatrix& m);

}  // namespace dfv
