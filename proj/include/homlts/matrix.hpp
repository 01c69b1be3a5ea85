#pragma once

#include "homlts/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace homlts {

using Vector = std::vector<Rational>;

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scaled(const Rational& c, const Vector& v);
/// out += c * v
void vec_axpy(Vector& out, const Rational& c, const Vector& v);
bool vec_is_zero(const Vector& v);
Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);

/// Dense row-major matrix over exact rationals. Zero-sized shapes
/// (0 x k, k x 0) are legal and show up routinely as empty gradings,
/// empty wedge spaces and trivial quotients.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    /// Stacks the given rows; every row must have length `cols`.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_cols(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void set_col(std::size_t j, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    /// Matrix-vector product; v.size() must equal cols().
    Vector apply(const Vector& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& m);
Matrix operator-(const Matrix& m);

/// [a | b] side by side (same row count).
Matrix hcat(const Matrix& a, const Matrix& b);
/// a on top of b (same column count).
Matrix vcat(const Matrix& a, const Matrix& b);
/// Diagonal block matrix.
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Row-major flattening of a matrix into a vector of length rows*cols.
Vector vec(const Matrix& m);
/// Inverse of vec for square matrices: v.size() must be n*n.
Matrix unvec(const Vector& v, std::size_t n);

} // namespace homlts
