#include "homlts/linalg.hpp"

#include "homlts/errors.hpp"

#include <algorithm>
#include <string>

namespace homlts {

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < a.rows() && a(pivot_row, col) == 0)
            ++pivot_row;
        if (pivot_row == a.rows())
            continue;
        if (pivot_row != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(row, j), a(pivot_row, j));
        const Rational inv = Rational(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            const Rational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

Matrix invert(const Matrix& m) {
    if (!m.is_square())
        throw MathError("matrix is not square");
    const std::size_t n = m.rows();
    auto [red, pivots] = rref(hcat(m, Matrix::identity(n)));
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        throw MathError("matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = red(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows())
        throw MathError("solve: right-hand side length mismatch");
    Matrix rhs(a.rows(), 1);
    rhs.set_col(0, b);
    auto [red, pivots] = rref(hcat(a, rhs));
    // inconsistent iff a pivot landed in the appended column
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    Vector x(a.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = red(k, a.cols());
    return x;
}

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span_of(const std::vector<Vector>& vectors, std::size_t ambient) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (vectors[i].size() != ambient)
            throw MathError("span: vector " + std::to_string(i) + " has length " +
                            std::to_string(vectors[i].size()) + ", expected " +
                            std::to_string(ambient));
    return from_matrix_rows(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::from_matrix_rows(const Matrix& rows) {
    auto [red, pivots] = rref(rows);
    Matrix basis(pivots.size(), rows.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        basis.set_row(i, red.row(i));
    return Subspace(rows.cols(), std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(std::size_t ambient) {
    return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        pivots[i] = i;
    return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

bool Subspace::contains(const Vector& v) const {
    return coordinates_of(v).has_value();
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (other.ambient_dim() != ambient_)
        return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i)))
            return false;
    return true;
}

std::optional<Vector> Subspace::coordinates_of(const Vector& v) const {
    if (v.size() != ambient_)
        throw MathError("coordinates_of: vector length mismatch");
    // RREF basis: each pivot column is zero in every other basis row, so the
    // candidate coordinates can be read off directly.
    Vector coords(dim());
    Vector residue = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        coords[k] = v[pivots_[k]];
        if (coords[k] != 0)
            vec_axpy(residue, -coords[k], basis_.row(k));
    }
    if (!vec_is_zero(residue))
        return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_dim() != ambient_)
        throw MathError("subspace sum: ambient dimension mismatch");
    return from_matrix_rows(vcat(basis_, other.basis()));
}

Subspace kernel(const Matrix& m) {
    auto [red, pivots] = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            if (p < pivots.size() && pivots[p] == col)
                ++p;
            else
                free_cols.push_back(col);
        }
    }
    std::vector<Vector> basis;
    basis.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
        Vector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -red(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(basis, m.cols());
}

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace killed)
    : ambient_(ambient), killed_(std::move(killed)) {
    if (killed_.ambient_dim() != ambient_)
        throw MathError("quotient: killed subspace lives in the wrong ambient space");
    std::size_t p = 0;
    for (std::size_t col = 0; col < ambient_; ++col) {
        if (p < killed_.pivots().size() && killed_.pivots()[p] == col)
            ++p;
        else
            coset_.push_back(col);
    }
    // project(v): subtract the pivot-coordinate combination of the killed
    // basis, then read the non-pivot coordinates.
    proj_ = Matrix(coset_.size(), ambient_);
    for (std::size_t t = 0; t < coset_.size(); ++t) {
        proj_(t, coset_[t]) = 1;
        for (std::size_t k = 0; k < killed_.dim(); ++k)
            proj_(t, killed_.pivots()[k]) = -killed_.basis()(k, coset_[t]);
    }
    lift_ = Matrix(ambient_, coset_.size());
    for (std::size_t t = 0; t < coset_.size(); ++t)
        lift_(coset_[t], t) = 1;
}

Vector QuotientSpace::project(const Vector& v) const {
    return proj_.apply(v);
}

Vector QuotientSpace::lift(const Vector& coords) const {
    return lift_.apply(coords);
}

Matrix factor_through(const Matrix& map, const QuotientSpace& quot) {
    if (map.cols() != quot.ambient_dim())
        throw MathError("factor_through: map domain mismatch");
    const Subspace& killed = quot.killed();
    for (std::size_t k = 0; k < killed.dim(); ++k)
        if (!vec_is_zero(map.apply(killed.basis().row(k))))
            throw MathError("map does not vanish on the killed subspace");
    return map * quot.lift_matrix();
}

} // namespace homlts
