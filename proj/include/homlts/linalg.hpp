#pragma once

#include "homlts/matrix.hpp"

#include <optional>
#include <vector>

namespace homlts {

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

/// Unique reduced row echelon form (Gauss-Jordan over the rationals,
/// zero rows dropped is NOT done here; rows below the rank are zero).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix. Throws MathError("matrix is not invertible")
/// on singular input -- for twisting maps this signals non-regularity.
Matrix invert(const Matrix& m);

/// One solution x of a*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// A linear subspace of Q^ambient in canonical form: the basis is the RREF
/// of any spanning set, one vector per row, so two subspaces are equal iff
/// their basis matrices are entrywise equal.
class Subspace {
public:
    /// Canonicalizes the span of the given vectors. Rejects vectors of the
    /// wrong length with the index of the first offender.
    static Subspace span_of(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace from_matrix_rows(const Matrix& rows);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains_subspace(const Subspace& other) const;
    /// Coordinates of v in the RREF basis; nullopt when v lies outside.
    std::optional<Vector> coordinates_of(const Vector& v) const;

    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel {v : m v = 0} as a canonical subspace of Q^cols.
Subspace kernel(const Matrix& m);

/// Q^ambient / killed with the canonical coordinate section: quotient
/// coordinates are the non-pivot coordinates of the RREF basis of `killed`.
class QuotientSpace {
public:
    QuotientSpace(std::size_t ambient, Subspace killed);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return coset_.size(); }
    const Subspace& killed() const { return killed_; }
    /// Ambient indices carrying the quotient coordinates.
    const std::vector<std::size_t>& coset_indices() const { return coset_; }

    Vector project(const Vector& v) const;
    Vector lift(const Vector& coords) const;
    const Matrix& projection_matrix() const { return proj_; }
    const Matrix& lift_matrix() const { return lift_; }

private:
    std::size_t ambient_;
    Subspace killed_;
    std::vector<std::size_t> coset_;
    Matrix proj_;
    Matrix lift_;
};

/// Given a map out of the ambient space (one column per ambient coordinate)
/// that vanishes on quot.killed(), returns the induced map on quotient
/// coordinates. Throws MathError when the map does not vanish there.
Matrix factor_through(const Matrix& map, const QuotientSpace& quot);

} // namespace homlts
