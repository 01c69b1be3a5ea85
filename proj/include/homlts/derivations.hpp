#pragma once

#include "homlts/hom_structures.hpp"
#include "homlts/linalg.hpp"

namespace homlts {

/// Endomorphisms X of T with X(a^-1([c,d,e])) equal to the sum of the
/// bracket with a^-1 X applied in each slot -- the twisted derivations.
/// Basis vectors live in the n^2-dimensional endomorphism space,
/// vectorized row-major.
struct TwistedDerivationSpace {
    std::size_t dim = 0; // dim of the underlying system
    Subspace basis;

    std::size_t space_dim() const { return basis.dim(); }
    Matrix element(std::size_t k) const { return unvec(basis.basis().row(k), dim); }
};

/// Span of the inner derivations c -> [e_i, e_j, c] over basis pairs i < j.
struct InnerDerivationSpace {
    std::size_t dim = 0;
    Subspace basis;
    /// Row t = vectorized inner derivation of the t-th pair (i,j), i < j,
    /// pairs enumerated lexicographically.
    Matrix generator_table;
    /// Row t = coordinates of that generator in the canonical basis.
    Matrix generator_coords_table;

    std::size_t space_dim() const { return basis.dim(); }
    Matrix element(std::size_t k) const { return unvec(basis.basis().row(k), dim); }
    /// Coordinates of the inner derivation of (e_i, e_j); antisymmetric in
    /// (i, j), zero when i = j.
    Vector generator_coords(std::size_t i, std::size_t j) const;
};

/// The endomorphism c -> [a, b, c].
Matrix inner_derivation(const RegularHomLTS& t, const Vector& a, const Vector& b);

/// Solves the defining identity as one homogeneous linear system over the
/// n^2 entries of X, instantiated at all basis triples.
TwistedDerivationSpace compute_twisted_derivations(const RegularHomLTS& t);

/// Inner derivations; verified to lie inside the twisted derivation space.
InnerDerivationSpace compute_inner_derivations(const RegularHomLTS& t);

/// X a^-1 Y - Y a^-1 X, the bracket both derivation spaces carry.
Matrix derivation_bracket(const Matrix& x, const Matrix& y, const RegularHomLTS& t);

/// [X, D_{ab}] = D_{a, X'b} + D_{X'a, b} with X' = a^-1 X, checked for X
/// ranging over the twisted-derivation basis ("ideal_identity_full") and
/// over the inner basis only ("ideal_identity_inner"); the scopes are
/// reported separately.
AxiomReport check_ideal_identity(const RegularHomLTS& t);

} // namespace homlts
