#pragma once

#include "homlts/derivations.hpp"
#include "homlts/hom_structures.hpp"
#include "homlts/linalg.hpp"

#include <utility>
#include <vector>

namespace homlts {

/// A Lie algebra (honest, untwisted bracket) carrying a basis partition
/// into even and odd indices and an automorphism stored in the alpha slot.
struct GradedLieWithAut {
    HomLieAlgebra lie;
    std::vector<std::size_t> even;
    std::vector<std::size_t> odd;

    const Matrix& aut() const { return lie.alpha; }
    std::size_t dim() const { return lie.dim; }
};

/// Entries "alternating", "jacobi", "grading", "aut_invertible",
/// "aut_homomorphism", "aut_graded". Throws MathError when even/odd is not
/// a partition of the basis indices.
AxiomReport check_graded_lie(const GradedLieWithAut& g);

/// True iff structure constants respect the grading and the automorphism
/// preserves both components.
bool check_grading(const GradedLieWithAut& g);

/// True iff the smallest subalgebra containing the odd component is the
/// whole algebra; span closure under the bracket, at most dim(g) rounds.
bool generated_by_odd(const GradedLieWithAut& g);

/// Center as the kernel of the stacked adjoint matrices.
Subspace center_of(const HomLieAlgebra& lie);

/// Whether eps : T -> L satisfies the imbedding equations
///   eps([a,b,c]) = alpha_L([[eps a, eps b], eps c])  and
///   eps o alpha = alpha_L o eps.
/// `lie_with_aut` holds the target bracket with the automorphism in its
/// alpha slot. Entries "imbedding_bracket" and "imbedding_twist".
AxiomReport check_imbedding(const Matrix& eps, const RegularHomLTS& t,
                            const HomLieAlgebra& lie_with_aut);
bool verify_imbedding(const Matrix& eps, const RegularHomLTS& t,
                      const HomLieAlgebra& lie_with_aut);

/// Lexicographic enumeration of the pairs (i,j), i < j, indexing the basis
/// of the exterior square.
std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n);
std::size_t wedge_slot(std::size_t i, std::size_t j, std::size_t n);
/// Coordinates of a ^ b, with e_j ^ e_i = -e_i ^ e_j and e_i ^ e_i = 0.
Vector wedge_coords(const Vector& a, const Vector& b);
/// The induced map a ^ b -> m(a) ^ m(b) on the exterior square.
Matrix exterior_square(const Matrix& m);

/// Matrix of the action D . (a ^ b) = (a^-1 D a) ^ b + a ^ (a^-1 D b)
/// on the exterior square.
Matrix wedge_action_matrix(const Matrix& d, const RegularHomLTS& t);
Vector wedge_action(const Matrix& d, const Vector& x, const RegularHomLTS& t);

/// The map sending e_i ^ e_j to the inner derivation of (e_i, e_j),
/// shaped n^2 x wedge-dim (endomorphisms vectorized row-major).
Matrix pair_to_derivation_map(const RegularHomLTS& t);

/// The submodule of the exterior square spanned by lambda(x).x: generated
/// from the basis instances of the two spanning families plus the
/// polarizations of the quadratic one, and verified closed under the
/// twisted-derivation action.
Subspace wedge_relations(const RegularHomLTS& t);

/// The standard imbedding: inner derivations in even degree, the system in
/// odd degree, with the bracket
///   [X+a, Y+b] = [X,Y] + D_{ab} + (a^-1 X)(b) - (a^-1 Y)(a).
struct StandardImbedding {
    RegularHomLTS source;
    GradedLieWithAut target;
    Matrix inclusion; // T into the odd component
    InnerDerivationSpace inner;

    std::size_t inner_dim() const { return inner.space_dim(); }
};

StandardImbedding standard_imbedding(const RegularHomLTS& t);

/// The universal algebra: the quotient of the exterior square in even
/// degree, the system in odd degree. `cover` is the central extension onto
/// the standard imbedding, `pair_map` sends wedge coordinates to
/// endomorphisms, `coset_map` the same on quotient coordinates.
struct UniversalAlgebra {
    RegularHomLTS source;
    StandardImbedding standard;
    QuotientSpace wedge_quot;
    GradedLieWithAut target;
    Matrix inclusion; // T into the odd component of target
    Matrix cover;     // target -> standard.target
    Matrix pair_map;  // n^2 x wedge-dim
    Matrix coset_map; // n^2 x quotient-dim
};

UniversalAlgebra universal_algebra(const RegularHomLTS& t);

/// True iff the cover is a surjective graded Lie homomorphism commuting
/// with the automorphisms whose kernel lies in the center of the source.
bool check_central_extension(const UniversalAlgebra& u);

} // namespace homlts
