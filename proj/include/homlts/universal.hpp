#pragma once

#include "homlts/imbedding.hpp"

namespace homlts {

/// The morphism out of the universal algebra induced by an imbedding,
/// together with the verdicts of its three contracts.
struct UniversalFactorization {
    UniversalAlgebra source;
    HomLieAlgebra target; // bracket with the automorphism in the alpha slot
    Matrix eps;
    Matrix morphism; // dim(target) x dim(universal)

    struct Verdicts {
        bool extends_inclusion = false;
        bool lie_homomorphism = false;
        bool commutes_with_aut = false;
        bool all() const { return extends_inclusion && lie_homomorphism && commutes_with_aut; }
    } verdicts;
};

/// Builds the factorization of eps through the universal algebra: the
/// bracket map on wedge coordinates is pushed to the quotient and glued
/// with eps on the odd part. Throws MathError("not an imbedding") when the
/// precondition fails and a descriptive error when the bracket map does
/// not vanish on the relation submodule.
UniversalFactorization factor_imbedding(const UniversalAlgebra& u, const Matrix& eps,
                                        const HomLieAlgebra& target);

/// True iff agreement of f and g on the odd copy of the system forces
/// f = g, established by propagating agreement across bracket-generated
/// vectors.
bool check_uniqueness(const UniversalAlgebra& u, const HomLieAlgebra& target,
                      const Matrix& f, const Matrix& g);

/// Action of the universal construction on a morphism theta : T -> S of
/// regular systems: the factorization of (inclusion_S o theta).
Matrix universal_on_morphism(const Matrix& theta, const UniversalAlgebra& ut,
                             const UniversalAlgebra& us);
Matrix universal_on_morphism(const Matrix& theta, const RegularHomLTS& t,
                             const RegularHomLTS& s);

/// Combined predicate for images of the construction: a graded Lie algebra
/// with a graded automorphism, generated by its odd component.
bool is_candidate_image(const GradedLieWithAut& g);

/// For graded automorphisms f, g of g: does agreement on the odd component
/// force f = g? Holds whenever the odd component generates.
bool aut_determined_by_odd(const GradedLieWithAut& g, const Matrix& f, const Matrix& g2);

} // namespace homlts
