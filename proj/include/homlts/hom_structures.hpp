#pragma once

#include "homlts/linalg.hpp"
#include "homlts/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace homlts {

/// bracket[i][j] holds the coordinates of [e_i, e_j].
using Tensor2 = std::vector<std::vector<Vector>>;
/// bracket3[i][j][k] holds the coordinates of [e_i, e_j, e_k].
using Tensor3 = std::vector<std::vector<std::vector<Vector>>>;

/// A module with a bilinear bracket and a twisting map. The struct itself is
/// raw data so that files with broken axioms can still be loaded and
/// reported on; use make_hom_lie_algebra for values that are guaranteed to
/// be stored in skew form.
struct HomLieAlgebra {
    std::size_t dim = 0;
    Tensor2 bracket;
    Matrix alpha;
};

struct HomLTS {
    std::size_t dim = 0;
    Tensor3 bracket3;
    Matrix alpha1;
    Matrix alpha2;
};

/// Shape-checks and verifies the stored-form invariants ([e_i,e_i] = 0,
/// skew pairs). Violations are rejected, never silently repaired.
HomLieAlgebra make_hom_lie_algebra(std::size_t dim, Tensor2 bracket, Matrix alpha);
HomLTS make_hom_lts(std::size_t dim, Tensor3 bracket3, Matrix alpha1, Matrix alpha2);

void validate_shape(const HomLieAlgebra& l);
void validate_shape(const HomLTS& t);

/// Bilinear / trilinear extension of the structure constants.
Vector eval_bracket(const HomLieAlgebra& l, const Vector& a, const Vector& b);
Vector eval_bracket3(const HomLTS& t, const Vector& a, const Vector& b, const Vector& c);

/// Per-axiom verdicts. A failing entry always carries the witnessing basis
/// index tuple and the nonzero defect vector.
struct AxiomReport {
    struct Entry {
        std::string axiom;
        bool pass = true;
        std::vector<std::size_t> witness;
        Vector defect;
    };
    std::vector<Entry> entries;

    bool all_pass() const;
    const Entry* find(std::string_view axiom) const;
};

/// Entries "alternating" and "twisted_jacobi"; both identities are
/// multilinear, so basis tuples decide them.
AxiomReport check_hom_lie(const HomLieAlgebra& l);
/// Same check with the twisting map replaced by the identity, i.e. the
/// plain Lie axioms for the stored bracket.
AxiomReport check_lie(const HomLieAlgebra& l);
/// Entries "left_alternating", "ternary_cyclic" and "hom_nambu".
AxiomReport check_hom_lts(const HomLTS& t);

bool is_lie_homomorphism(const Matrix& f, const HomLieAlgebra& from, const HomLieAlgebra& to);
bool is_lts_homomorphism(const Matrix& f, const HomLTS& from, const HomLTS& to);

enum class Twist { plain, multiplicative, regular };
std::string to_string(Twist t);

Twist classify_twist(const HomLieAlgebra& l);
/// plain whenever the two twisting maps differ.
Twist classify_twist(const HomLTS& t);

/// (L, [,]) with a homomorphism sigma gives (L, sigma o [,], sigma).
/// Expects an untwisted input (alpha = id); rejects non-homomorphic sigma.
HomLieAlgebra induce_hom_lie(const HomLieAlgebra& lie, const Matrix& sigma);
/// Inverse direction: a regular twisted algebra untwists to a Lie algebra
/// via alpha^-1 o [,]. Rejects non-regular input.
HomLieAlgebra induce_lie_from_regular(const HomLieAlgebra& l);
/// (L, [,]) with a homomorphism sigma gives the triple system
/// (L, sigma o [[,],], sigma, sigma).
HomLTS induce_hom_lts_from_lie(const HomLieAlgebra& lie, const Matrix& sigma);

/// X a Y - Y a X, the commutator of the product twisted by a fixed a.
Matrix isotope_commutator(const Matrix& x, const Matrix& y, const Matrix& a);

/// A triple system whose twisting maps coincide and form an automorphism.
/// Construction verifies skew storage, alpha1 = alpha2, invertibility and
/// bracket preservation; the inverse is cached.
class RegularHomLTS {
public:
    explicit RegularHomLTS(HomLTS sys);

    const HomLTS& system() const { return sys_; }
    std::size_t dim() const { return sys_.dim; }
    const Matrix& alpha() const { return sys_.alpha1; }
    const Matrix& alpha_inv() const { return alpha_inv_; }

    const Vector& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
        return sys_.bracket3[i][j][k];
    }
    Vector bracket(const Vector& a, const Vector& b, const Vector& c) const {
        return eval_bracket3(sys_, a, b, c);
    }

private:
    HomLTS sys_;
    Matrix alpha_inv_;
};

/// The identity obtained from the Nambu identity of a regular system by
/// applying alpha^-1 to every argument: with [x,y,z]' = alpha^-1([x,y,z]),
///   [a,b,[c,d,e]'] - [c,d,[a,b,e]'] = [c,[a,b,d]',e] + [[a,b,c]',d,e].
/// Entries: "shifted_nambu" for the identity itself, "shifted_nambu_alt"
/// for the variant whose middle term ends in d instead of e, and
/// "alt_masks_main_failure", which fails if some tuple satisfies the
/// variant while violating the identity.
AxiomReport check_regular_nambu(const RegularHomLTS& t);

} // namespace homlts
