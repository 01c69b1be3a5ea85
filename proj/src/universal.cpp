#include "homlts/universal.hpp"

#include "homlts/errors.hpp"

namespace homlts {

namespace {

/// Assuming delta already vanishes on every seed vector, propagate
/// agreement across brackets of the growing span; the final answer is
/// whether delta vanishes everywhere.
bool agreement_spreads(const HomLieAlgebra& plain, const Matrix& delta,
                       const std::vector<Vector>& seed) {
    Subspace span = Subspace::span_of(seed, plain.dim);
    for (std::size_t round = 0; round < plain.dim; ++round) {
        std::vector<Vector> next;
        for (std::size_t p = 0; p < span.dim(); ++p)
            for (std::size_t q = p + 1; q < span.dim(); ++q) {
                Vector w = eval_bracket(plain, span.basis().row(p), span.basis().row(q));
                if (!vec_is_zero(delta.apply(w)))
                    return false;
                next.push_back(std::move(w));
            }
        const Subspace grown = span.sum(Subspace::span_of(next, plain.dim));
        if (grown.dim() == span.dim())
            break;
        span = grown;
    }
    return delta.is_zero();
}

} // namespace

UniversalFactorization factor_imbedding(const UniversalAlgebra& u, const Matrix& eps,
                                        const HomLieAlgebra& target) {
    validate_shape(target);
    const RegularHomLTS& t = u.source;
    const std::size_t n = t.dim();
    if (eps.rows() != target.dim || eps.cols() != n)
        throw MathError("imbedding candidate has wrong shape");
    if (!verify_imbedding(eps, t, target))
        throw MathError("not an imbedding");

    const HomLieAlgebra plain{target.dim, target.bracket, Matrix::identity(target.dim)};

    // bracket map on wedge coordinates: e_i ^ e_j -> [eps e_i, eps e_j]
    const std::size_t w = n * (n - 1) / 2;
    Matrix zeta(target.dim, w);
    for (const auto& [i, j] : wedge_pairs(n))
        zeta.set_col(wedge_slot(i, j, n), eval_bracket(plain, eps.col(i), eps.col(j)));

    Matrix on_quotient;
    try {
        on_quotient = factor_through(zeta, u.wedge_quot);
    } catch (const MathError&) {
        throw MathError("bracket map does not kill the relation submodule");
    }

    UniversalFactorization result{u, target, eps, hcat(on_quotient, eps), {}};
    const Matrix& phi = result.morphism;

    result.verdicts.extends_inclusion = (phi * u.inclusion == eps);

    bool hom = true;
    const HomLieAlgebra& ulie = u.target.lie;
    for (std::size_t i = 0; i < ulie.dim && hom; ++i)
        for (std::size_t j = 0; j < ulie.dim && hom; ++j)
            if (phi.apply(ulie.bracket[i][j]) != eval_bracket(plain, phi.col(i), phi.col(j)))
                hom = false;
    result.verdicts.lie_homomorphism = hom;

    result.verdicts.commutes_with_aut = (phi * u.target.aut() == target.alpha * phi);
    return result;
}

bool check_uniqueness(const UniversalAlgebra& u, const HomLieAlgebra& target,
                      const Matrix& f, const Matrix& g) {
    validate_shape(target);
    const std::size_t dim = u.target.dim();
    if (f.rows() != target.dim || f.cols() != dim || g.rows() != target.dim ||
        g.cols() != dim)
        throw MathError("morphism candidates have wrong shape");
    const Matrix delta = f - g;
    if (!(delta * u.inclusion).is_zero())
        return true; // they already differ on the system itself
    std::vector<Vector> seed;
    for (std::size_t i : u.target.odd)
        seed.push_back(unit_vector(dim, i));
    const HomLieAlgebra plain{dim, u.target.lie.bracket, Matrix::identity(dim)};
    return agreement_spreads(plain, delta, seed);
}

Matrix universal_on_morphism(const Matrix& theta, const UniversalAlgebra& ut,
                             const UniversalAlgebra& us) {
    if (!is_lts_homomorphism(theta, ut.source.system(), us.source.system()))
        throw MathError("theta is not a homomorphism of the triple systems");
    const Matrix eps = us.inclusion * theta;
    UniversalFactorization fact = factor_imbedding(ut, eps, us.target.lie);
    if (!fact.verdicts.all())
        throw MathError("universal image of the morphism failed its contracts");
    return fact.morphism;
}

Matrix universal_on_morphism(const Matrix& theta, const RegularHomLTS& t,
                             const RegularHomLTS& s) {
    return universal_on_morphism(theta, universal_algebra(t), universal_algebra(s));
}

bool is_candidate_image(const GradedLieWithAut& g) {
    return check_graded_lie(g).all_pass() && generated_by_odd(g);
}

namespace {

void require_graded_automorphism(const GradedLieWithAut& g, const Matrix& f) {
    if (f.rows() != g.dim() || f.cols() != g.dim())
        throw MathError("graded automorphism candidate has wrong shape");
    GradedLieWithAut candidate{{g.dim(), g.lie.bracket, f}, g.even, g.odd};
    const AxiomReport report = check_graded_lie(candidate);
    if (!report.find("aut_invertible")->pass || !report.find("aut_homomorphism")->pass ||
        !report.find("aut_graded")->pass)
        throw MathError("map is not a graded automorphism");
}

} // namespace

bool aut_determined_by_odd(const GradedLieWithAut& g, const Matrix& f, const Matrix& g2) {
    require_graded_automorphism(g, f);
    require_graded_automorphism(g, g2);
    const Matrix delta = f - g2;
    for (std::size_t i : g.odd)
        if (!vec_is_zero(delta.col(i)))
            return true; // they already differ on the odd component
    std::vector<Vector> seed;
    for (std::size_t i : g.odd)
        seed.push_back(unit_vector(g.dim(), i));
    const HomLieAlgebra plain{g.dim(), g.lie.bracket, Matrix::identity(g.dim())};
    return agreement_spreads(plain, delta, seed);
}

} // namespace homlts
