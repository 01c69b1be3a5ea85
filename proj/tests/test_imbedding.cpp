#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "homlts/errors.hpp"
#include "homlts/imbedding.hpp"

using namespace homlts;
using namespace homlts::testing;

namespace {

HomLieAlgebra even_component(const GradedLieWithAut& g) {
    const std::size_t m = g.even.size();
    Tensor2 bracket(m, std::vector<Vector>(m, zero_vector(m)));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            for (std::size_t r = 0; r < m; ++r)
                bracket[p][q][r] = g.lie.bracket[g.even[p]][g.even[q]][g.even[r]];
    return HomLieAlgebra{m, std::move(bracket), Matrix::identity(m)};
}

Vector random_vector(std::size_t n, Rng& rng) {
    Vector v(n);
    for (auto& x : v)
        x = rng.pick(-3, 3);
    return v;
}

} // namespace

TEST_CASE("wedge enumeration and coordinates") {
    CHECK(wedge_pairs(2) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(wedge_pairs(3) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(wedge_slot(0, 2, 3) == 1);

    // antisymmetry: e1 ^ e0 has coordinate -1 at slot (0,1)
    const Vector w = wedge_coords(unit_vector(3, 1), unit_vector(3, 0));
    CHECK(w[wedge_slot(0, 1, 3)] == -1);
    CHECK(w[wedge_slot(0, 2, 3)] == 0);
    CHECK(vec_is_zero(wedge_coords(unit_vector(3, 1), unit_vector(3, 1))));
}

TEST_CASE("exterior square is functorial") {
    CHECK(exterior_square(Matrix::identity(4)) == Matrix::identity(6));
    Rng rng(17);
    const Matrix a = random_unimodular(4, rng);
    const Matrix b = random_unimodular(4, rng);
    CHECK(exterior_square(a * b) == exterior_square(a) * exterior_square(b));
}

TEST_CASE("wedge action on the stated examples") {
    const RegularHomLTS t = sl2_lts();
    const std::size_t w = 3;
    CHECK(wedge_action(Matrix::zero(3, 3), unit_vector(w, 0), t) == zero_vector(w));

    // D_{ef} = diag(2,0,-2) acting on e ^ h gives 2 (e ^ h)
    const Matrix d = inner_derivation(t, unit_vector(3, 0), unit_vector(3, 2));
    const Vector image = wedge_action(d, unit_vector(w, wedge_slot(0, 1, 3)), t);
    CHECK(image == vec_scaled(Rational(2), unit_vector(w, wedge_slot(0, 1, 3))));
}

TEST_CASE("pair map is equivariant for the wedge action") {
    for (const auto& t : {sl2_lts(), sl2_lts_twisted()}) {
        const std::size_t n = t.dim();
        const std::size_t w = n * (n - 1) / 2;
        const Matrix pair_map = pair_to_derivation_map(t);
        const TwistedDerivationSpace space = compute_twisted_derivations(t);
        for (std::size_t k = 0; k < space.space_dim(); ++k) {
            const Matrix d = space.element(k);
            const Matrix act = wedge_action_matrix(d, t);
            for (std::size_t s = 0; s < w; ++s) {
                const Vector lhs = pair_map.apply(act.col(s));
                const Matrix rhs =
                    derivation_bracket(d, unvec(pair_map.col(s), n), t);
                CHECK(lhs == vec(rhs));
            }
        }
        // image of the pair map is exactly the inner-derivation span
        const InnerDerivationSpace inner = compute_inner_derivations(t);
        CHECK(Subspace::from_matrix_rows(pair_map.transpose()) == inner.basis);
    }
}

TEST_CASE("relation submodule on the stated examples") {
    CHECK(wedge_relations(zero_lts(3)).dim() == 0);
    CHECK(wedge_relations(zero_lts(1)).dim() == 0);
    // for the sl2 system every spanning instance collapses to zero
    CHECK(wedge_relations(sl2_lts()).dim() == 0);
}

TEST_CASE("direct sums produce nonzero relations: exactly the cross wedges") {
    // sl2 + a zero line: pairing a derivation with a cross wedge lands the
    // whole cross space in the relation span, and nothing else
    const HomLTS sum = direct_sum(sl2_lts().system(), zero_lts(1).system());
    const RegularHomLTS t{sum};
    const Subspace relations = wedge_relations(t);
    std::vector<Vector> cross;
    for (std::size_t i = 0; i < 3; ++i)
        cross.push_back(unit_vector(6, wedge_slot(i, 3, 4)));
    CHECK(relations == Subspace::span_of(cross, 6));

    // quotient machinery with a nontrivial kill: U has even part of
    // dimension 3 (the sl2 wedges) and a bijective cover
    const UniversalAlgebra u = universal_algebra(t);
    CHECK(u.wedge_quot.dim() == 3);
    CHECK(u.target.dim() == 7);
    CHECK(u.standard.target.dim() == 7);
    CHECK(kernel(u.cover).dim() == 0);
    CHECK(check_central_extension(u));
}

TEST_CASE("random instantiations add nothing to the relation span") {
    Rng rng(23);
    for (const auto& t : {sl2_lts(), sl2_lts_twisted(), sl2_lts_involution()}) {
        const std::size_t n = t.dim();
        const std::size_t w = n * (n - 1) / 2;
        const Subspace relations = wedge_relations(t);
        const Matrix pair_map = pair_to_derivation_map(t);
        for (int iter = 0; iter < 25; ++iter) {
            const Vector x = random_vector(w, rng);
            const Matrix d = unvec(pair_map.apply(x), n);
            CHECK(relations.contains(wedge_action(d, x, t)));
        }
    }
}

TEST_CASE("relation submodule is closed under the derivation action") {
    for (const auto& t : {sl2_lts_twisted(), zero_lts(4)}) {
        const Subspace relations = wedge_relations(t);
        const TwistedDerivationSpace space = compute_twisted_derivations(t);
        for (std::size_t k = 0; k < space.space_dim(); ++k) {
            const Matrix act = wedge_action_matrix(space.element(k), t);
            for (std::size_t r = 0; r < relations.dim(); ++r)
                CHECK(relations.contains(act.apply(relations.basis().row(r))));
        }
    }
}

TEST_CASE("standard imbedding of a zero-bracket system is the system itself") {
    for (std::size_t n : {1u, 2u, 4u}) {
        const RegularHomLTS t = zero_lts(n);
        const StandardImbedding s = standard_imbedding(t);
        CHECK(s.target.dim() == n);
        CHECK(s.inner_dim() == 0);
        CHECK(s.target.aut() == t.alpha());
        CHECK(check_graded_lie(s.target).all_pass());
    }
}

TEST_CASE("standard imbedding of the sl2 system") {
    const RegularHomLTS t = sl2_lts();
    const StandardImbedding s = standard_imbedding(t);
    CHECK(s.target.dim() == 6);
    CHECK(s.inner_dim() == 3);
    CHECK(check_graded_lie(s.target).all_pass());
    CHECK(verify_imbedding(s.inclusion, t, s.target.lie));

    // even component is isomorphic to sl2: map x -> ad(x) into inner coordinates
    const HomLieAlgebra even = even_component(s.target);
    const HomLieAlgebra lie = sl2();
    Matrix iso(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix ad(3, 3);
        for (std::size_t j = 0; j < 3; ++j)
            ad.set_col(j, eval_bracket(lie, unit_vector(3, i), unit_vector(3, j)));
        const auto coords = s.inner.basis.coordinates_of(vec(ad));
        REQUIRE(coords.has_value());
        iso.set_col(i, *coords);
    }
    CHECK(rank(iso) == 3);
    CHECK(is_lie_homomorphism(iso, lie, even));
}

TEST_CASE("standard imbedding of the twisted sl2 system passes the whole suite") {
    const RegularHomLTS t = sl2_lts_twisted();
    const StandardImbedding s = standard_imbedding(t);
    CHECK(check_graded_lie(s.target).all_pass());
    CHECK(check_grading(s.target));
    CHECK(verify_imbedding(s.inclusion, t, s.target.lie));

    // the same extension procedure applied to the inverse twist inverts the
    // automorphism: build the even block from the inverse exterior square
    const Matrix pair_map = s.inner.generator_table.transpose();
    const Matrix square_inv = exterior_square(t.alpha_inv());
    Matrix even_inv(s.inner_dim(), s.inner_dim());
    for (std::size_t k = 0; k < s.inner_dim(); ++k) {
        const auto preimage = solve(pair_map, s.inner.basis.basis().row(k));
        REQUIRE(preimage.has_value());
        const auto coords =
            s.inner.basis.coordinates_of(pair_map.apply(square_inv.apply(*preimage)));
        REQUIRE(coords.has_value());
        even_inv.set_col(k, *coords);
    }
    const Matrix candidate = block_diag(even_inv, t.alpha_inv());
    CHECK(s.target.aut() * candidate == Matrix::identity(6));
    CHECK(candidate * s.target.aut() == Matrix::identity(6));
}

TEST_CASE("imbedding checks: zero map, inclusion, and a twisted negative") {
    const RegularHomLTS t = sl2_lts();
    const StandardImbedding s = standard_imbedding(t);

    CHECK(verify_imbedding(Matrix::zero(6, 3), t, s.target.lie));
    CHECK(verify_imbedding(s.inclusion, t, s.target.lie));

    // replace the odd block of the automorphism by the involution: the
    // compatibility square now fails, with the witness naming the column
    HomLieAlgebra tampered = s.target.lie;
    const Matrix omega = sl2_involution();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            tampered.alpha(3 + i, 3 + j) = omega(i, j);
    const AxiomReport report = check_imbedding(s.inclusion, t, tampered);
    CHECK_FALSE(report.find("imbedding_twist")->pass);
    CHECK_FALSE(report.find("imbedding_twist")->witness.empty());
}

TEST_CASE("grading checks") {
    GradedLieWithAut abelian{{2, Tensor2(2, std::vector<Vector>(2, zero_vector(2))),
                              Matrix::identity(2)},
                             {0},
                             {1}};
    CHECK(check_grading(abelian));

    const StandardImbedding s = standard_imbedding(sl2_lts());
    CHECK(check_grading(s.target));

    // sl2 with even = {e}, odd = {h, f}: [h,f] = -2f lands in the odd part
    GradedLieWithAut bad{sl2(), {0}, {1, 2}};
    CHECK_FALSE(check_grading(bad));
}

TEST_CASE("odd generation for the standard imbedding and a degenerate counterexample") {
    CHECK(generated_by_odd(standard_imbedding(sl2_lts()).target));
    CHECK(generated_by_odd(standard_imbedding(sl2_lts_twisted()).target));

    GradedLieWithAut abelian{{2, Tensor2(2, std::vector<Vector>(2, zero_vector(2))),
                              Matrix::identity(2)},
                             {0},
                             {1}};
    CHECK_FALSE(generated_by_odd(abelian)); // the even line is never reached
}

TEST_CASE("one-sided mixed action violates the alternating law while the symmetrized bracket passes") {
    const StandardImbedding s = standard_imbedding(sl2_lts());
    REQUIRE(check_lie(s.target.lie).all_pass());

    // literal reading of the one-sided formula: odd-by-even products dropped
    HomLieAlgebra one_sided = s.target.lie;
    for (std::size_t j : s.target.odd)
        for (std::size_t p : s.target.even)
            one_sided.bracket[j][p] = zero_vector(one_sided.dim);
    const AxiomReport report = check_hom_lie(one_sided);
    CHECK_FALSE(report.find("alternating")->pass);
    CHECK_FALSE(report.find("alternating")->witness.empty());
    CHECK_FALSE(vec_is_zero(report.find("alternating")->defect));

    // equivalently, [x,x] != 0 for a mixed element under the one-sided product
    const Vector x = vec_add(unit_vector(6, 0), unit_vector(6, 3));
    CHECK_FALSE(vec_is_zero(eval_bracket(one_sided, x, x)));
}

TEST_CASE("universal algebra of zero-bracket systems") {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        const RegularHomLTS t = zero_lts(n);
        const UniversalAlgebra u = universal_algebra(t);
        CHECK(u.target.dim() == n * (n - 1) / 2 + n);
        CHECK(u.wedge_quot.killed().dim() == 0);
        CHECK(check_graded_lie(u.target).all_pass());
        CHECK(check_central_extension(u));
        CHECK(generated_by_odd(u.target));

        // the kernel of the cover is the entire even part, and it is central
        const Subspace cover_kernel = kernel(u.cover);
        CHECK(cover_kernel.dim() == n * (n - 1) / 2);
        CHECK(center_of(u.target.lie).contains_subspace(cover_kernel));
    }
}

TEST_CASE("universal algebra of the sl2 systems") {
    for (const auto& t : {sl2_lts(), sl2_lts_twisted(), sl2_lts_involution()}) {
        const UniversalAlgebra u = universal_algebra(t);
        CHECK(u.target.dim() == (3 - u.wedge_quot.killed().dim()) + 3);
        CHECK(check_graded_lie(u.target).all_pass());
        CHECK(check_central_extension(u));
        CHECK(generated_by_odd(u.target));
        CHECK(verify_imbedding(u.inclusion, t, u.target.lie));
        CHECK(u.cover * u.inclusion == u.standard.inclusion);
    }
    // for the identity twist the relations vanish and the cover is bijective
    const UniversalAlgebra u = universal_algebra(sl2_lts());
    CHECK(u.wedge_quot.killed().dim() == 0);
    CHECK(kernel(u.cover).dim() == 0);
}

TEST_CASE("the automorphism of the universal algebra inverts through the inverse twist") {
    const UniversalAlgebra u = universal_algebra(sl2_lts_twisted());
    const RegularHomLTS& t = u.source;
    const std::size_t e = u.wedge_quot.dim();
    const Matrix even_inv = u.wedge_quot.projection_matrix() *
                            exterior_square(t.alpha_inv()) * u.wedge_quot.lift_matrix();
    const Matrix candidate = block_diag(even_inv, t.alpha_inv());
    CHECK(u.target.aut() * candidate == Matrix::identity(e + t.dim()));
    CHECK(candidate * u.target.aut() == Matrix::identity(e + t.dim()));
}

TEST_CASE("central extension check fails on a corrupted algebra") {
    UniversalAlgebra u = universal_algebra(sl2_lts());
    REQUIRE(check_central_extension(u));
    // perturb one even-by-odd structure constant (skew-consistently)
    const std::size_t even0 = 0, odd0 = u.wedge_quot.dim();
    u.target.lie.bracket[even0][odd0] =
        vec_add(u.target.lie.bracket[even0][odd0], unit_vector(u.target.dim(), odd0));
    u.target.lie.bracket[odd0][even0] =
        vec_sub(u.target.lie.bracket[odd0][even0], unit_vector(u.target.dim(), odd0));
    CHECK_FALSE(check_central_extension(u));
}

TEST_CASE("universal algebra across the randomized induced corpus") {
    for (const auto& pair : random_lie_aut_pairs(6, 404)) {
        if (pair.lie.dim > 3)
            continue; // keep the wedge systems small in the unit suite
        const RegularHomLTS t{induce_hom_lts_from_lie(pair.lie, pair.aut)};
        const UniversalAlgebra u = universal_algebra(t);
        CHECK(check_graded_lie(u.target).all_pass());
        CHECK(check_central_extension(u));
        CHECK(generated_by_odd(u.target));
        CHECK(u.cover * u.inclusion == u.standard.inclusion);
    }
}
