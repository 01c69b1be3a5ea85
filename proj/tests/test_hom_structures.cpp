#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "homlts/errors.hpp"
#include "homlts/hom_structures.hpp"

using namespace homlts;
using namespace homlts::testing;

namespace {

// hand-coded sl2 bracket in the basis (e, h, f), independent of the tensors
Vector sl2_hand_bracket(const Vector& a, const Vector& b) {
    // [e,h] = -2e, [e,f] = h, [h,f] = -2f
    Vector out = zero_vector(3);
    out[0] += a[0] * b[1] * -2 - b[0] * a[1] * -2;
    out[1] += a[0] * b[2] - b[0] * a[2];
    out[2] += a[1] * b[2] * -2 - b[1] * a[2] * -2;
    return out;
}

} // namespace

TEST_CASE("checked constructors reject broken skew storage") {
    Tensor2 c(2, std::vector<Vector>(2, zero_vector(2)));
    c[0][1] = Vector{Rational(1), Rational(0)};
    CHECK_THROWS_AS(make_hom_lie_algebra(2, c, Matrix::identity(2)), MathError);
    c[1][0] = Vector{Rational(-1), Rational(0)};
    CHECK_NOTHROW(make_hom_lie_algebra(2, c, Matrix::identity(2)));
    c[0][0] = Vector{Rational(1), Rational(0)};
    CHECK_THROWS_AS(make_hom_lie_algebra(2, c, Matrix::identity(2)), MathError);

    Tensor3 d(2, std::vector<std::vector<Vector>>(2, std::vector<Vector>(2, zero_vector(2))));
    d[0][0][1] = Vector{Rational(1), Rational(0)};
    CHECK_THROWS_AS(make_hom_lts(2, d, Matrix::identity(2), Matrix::identity(2)), MathError);
}

TEST_CASE("hand expansion of the sl2 cyclic identity matches the checker") {
    const HomLieAlgebra l = sl2();
    // one nontrivial basis triple, expanded with the independent table
    const Vector e = unit_vector(3, 0), h = unit_vector(3, 1), f = unit_vector(3, 2);
    Vector sum = sl2_hand_bracket(e, sl2_hand_bracket(h, f));
    sum = vec_add(sum, sl2_hand_bracket(h, sl2_hand_bracket(f, e)));
    sum = vec_add(sum, sl2_hand_bracket(f, sl2_hand_bracket(e, h)));
    CHECK(vec_is_zero(sum));
    // and the tensors agree with the table on every basis pair
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(l.bracket[i][j] == sl2_hand_bracket(unit_vector(3, i), unit_vector(3, j)));
    CHECK(check_hom_lie(l).all_pass());
}

TEST_CASE("hom-Lie axioms hold across the induced corpus") {
    for (const auto& l : canonical_hom_lie_corpus())
        CHECK(check_hom_lie(l).all_pass());
}

TEST_CASE("the untwisted sl2 bracket with a diagonal twist slot is not a twisted algebra") {
    // the twisted cyclic identity needs the induced bracket, not the raw one
    HomLieAlgebra raw = sl2();
    raw.alpha = sl2_diag_twist();
    const AxiomReport report = check_hom_lie(raw);
    CHECK(report.find("alternating")->pass);
    CHECK_FALSE(report.find("twisted_jacobi")->pass);
    CHECK_FALSE(report.find("twisted_jacobi")->witness.empty());
}

TEST_CASE("single-entry perturbations fail with a concrete witness") {
    SUBCASE("diagonal entry breaks the alternating identity") {
        HomLieAlgebra bad = sl2();
        bad.bracket[0][0] = unit_vector(3, 0);
        const AxiomReport report = check_hom_lie(bad);
        const auto* entry = report.find("alternating");
        REQUIRE_FALSE(entry->pass);
        CHECK(entry->witness == std::vector<std::size_t>{0, 0});
        CHECK_FALSE(vec_is_zero(entry->defect));
    }
    SUBCASE("one-sided entry breaks skew symmetry") {
        HomLieAlgebra bad = sl2();
        bad.bracket[0][1] = vec_add(bad.bracket[0][1], unit_vector(3, 0));
        const AxiomReport report = check_hom_lie(bad);
        const auto* entry = report.find("alternating");
        REQUIRE_FALSE(entry->pass);
        CHECK(entry->witness == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("skew-consistent perturbation breaks the cyclic identity") {
        HomLieAlgebra bad = sl2();
        bad.bracket[0][1] = vec_add(bad.bracket[0][1], unit_vector(3, 1));
        bad.bracket[1][0] = vec_sub(bad.bracket[1][0], unit_vector(3, 1));
        const AxiomReport report = check_hom_lie(bad);
        CHECK(report.find("alternating")->pass);
        CHECK_FALSE(report.find("twisted_jacobi")->pass);
        CHECK_FALSE(vec_is_zero(report.find("twisted_jacobi")->defect));
    }
}

TEST_CASE("hom-LTS axioms: zero bracket and the induced sl2 system") {
    CHECK(check_hom_lts(zero_lts(3).system()).all_pass());
    CHECK(check_hom_lts(sl2_lts().system()).all_pass());

    HomLTS bad = sl2_lts().system();
    bad.bracket3[0][1][2] = vec_add(bad.bracket3[0][1][2], unit_vector(3, 0));
    bad.bracket3[1][0][2] = vec_sub(bad.bracket3[1][0][2], unit_vector(3, 0));
    const AxiomReport report = check_hom_lts(bad);
    CHECK(report.find("left_alternating")->pass);
    CHECK_FALSE(report.all_pass());
    bool witnessed = false;
    for (const auto& e : report.entries)
        if (!e.pass && !e.witness.empty() && !vec_is_zero(e.defect))
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("triple-system homomorphism checks") {
    const RegularHomLTS t = sl2_lts_twisted();
    CHECK(is_lts_homomorphism(Matrix::identity(3), t.system(), t.system()));
    CHECK(is_lts_homomorphism(Matrix::zero(3, 3), t.system(), t.system()));
    // the twist of a multiplicative system is itself a homomorphism
    CHECK(is_lts_homomorphism(t.alpha(), t.system(), t.system()));
    CHECK_THROWS_AS(is_lts_homomorphism(Matrix::identity(2), t.system(), t.system()),
                    MathError);
}

TEST_CASE("Lie homomorphism checks on sl2") {
    const HomLieAlgebra l = sl2();
    CHECK(is_lie_homomorphism(Matrix::identity(3), l, l));
    CHECK(is_lie_homomorphism(sl2_diag_twist(), l, l));
    CHECK(is_lie_homomorphism(sl2_involution(), l, l));
    Matrix not_hom = Matrix::identity(3);
    not_hom(0, 1) = 1;
    CHECK_FALSE(is_lie_homomorphism(not_hom, l, l));
}

TEST_CASE("twist classification") {
    CHECK(classify_twist(sl2()) == Twist::regular);

    HomLieAlgebra zero_twist = abelian_lie(2);
    zero_twist.alpha = Matrix::zero(2, 2);
    CHECK(classify_twist(zero_twist) == Twist::multiplicative);

    HomLieAlgebra diag = sl2();
    diag.alpha = sl2_diag_twist();
    CHECK(classify_twist(diag) == Twist::regular);

    // the zero map is a homomorphism of any bracket, but never invertible
    HomLieAlgebra broken = sl2();
    broken.alpha = Matrix::zero(3, 3);
    CHECK(classify_twist(broken) == Twist::multiplicative);

    Matrix shear = Matrix::identity(3);
    shear(0, 1) = 1; // not a homomorphism of sl2
    HomLieAlgebra sheared = sl2();
    sheared.alpha = shear;
    CHECK(classify_twist(sheared) == Twist::plain);

    HomLTS lts = sl2_lts().system();
    CHECK(classify_twist(lts) == Twist::regular);
    lts.alpha2 = Matrix::zero(3, 3);
    CHECK(classify_twist(lts) == Twist::plain);
}

TEST_CASE("inducing a twisted algebra from sl2") {
    const HomLieAlgebra same = induce_hom_lie(sl2(), Matrix::identity(3));
    CHECK(same.bracket == sl2().bracket);

    const HomLieAlgebra twisted = induce_hom_lie(sl2(), sl2_diag_twist());
    // [h,e] = 8e, [h,f] = -f/2, [e,f] = h
    Vector expect = zero_vector(3);
    expect[0] = 8;
    CHECK(twisted.bracket[1][0] == expect);
    expect = zero_vector(3);
    expect[2] = Rational(-1) / 2;
    CHECK(twisted.bracket[1][2] == expect);
    expect = zero_vector(3);
    expect[1] = 1;
    CHECK(twisted.bracket[0][2] == expect);
    CHECK(check_hom_lie(twisted).all_pass());
    CHECK(classify_twist(twisted) == Twist::regular);

    const HomLieAlgebra flat = induce_hom_lie(abelian_lie(3), sl2_involution());
    for (const auto& row : flat.bracket)
        for (const auto& v : row)
            CHECK(vec_is_zero(v));

    Matrix not_hom = Matrix::identity(3);
    not_hom(0, 1) = 1;
    CHECK_THROWS_AS(induce_hom_lie(sl2(), not_hom), MathError);
}

TEST_CASE("untwisting a regular algebra inverts the twisting construction") {
    CHECK(induce_lie_from_regular(sl2()).bracket == sl2().bracket);

    const HomLieAlgebra twisted = induce_hom_lie(sl2(), sl2_diag_twist());
    const HomLieAlgebra back = induce_lie_from_regular(twisted);
    CHECK(back.bracket == sl2().bracket);
    CHECK(back.alpha.is_identity());

    HomLieAlgebra not_regular = abelian_lie(2);
    not_regular.alpha = Matrix::zero(2, 2);
    CHECK_THROWS_AS(induce_lie_from_regular(not_regular), MathError);
}

TEST_CASE("round trips between twisted algebras and Lie-automorphism pairs") {
    for (const auto& pair : random_lie_aut_pairs(20, 101)) {
        REQUIRE(is_lie_homomorphism(pair.aut, pair.lie, pair.lie));
        const HomLieAlgebra twisted = induce_hom_lie(pair.lie, pair.aut);
        CHECK(check_hom_lie(twisted).all_pass());
        const HomLieAlgebra back = induce_lie_from_regular(twisted);
        CHECK(back.bracket == pair.lie.bracket);
        // and the other composite is the identity on twisted algebras
        const HomLieAlgebra again = induce_hom_lie(back, twisted.alpha);
        CHECK(again.bracket == twisted.bracket);
        CHECK(again.alpha == twisted.alpha);
    }
}

TEST_CASE("the induced triple system of sl2 matches the hand expansion") {
    const HomLTS t = induce_hom_lts_from_lie(sl2(), Matrix::identity(3));
    const Vector e = unit_vector(3, 0), h = unit_vector(3, 1), f = unit_vector(3, 2);
    auto triple = [&](const Vector& a, const Vector& b, const Vector& c) {
        return sl2_hand_bracket(sl2_hand_bracket(a, b), c);
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(t.bracket3[i][j][k] ==
                      triple(unit_vector(3, i), unit_vector(3, j), unit_vector(3, k)));
    // spot values: [e,f,e] = [h,e] = 2e and [e,f,f] = [h,f] = -2f
    CHECK(t.bracket3[0][2][0] == vec_scaled(Rational(2), e));
    CHECK(t.bracket3[0][2][2] == vec_scaled(Rational(-2), f));
    CHECK(vec_is_zero(t.bracket3[0][2][1]));
    CHECK(check_hom_lts(t).all_pass());

    const HomLTS flat = induce_hom_lts_from_lie(abelian_lie(2), Matrix::identity(2));
    for (const auto& plane : flat.bracket3)
        for (const auto& row : plane)
            for (const auto& v : row)
                CHECK(vec_is_zero(v));

    const HomLTS twisted = induce_hom_lts_from_lie(sl2(), sl2_diag_twist());
    CHECK(check_hom_lts(twisted).all_pass());
    CHECK(classify_twist(twisted) == Twist::regular);
}

TEST_CASE("lemma-style property: induced triple systems always pass the axioms") {
    for (const auto& pair : random_lie_aut_pairs(20, 202)) {
        const HomLTS t = induce_hom_lts_from_lie(pair.lie, pair.aut);
        CHECK(check_hom_lts(t).all_pass());
        CHECK(classify_twist(t) == Twist::regular);
    }
}

TEST_CASE("isotope commutator") {
    Rng rng(31);
    auto random3 = [&] {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = rng.pick(-2, 2);
        return m;
    };
    const Matrix x = random3(), y = random3();
    CHECK(isotope_commutator(x, y, Matrix::identity(3)) == x * y - y * x);
    CHECK(isotope_commutator(x, x, random3()).is_zero());

    // commutator in an associative twisted product: the cyclic identity holds,
    // invertible twist or not
    for (int iter = 0; iter < 10; ++iter) {
        const Matrix a = random3();
        const Matrix u = random3(), v = random3(), w = random3();
        const Matrix sum = isotope_commutator(u, isotope_commutator(v, w, a), a) +
                           isotope_commutator(v, isotope_commutator(w, u, a), a) +
                           isotope_commutator(w, isotope_commutator(u, v, a), a);
        CHECK(sum.is_zero());
    }
    CHECK_THROWS_AS(isotope_commutator(x, Matrix::identity(2), Matrix::identity(3)),
                    MathError);
}

TEST_CASE("distinct twisting maps are stored and checked, never promoted") {
    const std::size_t n = 2;
    Tensor3 d(n, std::vector<std::vector<Vector>>(n, std::vector<Vector>(n, zero_vector(n))));
    const HomLTS t = make_hom_lts(n, std::move(d), Matrix::identity(n),
                                  Rational(2) * Matrix::identity(n));
    CHECK(check_hom_lts(t).all_pass()); // zero bracket satisfies everything
    CHECK(classify_twist(t) == Twist::plain);
    CHECK_THROWS_AS(RegularHomLTS{t}, MathError);
}

TEST_CASE("regular construction rejects bad input") {
    HomLTS bad = sl2_lts().system();
    bad.alpha1 = Matrix::zero(3, 3);
    bad.alpha2 = Matrix::zero(3, 3);
    CHECK_THROWS_AS(RegularHomLTS{bad}, MathError); // singular twist

    HomLTS mismatch = sl2_lts().system();
    mismatch.alpha2 = sl2_diag_twist();
    CHECK_THROWS_AS(RegularHomLTS{mismatch}, MathError);

    HomLTS not_auto = sl2_lts().system();
    not_auto.alpha1 = not_auto.alpha2 = Matrix::identity(3);
    not_auto.alpha1(0, 1) = 1;
    not_auto.alpha2(0, 1) = 1;
    CHECK_THROWS_AS(RegularHomLTS{not_auto}, MathError);
}

TEST_CASE("the inverse-shifted identity holds in regular systems and pins the argument order") {
    for (const auto& t : {zero_lts(2), sl2_lts(), sl2_lts_twisted(), sl2_lts_involution()}) {
        const AxiomReport report = check_regular_nambu(t);
        CHECK(report.find("shifted_nambu")->pass);
        // no tuple satisfies the variant while violating the identity
        CHECK(report.find("alt_masks_main_failure")->pass);
    }
    // the variant with the swapped final argument is a genuinely different
    // (and false) statement
    const AxiomReport report = check_regular_nambu(sl2_lts());
    CHECK_FALSE(report.find("shifted_nambu_alt")->pass);
    CHECK_FALSE(report.find("shifted_nambu_alt")->witness.empty());
}

TEST_CASE("the identity follows from the axioms on randomized regular systems") {
    for (const auto& pair : random_lie_aut_pairs(8, 303)) {
        const HomLTS sys = induce_hom_lts_from_lie(pair.lie, pair.aut);
        REQUIRE(check_hom_lts(sys).all_pass());
        CHECK(check_regular_nambu(RegularHomLTS(sys)).find("shifted_nambu")->pass);
    }
}

TEST_CASE("category-square compatibility: a Lie homomorphism commutes with the twists iff it is a morphism of the induced systems") {
    const HomLieAlgebra l = sl2();
    const HomLTS twisted = induce_hom_lts_from_lie(l, sl2_diag_twist());

    // commutes: the twist itself
    CHECK(is_lts_homomorphism(sl2_diag_twist(), twisted, twisted));
    // a Lie homomorphism that does not commute with the twist fails the square
    const Matrix omega = sl2_involution();
    REQUIRE(is_lie_homomorphism(omega, l, l));
    CHECK(omega * sl2_diag_twist() != sl2_diag_twist() * omega);
    CHECK_FALSE(is_lts_homomorphism(omega, twisted, twisted));

    // with the identity twist every Lie automorphism is a morphism
    const HomLTS plain = induce_hom_lts_from_lie(l, Matrix::identity(3));
    CHECK(is_lts_homomorphism(omega, plain, plain));
    CHECK(is_lts_homomorphism(lie_exp_ad(l, unit_vector(3, 0)), plain, plain));

    // biconditional across a grid of automorphism pairs (f, sigma)
    const std::vector<Matrix> autos = {
        Matrix::identity(3), sl2_diag_twist(), sl2_involution(),
        lie_exp_ad(l, unit_vector(3, 0)), lie_exp_ad(l, vec_scaled(Rational(-2), unit_vector(3, 2)))};
    for (const Matrix& sigma : autos) {
        const HomLTS induced = induce_hom_lts_from_lie(l, sigma);
        for (const Matrix& f : autos) {
            REQUIRE(is_lie_homomorphism(f, l, l));
            const bool square = (f * sigma == sigma * f);
            CHECK(square == is_lts_homomorphism(f, induced, induced));
        }
    }
}
