#include "homlts/hom_structures.hpp"

#include "homlts/errors.hpp"

#include <string>
#include <utility>

namespace homlts {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first)
            s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + ")";
}

void fail_entry(AxiomReport::Entry& e, std::vector<std::size_t> witness, Vector defect) {
    if (!e.pass)
        return; // keep the first counterexample
    e.pass = false;
    e.witness = std::move(witness);
    e.defect = std::move(defect);
}

} // namespace

void validate_shape(const HomLieAlgebra& l) {
    if (l.bracket.size() != l.dim)
        throw MathError("bilinear tensor has wrong first dimension");
    for (const auto& row : l.bracket) {
        if (row.size() != l.dim)
            throw MathError("bilinear tensor has wrong second dimension");
        for (const auto& v : row)
            if (v.size() != l.dim)
                throw MathError("bilinear tensor has a coefficient vector of wrong length");
    }
    if (l.alpha.rows() != l.dim || l.alpha.cols() != l.dim)
        throw MathError("twisting map has wrong shape");
}

void validate_shape(const HomLTS& t) {
    if (t.bracket3.size() != t.dim)
        throw MathError("trilinear tensor has wrong first dimension");
    for (const auto& plane : t.bracket3) {
        if (plane.size() != t.dim)
            throw MathError("trilinear tensor has wrong second dimension");
        for (const auto& row : plane) {
            if (row.size() != t.dim)
                throw MathError("trilinear tensor has wrong third dimension");
            for (const auto& v : row)
                if (v.size() != t.dim)
                    throw MathError("trilinear tensor has a coefficient vector of wrong length");
        }
    }
    if (t.alpha1.rows() != t.dim || t.alpha1.cols() != t.dim ||
        t.alpha2.rows() != t.dim || t.alpha2.cols() != t.dim)
        throw MathError("twisting map has wrong shape");
}

HomLieAlgebra make_hom_lie_algebra(std::size_t dim, Tensor2 bracket, Matrix alpha) {
    HomLieAlgebra l{dim, std::move(bracket), std::move(alpha)};
    validate_shape(l);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const Vector sum = vec_add(l.bracket[i][j], l.bracket[j][i]);
            if (!vec_is_zero(sum))
                throw MathError("structure constants are not skew at " + tuple_str({i, j}));
        }
    return l;
}

HomLTS make_hom_lts(std::size_t dim, Tensor3 bracket3, Matrix alpha1, Matrix alpha2) {
    HomLTS t{dim, std::move(bracket3), std::move(alpha1), std::move(alpha2)};
    validate_shape(t);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Vector sum = vec_add(t.bracket3[i][j][k], t.bracket3[j][i][k]);
                if (!vec_is_zero(sum))
                    throw MathError("structure constants are not left skew at " +
                                    tuple_str({i, j, k}));
            }
    return t;
}

Vector eval_bracket(const HomLieAlgebra& l, const Vector& a, const Vector& b) {
    Vector out(l.dim, Rational(0));
    for (std::size_t i = 0; i < l.dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < l.dim; ++j) {
            if (b[j] == 0)
                continue;
            vec_axpy(out, a[i] * b[j], l.bracket[i][j]);
        }
    }
    return out;
}

Vector eval_bracket3(const HomLTS& t, const Vector& a, const Vector& b, const Vector& c) {
    Vector out(t.dim, Rational(0));
    for (std::size_t i = 0; i < t.dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < t.dim; ++j) {
            if (b[j] == 0)
                continue;
            const Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < t.dim; ++k) {
                if (c[k] == 0)
                    continue;
                vec_axpy(out, ab * c[k], t.bracket3[i][j][k]);
            }
        }
    }
    return out;
}

bool AxiomReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass)
            return false;
    return true;
}

const AxiomReport::Entry* AxiomReport::find(std::string_view axiom) const {
    for (const auto& e : entries)
        if (e.axiom == axiom)
            return &e;
    return nullptr;
}

AxiomReport check_hom_lie(const HomLieAlgebra& l) {
    validate_shape(l);
    AxiomReport report;
    report.entries.reserve(2);
    auto& alternating = report.entries.emplace_back(AxiomReport::Entry{"alternating"});
    for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t j = i; j < l.dim; ++j) {
            const Vector defect = vec_add(l.bracket[i][j], l.bracket[j][i]);
            if (!vec_is_zero(defect))
                fail_entry(alternating, {i, j}, i == j ? l.bracket[i][i] : defect);
        }

    auto& jacobi = report.entries.emplace_back(AxiomReport::Entry{"twisted_jacobi"});
    std::vector<Vector> twisted(l.dim);
    for (std::size_t i = 0; i < l.dim; ++i)
        twisted[i] = l.alpha.col(i);
    for (std::size_t a = 0; a < l.dim; ++a)
        for (std::size_t b = 0; b < l.dim; ++b)
            for (std::size_t c = 0; c < l.dim; ++c) {
                Vector sum = eval_bracket(l, twisted[a], l.bracket[b][c]);
                sum = vec_add(sum, eval_bracket(l, twisted[b], l.bracket[c][a]));
                sum = vec_add(sum, eval_bracket(l, twisted[c], l.bracket[a][b]));
                if (!vec_is_zero(sum))
                    fail_entry(jacobi, {a, b, c}, std::move(sum));
            }
    return report;
}

AxiomReport check_lie(const HomLieAlgebra& l) {
    HomLieAlgebra untwisted{l.dim, l.bracket, Matrix::identity(l.dim)};
    AxiomReport report = check_hom_lie(untwisted);
    for (auto& e : report.entries)
        if (e.axiom == "twisted_jacobi")
            e.axiom = "jacobi";
    return report;
}

AxiomReport check_hom_lts(const HomLTS& t) {
    validate_shape(t);
    AxiomReport report;
    report.entries.reserve(3);
    auto& alternating = report.entries.emplace_back(AxiomReport::Entry{"left_alternating"});
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = i; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k) {
                const Vector defect = vec_add(t.bracket3[i][j][k], t.bracket3[j][i][k]);
                if (!vec_is_zero(defect))
                    fail_entry(alternating, {i, j, k},
                               i == j ? t.bracket3[i][i][k] : defect);
            }

    auto& cyclic = report.entries.emplace_back(AxiomReport::Entry{"ternary_cyclic"});
    for (std::size_t a = 0; a < t.dim; ++a)
        for (std::size_t b = 0; b < t.dim; ++b)
            for (std::size_t c = 0; c < t.dim; ++c) {
                Vector sum = vec_add(t.bracket3[a][b][c],
                                     vec_add(t.bracket3[b][c][a], t.bracket3[c][a][b]));
                if (!vec_is_zero(sum))
                    fail_entry(cyclic, {a, b, c}, std::move(sum));
            }

    auto& nambu = report.entries.emplace_back(AxiomReport::Entry{"hom_nambu"});
    std::vector<Vector> t1(t.dim), t2(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i) {
        t1[i] = t.alpha1.col(i);
        t2[i] = t.alpha2.col(i);
    }
    for (std::size_t a = 0; a < t.dim; ++a)
        for (std::size_t b = 0; b < t.dim; ++b)
            for (std::size_t c = 0; c < t.dim; ++c)
                for (std::size_t d = 0; d < t.dim; ++d)
                    for (std::size_t e = 0; e < t.dim; ++e) {
                        Vector lhs = eval_bracket3(t, t1[a], t2[b], t.bracket3[c][d][e]);
                        Vector rhs = eval_bracket3(t, t.bracket3[a][b][c], t1[d], t2[e]);
                        rhs = vec_add(rhs, eval_bracket3(t, t1[c], t.bracket3[a][b][d], t2[e]));
                        rhs = vec_add(rhs, eval_bracket3(t, t1[c], t2[d], t.bracket3[a][b][e]));
                        const Vector defect = vec_sub(lhs, rhs);
                        if (!vec_is_zero(defect))
                            fail_entry(nambu, {a, b, c, d, e}, defect);
                    }
    return report;
}

bool is_lie_homomorphism(const Matrix& f, const HomLieAlgebra& from, const HomLieAlgebra& to) {
    validate_shape(from);
    validate_shape(to);
    if (f.rows() != to.dim || f.cols() != from.dim)
        throw MathError("homomorphism candidate has wrong shape");
    if (f * from.alpha != to.alpha * f)
        return false;
    for (std::size_t i = 0; i < from.dim; ++i)
        for (std::size_t j = 0; j < from.dim; ++j)
            if (f.apply(from.bracket[i][j]) != eval_bracket(to, f.col(i), f.col(j)))
                return false;
    return true;
}

bool is_lts_homomorphism(const Matrix& f, const HomLTS& from, const HomLTS& to) {
    validate_shape(from);
    validate_shape(to);
    if (f.rows() != to.dim || f.cols() != from.dim)
        throw MathError("homomorphism candidate has wrong shape");
    if (f * from.alpha1 != to.alpha1 * f || f * from.alpha2 != to.alpha2 * f)
        return false;
    for (std::size_t i = 0; i < from.dim; ++i)
        for (std::size_t j = 0; j < from.dim; ++j)
            for (std::size_t k = 0; k < from.dim; ++k)
                if (f.apply(from.bracket3[i][j][k]) !=
                    eval_bracket3(to, f.col(i), f.col(j), f.col(k)))
                    return false;
    return true;
}

std::string to_string(Twist t) {
    switch (t) {
    case Twist::plain: return "plain";
    case Twist::multiplicative: return "multiplicative";
    case Twist::regular: return "regular";
    }
    return "?";
}

namespace {

bool is_invertible(const Matrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

} // namespace

Twist classify_twist(const HomLieAlgebra& l) {
    validate_shape(l);
    if (!is_lie_homomorphism(l.alpha, l, l))
        return Twist::plain;
    return is_invertible(l.alpha) ? Twist::regular : Twist::multiplicative;
}

Twist classify_twist(const HomLTS& t) {
    validate_shape(t);
    if (t.alpha1 != t.alpha2)
        return Twist::plain;
    if (!is_lts_homomorphism(t.alpha1, t, t))
        return Twist::plain;
    return is_invertible(t.alpha1) ? Twist::regular : Twist::multiplicative;
}

HomLieAlgebra induce_hom_lie(const HomLieAlgebra& lie, const Matrix& sigma) {
    validate_shape(lie);
    if (!lie.alpha.is_identity())
        throw MathError("induce_hom_lie expects an untwisted Lie algebra");
    if (!is_lie_homomorphism(sigma, lie, lie))
        throw MathError("sigma is not a Lie algebra homomorphism");
    Tensor2 twisted(lie.dim, std::vector<Vector>(lie.dim));
    for (std::size_t i = 0; i < lie.dim; ++i)
        for (std::size_t j = 0; j < lie.dim; ++j)
            twisted[i][j] = sigma.apply(lie.bracket[i][j]);
    return make_hom_lie_algebra(lie.dim, std::move(twisted), sigma);
}

HomLieAlgebra induce_lie_from_regular(const HomLieAlgebra& l) {
    if (classify_twist(l) != Twist::regular)
        throw MathError("input is not a regular twisted algebra");
    const Matrix inv = invert(l.alpha);
    Tensor2 untwisted(l.dim, std::vector<Vector>(l.dim));
    for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t j = 0; j < l.dim; ++j)
            untwisted[i][j] = inv.apply(l.bracket[i][j]);
    return make_hom_lie_algebra(l.dim, std::move(untwisted), Matrix::identity(l.dim));
}

HomLTS induce_hom_lts_from_lie(const HomLieAlgebra& lie, const Matrix& sigma) {
    validate_shape(lie);
    if (!lie.alpha.is_identity())
        throw MathError("induce_hom_lts_from_lie expects an untwisted Lie algebra");
    if (!is_lie_homomorphism(sigma, lie, lie))
        throw MathError("sigma is not a Lie algebra homomorphism");
    Tensor3 triple(lie.dim,
                   std::vector<std::vector<Vector>>(lie.dim, std::vector<Vector>(lie.dim)));
    for (std::size_t i = 0; i < lie.dim; ++i)
        for (std::size_t j = 0; j < lie.dim; ++j)
            for (std::size_t k = 0; k < lie.dim; ++k)
                triple[i][j][k] =
                    sigma.apply(eval_bracket(lie, lie.bracket[i][j], unit_vector(lie.dim, k)));
    return make_hom_lts(lie.dim, std::move(triple), sigma, sigma);
}

Matrix isotope_commutator(const Matrix& x, const Matrix& y, const Matrix& a) {
    if (!x.is_square() || x.rows() != y.rows() || x.rows() != a.rows() ||
        !y.is_square() || !a.is_square())
        throw MathError("isotope commutator needs square matrices of equal size");
    return x * a * y - y * a * x;
}

RegularHomLTS::RegularHomLTS(HomLTS sys) : sys_(std::move(sys)) {
    validate_shape(sys_);
    if (sys_.alpha1 != sys_.alpha2)
        throw MathError("regular system needs a single twisting map");
    for (std::size_t i = 0; i < sys_.dim; ++i)
        for (std::size_t j = i; j < sys_.dim; ++j)
            for (std::size_t k = 0; k < sys_.dim; ++k)
                if (!vec_is_zero(vec_add(sys_.bracket3[i][j][k], sys_.bracket3[j][i][k])))
                    throw MathError("structure constants are not left skew at " +
                                    tuple_str({i, j, k}));
    alpha_inv_ = invert(sys_.alpha1); // throws on non-invertible twist
    std::vector<Vector> cols(sys_.dim);
    for (std::size_t i = 0; i < sys_.dim; ++i)
        cols[i] = sys_.alpha1.col(i);
    for (std::size_t i = 0; i < sys_.dim; ++i)
        for (std::size_t j = 0; j < sys_.dim; ++j)
            for (std::size_t k = 0; k < sys_.dim; ++k)
                if (sys_.alpha1.apply(sys_.bracket3[i][j][k]) !=
                    eval_bracket3(sys_, cols[i], cols[j], cols[k]))
                    throw MathError("twisting map is not an automorphism of the bracket");
}

AxiomReport check_regular_nambu(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const Matrix& inv = t.alpha_inv();
    const HomLTS& sys = t.system();

    // [e_a, e_b, w] for a vector w reduces to one slice contraction.
    auto bracket_ab = [&](std::size_t a, std::size_t b, const Vector& w) {
        Vector out(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (w[k] != 0)
                vec_axpy(out, w[k], sys.bracket3[a][b][k]);
        return out;
    };
    auto bracket_mid = [&](std::size_t a, const Vector& w, std::size_t c) {
        Vector out(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (w[k] != 0)
                vec_axpy(out, w[k], sys.bracket3[a][k][c]);
        return out;
    };
    auto bracket_first = [&](const Vector& w, std::size_t b, std::size_t c) {
        Vector out(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (w[k] != 0)
                vec_axpy(out, w[k], sys.bracket3[k][b][c]);
        return out;
    };

    AxiomReport::Entry main{"shifted_nambu"};
    AxiomReport::Entry alt{"shifted_nambu_alt"};
    AxiomReport::Entry masks{"alt_masks_main_failure"};

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t e = 0; e < n; ++e) {
                        const Vector lhs =
                            vec_sub(bracket_ab(a, b, inv.apply(sys.bracket3[c][d][e])),
                                    bracket_ab(c, d, inv.apply(sys.bracket3[a][b][e])));
                        const Vector shared = bracket_first(inv.apply(sys.bracket3[a][b][c]), d, e);
                        const Vector mid = inv.apply(sys.bracket3[a][b][d]);
                        const Vector defect_main =
                            vec_sub(lhs, vec_add(bracket_mid(c, mid, e), shared));
                        const Vector defect_alt =
                            vec_sub(lhs, vec_add(bracket_mid(c, mid, d), shared));
                        if (!vec_is_zero(defect_main))
                            fail_entry(main, {a, b, c, d, e}, defect_main);
                        if (!vec_is_zero(defect_alt))
                            fail_entry(alt, {a, b, c, d, e}, defect_alt);
                        if (!vec_is_zero(defect_main) && vec_is_zero(defect_alt))
                            fail_entry(masks, {a, b, c, d, e}, defect_main);
                    }
    AxiomReport report;
    report.entries = {std::move(main), std::move(alt), std::move(masks)};
    return report;
}

} // namespace homlts
