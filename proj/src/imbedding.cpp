#include "homlts/imbedding.hpp"

#include "homlts/errors.hpp"

#include <algorithm>
#include <string>

namespace homlts {

namespace {

std::vector<int> parity_table(const GradedLieWithAut& g) {
    std::vector<int> parity(g.dim(), -1);
    for (std::size_t i : g.even) {
        if (i >= g.dim() || parity[i] != -1)
            throw MathError("even/odd indices do not partition the basis");
        parity[i] = 0;
    }
    for (std::size_t i : g.odd) {
        if (i >= g.dim() || parity[i] != -1)
            throw MathError("even/odd indices do not partition the basis");
        parity[i] = 1;
    }
    for (int p : parity)
        if (p == -1)
            throw MathError("even/odd indices do not partition the basis");
    return parity;
}

/// Component of v outside the given parity, as a full-length vector.
Vector off_component(const Vector& v, const std::vector<int>& parity, int wanted) {
    Vector off = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (parity[i] == wanted)
            off[i] = 0;
    return off;
}

} // namespace

AxiomReport check_graded_lie(const GradedLieWithAut& g) {
    validate_shape(g.lie);
    const std::vector<int> parity = parity_table(g);

    AxiomReport report = check_lie(g.lie);
    report.entries.reserve(report.entries.size() + 4);

    auto& grading = report.entries.emplace_back(AxiomReport::Entry{"grading"});
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const int target = (parity[i] + parity[j]) % 2;
            const Vector off = off_component(g.lie.bracket[i][j], parity, target);
            if (!vec_is_zero(off) && grading.pass) {
                grading.pass = false;
                grading.witness = {i, j};
                grading.defect = off;
            }
        }

    auto& invertible = report.entries.emplace_back(AxiomReport::Entry{"aut_invertible"});
    const Subspace aut_kernel = kernel(g.aut());
    if (aut_kernel.dim() != 0) {
        invertible.pass = false;
        invertible.defect = aut_kernel.basis().row(0);
    }

    auto& hom = report.entries.emplace_back(AxiomReport::Entry{"aut_homomorphism"});
    for (std::size_t i = 0; i < g.dim() && hom.pass; ++i)
        for (std::size_t j = 0; j < g.dim() && hom.pass; ++j) {
            HomLieAlgebra plain{g.dim(), g.lie.bracket, Matrix::identity(g.dim())};
            const Vector lhs = g.aut().apply(g.lie.bracket[i][j]);
            const Vector rhs = eval_bracket(plain, g.aut().col(i), g.aut().col(j));
            const Vector defect = vec_sub(lhs, rhs);
            if (!vec_is_zero(defect)) {
                hom.pass = false;
                hom.witness = {i, j};
                hom.defect = defect;
            }
        }

    auto& graded = report.entries.emplace_back(AxiomReport::Entry{"aut_graded"});
    for (std::size_t i = 0; i < g.dim() && graded.pass; ++i) {
        const Vector off = off_component(g.aut().col(i), parity, parity[i]);
        if (!vec_is_zero(off)) {
            graded.pass = false;
            graded.witness = {i};
            graded.defect = off;
        }
    }
    return report;
}

bool check_grading(const GradedLieWithAut& g) {
    const AxiomReport report = check_graded_lie(g);
    return report.find("grading")->pass && report.find("aut_graded")->pass;
}

bool generated_by_odd(const GradedLieWithAut& g) {
    if (!check_grading(g))
        throw MathError("generated_by_odd expects a graded algebra");
    const HomLieAlgebra plain{g.dim(), g.lie.bracket, Matrix::identity(g.dim())};
    std::vector<Vector> seed;
    seed.reserve(g.odd.size());
    for (std::size_t i : g.odd)
        seed.push_back(unit_vector(g.dim(), i));
    Subspace span = Subspace::span_of(seed, g.dim());
    for (std::size_t round = 0; round < g.dim(); ++round) {
        std::vector<Vector> next;
        for (std::size_t p = 0; p < span.dim(); ++p)
            for (std::size_t q = p + 1; q < span.dim(); ++q)
                next.push_back(
                    eval_bracket(plain, span.basis().row(p), span.basis().row(q)));
        const Subspace grown = span.sum(Subspace::span_of(next, g.dim()));
        if (grown.dim() == span.dim())
            break;
        span = grown;
    }
    return span.dim() == g.dim();
}

Subspace center_of(const HomLieAlgebra& lie) {
    validate_shape(lie);
    const std::size_t n = lie.dim;
    // z is central iff [z, e_k] = 0 for every k; stack those conditions.
    Matrix stacked(n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t i = 0; i < n; ++i)
                stacked(k * n + m, i) = lie.bracket[i][k][m];
    return kernel(stacked);
}

AxiomReport check_imbedding(const Matrix& eps, const RegularHomLTS& t,
                            const HomLieAlgebra& lie_with_aut) {
    validate_shape(lie_with_aut);
    if (eps.rows() != lie_with_aut.dim || eps.cols() != t.dim())
        throw MathError("imbedding candidate has wrong shape");
    const std::size_t n = t.dim();
    const HomLieAlgebra plain{lie_with_aut.dim, lie_with_aut.bracket,
                              Matrix::identity(lie_with_aut.dim)};
    const Matrix& aut = lie_with_aut.alpha;

    AxiomReport report;
    report.entries.reserve(2);
    auto& bracket = report.entries.emplace_back(AxiomReport::Entry{"imbedding_bracket"});
    for (std::size_t a = 0; a < n && bracket.pass; ++a)
        for (std::size_t b = 0; b < n && bracket.pass; ++b)
            for (std::size_t c = 0; c < n && bracket.pass; ++c) {
                const Vector lhs = eps.apply(t.basis_bracket(a, b, c));
                const Vector inner = eval_bracket(plain, eps.col(a), eps.col(b));
                const Vector rhs = aut.apply(eval_bracket(plain, inner, eps.col(c)));
                const Vector defect = vec_sub(lhs, rhs);
                if (!vec_is_zero(defect)) {
                    bracket.pass = false;
                    bracket.witness = {a, b, c};
                    bracket.defect = defect;
                }
            }

    auto& twist = report.entries.emplace_back(AxiomReport::Entry{"imbedding_twist"});
    const Matrix lhs = eps * t.alpha();
    const Matrix rhs = aut * eps;
    for (std::size_t i = 0; i < n && twist.pass; ++i) {
        const Vector defect = vec_sub(lhs.col(i), rhs.col(i));
        if (!vec_is_zero(defect)) {
            twist.pass = false;
            twist.witness = {i};
            twist.defect = defect;
        }
    }
    return report;
}

bool verify_imbedding(const Matrix& eps, const RegularHomLTS& t,
                      const HomLieAlgebra& lie_with_aut) {
    return check_imbedding(eps, t, lie_with_aut).all_pass();
}

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

std::size_t wedge_slot(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= j || j >= n)
        throw MathError("wedge slot needs i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vector wedge_coords(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw MathError("wedge of vectors with different lengths");
    const std::size_t n = a.size();
    Vector w(n * (n - 1) / 2, Rational(0));
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++slot)
            w[slot] = a[i] * b[j] - a[j] * b[i];
    return w;
}

Matrix exterior_square(const Matrix& m) {
    if (!m.is_square())
        throw MathError("exterior square of a non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t w = n * (n - 1) / 2;
    Matrix out(w, w);
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++slot)
            out.set_col(slot, wedge_coords(m.col(i), m.col(j)));
    return out;
}

Matrix wedge_action_matrix(const Matrix& d, const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    if (d.rows() != n || d.cols() != n)
        throw MathError("wedge action: endomorphism has wrong shape");
    const Matrix shifted = t.alpha_inv() * d;
    const std::size_t w = n * (n - 1) / 2;
    Matrix out(w, w);
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++slot) {
            Vector column = vec_add(wedge_coords(shifted.col(i), unit_vector(n, j)),
                                    wedge_coords(unit_vector(n, i), shifted.col(j)));
            out.set_col(slot, column);
        }
    return out;
}

Vector wedge_action(const Matrix& d, const Vector& x, const RegularHomLTS& t) {
    return wedge_action_matrix(d, t).apply(x);
}

Matrix pair_to_derivation_map(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const std::size_t w = n * (n - 1) / 2;
    Matrix out(n * n, w);
    std::size_t slot = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++slot)
            out.set_col(slot,
                        vec(inner_derivation(t, unit_vector(n, i), unit_vector(n, j))));
    return out;
}

Subspace wedge_relations(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const std::size_t w = n * (n - 1) / 2;
    const Matrix pair_map = pair_to_derivation_map(t);

    // action matrices of the wedge-basis derivations
    std::vector<Matrix> action(w);
    for (std::size_t s = 0; s < w; ++s)
        action[s] = wedge_action_matrix(unvec(pair_map.col(s), n), t);

    std::vector<Vector> spanning;
    // quadratic family at basis pairs
    for (std::size_t s = 0; s < w; ++s)
        spanning.push_back(action[s].apply(unit_vector(w, s)));
    // bilinear family at pairs of basis pairs
    for (std::size_t s = 0; s < w; ++s)
        for (std::size_t u = s + 1; u < w; ++u)
            spanning.push_back(vec_add(action[s].apply(unit_vector(w, u)),
                                       action[u].apply(unit_vector(w, s))));
    // polarizations of the quadratic family: a -> e_i + e_k, b -> e_j + e_l
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Vector a = vec_add(unit_vector(n, i), unit_vector(n, k));
                    const Vector b = vec_add(unit_vector(n, j), unit_vector(n, l));
                    const Vector x = wedge_coords(a, b);
                    if (vec_is_zero(x))
                        continue;
                    const Matrix d = unvec(pair_map.apply(x), n);
                    spanning.push_back(wedge_action(d, x, t));
                }

    Subspace relations = Subspace::span_of(spanning, w);

    // submodule property: closed under the full twisted-derivation action
    const TwistedDerivationSpace derivations = compute_twisted_derivations(t);
    for (std::size_t k = 0; k < derivations.space_dim(); ++k) {
        const Matrix act = wedge_action_matrix(derivations.element(k), t);
        for (std::size_t r = 0; r < relations.dim(); ++r)
            if (!relations.contains(act.apply(relations.basis().row(r))))
                throw MathError("relation span is not closed under the derivation action");
    }
    return relations;
}

StandardImbedding standard_imbedding(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    InnerDerivationSpace inner = compute_inner_derivations(t);
    const std::size_t m = inner.space_dim();
    const std::size_t dim = m + n;

    // the automorphism on inner derivations: D_{ab} -> D_{alpha a, alpha b};
    // realized through the exterior square and checked to be well defined
    const Matrix pair_map = inner.generator_table.transpose(); // n^2 x w
    const Matrix square = exterior_square(t.alpha());
    const Subspace pair_kernel = kernel(pair_map);
    for (std::size_t k = 0; k < pair_kernel.dim(); ++k)
        if (!vec_is_zero(pair_map.apply(square.apply(pair_kernel.basis().row(k)))))
            throw MathError("automorphism extension to inner derivations is ill-defined");

    Matrix even_aut(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto preimage = solve(pair_map, inner.basis.basis().row(k));
        if (!preimage)
            throw MathError("inner derivation basis escapes the pair map image");
        const Vector image = pair_map.apply(square.apply(*preimage));
        const auto coords = inner.basis.coordinates_of(image);
        if (!coords)
            throw MathError("automorphism image escapes the inner derivations");
        even_aut.set_col(k, *coords);
    }

    Tensor2 bracket(dim, std::vector<Vector>(dim, zero_vector(dim)));
    auto even_part = [&](const Vector& coords) {
        Vector v = zero_vector(dim);
        for (std::size_t k = 0; k < m; ++k)
            v[k] = coords[k];
        return v;
    };
    auto odd_part = [&](const Vector& values) {
        Vector v = zero_vector(dim);
        for (std::size_t k = 0; k < n; ++k)
            v[m + k] = values[k];
        return v;
    };

    std::vector<Matrix> shifted_basis(m); // alpha^-1 Z_p
    for (std::size_t p = 0; p < m; ++p)
        shifted_basis[p] = t.alpha_inv() * inner.element(p);

    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const Matrix br = derivation_bracket(inner.element(p), inner.element(q), t);
            const auto coords = inner.basis.coordinates_of(vec(br));
            if (!coords)
                throw MathError("derivation bracket escapes the inner span");
            bracket[p][q] = even_part(*coords);
        }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t j = 0; j < n; ++j) {
            bracket[p][m + j] = odd_part(shifted_basis[p].col(j));
            bracket[m + j][p] = vec_scaled(Rational(-1), bracket[p][m + j]);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            bracket[m + i][m + j] = even_part(inner.generator_coords(i, j));

    std::vector<std::size_t> evens(m), odds(n);
    for (std::size_t k = 0; k < m; ++k)
        evens[k] = k;
    for (std::size_t k = 0; k < n; ++k)
        odds[k] = m + k;

    GradedLieWithAut target{
        make_hom_lie_algebra(dim, std::move(bracket), block_diag(even_aut, t.alpha())),
        std::move(evens), std::move(odds)};

    const Matrix inclusion = vcat(Matrix::zero(m, n), Matrix::identity(n));

    const AxiomReport suite = check_graded_lie(target);
    if (!suite.all_pass())
        throw MathError("standard imbedding failed its axiom suite");
    StandardImbedding result{t, std::move(target), inclusion, std::move(inner)};
    if (!verify_imbedding(result.inclusion, t, result.target.lie))
        throw MathError("canonical inclusion fails the imbedding equations");
    return result;
}

UniversalAlgebra universal_algebra(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const std::size_t w = n * (n - 1) / 2;
    StandardImbedding standard = standard_imbedding(t);
    const Matrix pair_map = pair_to_derivation_map(t);

    const Subspace relations = wedge_relations(t);
    QuotientSpace quot(w, relations);
    const std::size_t e = quot.dim(); // even dimension
    const std::size_t dim = e + n;

    Matrix coset_map; // quotient coords -> endomorphisms
    try {
        coset_map = factor_through(pair_map, quot);
    } catch (const MathError&) {
        throw MathError("bracket ill-defined: the pair map does not vanish on the relations");
    }

    // even block of the automorphism; well-definedness is invariance of the
    // relation span under the exterior square
    const Matrix square = exterior_square(t.alpha());
    const Matrix square_inv = exterior_square(t.alpha_inv());
    for (std::size_t k = 0; k < relations.dim(); ++k) {
        if (!relations.contains(square.apply(relations.basis().row(k))))
            throw MathError("alpha_U ill-defined: relations are not invariant");
        if (!relations.contains(square_inv.apply(relations.basis().row(k))))
            throw MathError("alpha_U ill-defined: relations are not inverse-invariant");
    }
    const Matrix even_aut = quot.projection_matrix() * square * quot.lift_matrix();
    const Matrix even_aut_inv = quot.projection_matrix() * square_inv * quot.lift_matrix();
    if (!(even_aut * even_aut_inv).is_identity() || !(even_aut_inv * even_aut).is_identity())
        throw MathError("alpha_U ill-defined: the inverse extension fails to invert it");

    Tensor2 bracket(dim, std::vector<Vector>(dim, zero_vector(dim)));
    auto even_part = [&](const Vector& coords) {
        Vector v = zero_vector(dim);
        for (std::size_t k = 0; k < e; ++k)
            v[k] = coords[k];
        return v;
    };
    auto odd_part = [&](const Vector& values) {
        Vector v = zero_vector(dim);
        for (std::size_t k = 0; k < n; ++k)
            v[e + k] = values[k];
        return v;
    };

    std::vector<Matrix> coset_derivation(e), coset_action(e);
    for (std::size_t s = 0; s < e; ++s) {
        coset_derivation[s] = unvec(coset_map.col(s), n);
        coset_action[s] = wedge_action_matrix(coset_derivation[s], t);
    }

    for (std::size_t s = 0; s < e; ++s)
        for (std::size_t u = 0; u < e; ++u)
            bracket[s][u] =
                even_part(quot.project(coset_action[s].apply(quot.lift(unit_vector(e, u)))));
    for (std::size_t s = 0; s < e; ++s) {
        const Matrix shifted = t.alpha_inv() * coset_derivation[s];
        for (std::size_t j = 0; j < n; ++j) {
            bracket[s][e + j] = odd_part(shifted.col(j));
            bracket[e + j][s] = vec_scaled(Rational(-1), bracket[s][e + j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector even = even_part(quot.project(unit_vector(w, wedge_slot(i, j, n))));
            bracket[e + i][e + j] = even;
            bracket[e + j][e + i] = vec_scaled(Rational(-1), even);
        }

    std::vector<std::size_t> evens(e), odds(n);
    for (std::size_t k = 0; k < e; ++k)
        evens[k] = k;
    for (std::size_t k = 0; k < n; ++k)
        odds[k] = e + k;

    GradedLieWithAut target{
        make_hom_lie_algebra(dim, std::move(bracket), block_diag(even_aut, t.alpha())),
        std::move(evens), std::move(odds)};

    // cover onto the standard imbedding: coset -> inner-derivation coords
    const std::size_t m = standard.inner_dim();
    Matrix cover(m + n, dim);
    for (std::size_t s = 0; s < e; ++s) {
        const auto coords = standard.inner.basis.coordinates_of(coset_map.col(s));
        if (!coords)
            throw MathError("cover target escapes the inner derivations");
        for (std::size_t k = 0; k < m; ++k)
            cover(k, s) = (*coords)[k];
    }
    for (std::size_t k = 0; k < n; ++k)
        cover(m + k, e + k) = 1;

    const Matrix inclusion = vcat(Matrix::zero(e, n), Matrix::identity(n));

    UniversalAlgebra result{t,
                            std::move(standard),
                            std::move(quot),
                            std::move(target),
                            inclusion,
                            std::move(cover),
                            pair_map,
                            std::move(coset_map)};

    const AxiomReport suite = check_graded_lie(result.target);
    if (!suite.all_pass())
        throw MathError("universal algebra failed its axiom suite");
    if (!verify_imbedding(result.inclusion, t, result.target.lie))
        throw MathError("canonical inclusion fails the imbedding equations");
    if (!generated_by_odd(result.target))
        throw MathError("odd component fails to generate the universal algebra");
    if (!check_central_extension(result))
        throw MathError("cover fails to be a central extension");
    if (result.cover * result.inclusion != result.standard.inclusion)
        throw MathError("cover is inconsistent with the canonical inclusions");
    return result;
}

bool check_central_extension(const UniversalAlgebra& u) {
    const GradedLieWithAut& source = u.target;
    const GradedLieWithAut& image = u.standard.target;
    const Matrix& cover = u.cover;
    if (cover.rows() != image.dim() || cover.cols() != source.dim())
        return false;

    const HomLieAlgebra plain_image{image.dim(), image.lie.bracket,
                                    Matrix::identity(image.dim())};
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j)
            if (cover.apply(source.lie.bracket[i][j]) !=
                eval_bracket(plain_image, cover.col(i), cover.col(j)))
                return false;

    if (rank(cover) != image.dim())
        return false;
    if (cover * source.aut() != image.aut() * cover)
        return false;

    // gradedness of the cover
    const std::vector<int> source_parity = parity_table(source);
    const std::vector<int> image_parity = parity_table(image);
    for (std::size_t i = 0; i < source.dim(); ++i) {
        const Vector column = cover.col(i);
        for (std::size_t k = 0; k < image.dim(); ++k)
            if (column[k] != 0 && image_parity[k] != source_parity[i])
                return false;
    }

    const Subspace cover_kernel = kernel(cover);
    const Subspace center = center_of(source.lie);
    return center.contains_subspace(cover_kernel);
}

} // namespace homlts
