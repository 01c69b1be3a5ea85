#include "homlts/derivations.hpp"

#include "homlts/errors.hpp"

namespace homlts {

Vector InnerDerivationSpace::generator_coords(std::size_t i, std::size_t j) const {
    if (i >= dim || j >= dim)
        throw MathError("generator index out of range");
    if (i == j)
        return zero_vector(basis.dim());
    const bool flip = i > j;
    if (flip)
        std::swap(i, j);
    // lexicographic slot of (i, j) among pairs with i < j
    const std::size_t slot = i * dim - i * (i + 1) / 2 + (j - i - 1);
    Vector coords = generator_coords_table.row(slot);
    return flip ? vec_scaled(Rational(-1), coords) : coords;
}

Matrix inner_derivation(const RegularHomLTS& t, const Vector& a, const Vector& b) {
    const std::size_t n = t.dim();
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
        d.set_col(k, t.bracket(a, b, unit_vector(n, k)));
    return d;
}

TwistedDerivationSpace compute_twisted_derivations(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const Matrix& inv = t.alpha_inv();
    const Matrix inv_t = inv.transpose();

    // One n-vector equation per basis triple (p,q,r); unknowns are the
    // entries X_{uv}, vectorized to u*n + v.
    Matrix system(n * n * n * n, n * n);
    std::size_t eq = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                const Vector w = inv.apply(t.basis_bracket(p, q, r));
                Matrix m1(n, n), m2(n, n), m3(n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    m1.set_row(i, t.basis_bracket(i, q, r));
                    m2.set_row(i, t.basis_bracket(p, i, r));
                    m3.set_row(i, t.basis_bracket(p, q, i));
                }
                const Matrix a1 = inv_t * m1;
                const Matrix a2 = inv_t * m2;
                const Matrix a3 = inv_t * m3;
                for (std::size_t m = 0; m < n; ++m, ++eq) {
                    for (std::size_t v = 0; v < n; ++v)
                        system(eq, m * n + v) += w[v];
                    for (std::size_t u = 0; u < n; ++u) {
                        system(eq, u * n + p) -= a1(u, m);
                        system(eq, u * n + q) -= a2(u, m);
                        system(eq, u * n + r) -= a3(u, m);
                    }
                }
            }
    return TwistedDerivationSpace{n, kernel(system)};
}

InnerDerivationSpace compute_inner_derivations(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    Matrix table(pairs, n * n);
    {
        std::size_t slot = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++slot)
                table.set_row(
                    slot, vec(inner_derivation(t, unit_vector(n, i), unit_vector(n, j))));
    }
    Subspace basis = Subspace::from_matrix_rows(table);

    const TwistedDerivationSpace full = compute_twisted_derivations(t);
    if (!full.basis.contains_subspace(basis))
        throw MathError("inner derivations escape the twisted derivation space");

    Matrix coords(pairs, basis.dim());
    for (std::size_t slot = 0; slot < pairs; ++slot) {
        auto c = basis.coordinates_of(table.row(slot));
        if (!c) // impossible: rows span the basis
            throw MathError("inner derivation table is inconsistent");
        coords.set_row(slot, *c);
    }
    return InnerDerivationSpace{n, std::move(basis), std::move(table), std::move(coords)};
}

Matrix derivation_bracket(const Matrix& x, const Matrix& y, const RegularHomLTS& t) {
    if (x.rows() != t.dim() || y.rows() != t.dim())
        throw MathError("derivation bracket: size mismatch with the system");
    return isotope_commutator(x, y, t.alpha_inv());
}

AxiomReport check_ideal_identity(const RegularHomLTS& t) {
    const std::size_t n = t.dim();
    const TwistedDerivationSpace full = compute_twisted_derivations(t);
    const InnerDerivationSpace inner = compute_inner_derivations(t);

    AxiomReport report;
    auto check_scope = [&](AxiomReport::Entry& entry, const Subspace& space) {
        for (std::size_t k = 0; k < space.dim(); ++k) {
            const Matrix x = unvec(space.basis().row(k), n);
            const Matrix shifted = t.alpha_inv() * x;
            for (std::size_t a = 0; a < n && entry.pass; ++a)
                for (std::size_t b = 0; b < n && entry.pass; ++b) {
                    const Vector ea = unit_vector(n, a);
                    const Vector eb = unit_vector(n, b);
                    const Matrix lhs =
                        derivation_bracket(x, inner_derivation(t, ea, eb), t);
                    const Matrix rhs = inner_derivation(t, ea, shifted.col(b)) +
                                       inner_derivation(t, shifted.col(a), eb);
                    const Matrix defect = lhs - rhs;
                    if (!defect.is_zero()) {
                        entry.pass = false;
                        entry.witness = {k, a, b};
                        entry.defect = vec(defect);
                    }
                }
        }
    };
    report.entries.reserve(2);
    auto& full_entry = report.entries.emplace_back(AxiomReport::Entry{"ideal_identity_full"});
    check_scope(full_entry, full.basis);
    auto& inner_entry = report.entries.emplace_back(AxiomReport::Entry{"ideal_identity_inner"});
    check_scope(inner_entry, inner.basis);
    return report;
}

} // namespace homlts
