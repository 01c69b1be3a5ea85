#pragma once

// Shared fixtures for the test suites: canonical small algebras, seeded
// random (Lie algebra, automorphism) pairs, direct sums, a morphism corpus
// for the functor tests, and an elimination oracle that is independent of
// the library's row-reduction path.

#include "homlts/hom_structures.hpp"
#include "homlts/imbedding.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace homlts::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [lo, hi]; plain modulo keeps runs identical
    /// across standard libraries.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

HomLieAlgebra abelian_lie(std::size_t n);
/// Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
HomLieAlgebra sl2();
/// diag(4, 1, 1/4), conjugation by diag(2, 1/2) in the defining picture.
Matrix sl2_diag_twist();
/// e <-> f, h -> -h.
Matrix sl2_involution();
/// Basis (x, y, z): [x,y] = z.
HomLieAlgebra heisenberg();
/// Basis (x, y): [x,y] = y.
HomLieAlgebra affine_line();
/// Basis (x, y, z, w): [x,y] = z, [x,z] = w.
HomLieAlgebra filiform4();

/// exp(ad x), exact because the sum truncates; throws unless ad x is
/// nilpotent.
Matrix lie_exp_ad(const HomLieAlgebra& lie, const Vector& x);

RegularHomLTS zero_lts(std::size_t n);
RegularHomLTS zero_lts(std::size_t n, Matrix alpha);
RegularHomLTS sl2_lts();
RegularHomLTS sl2_lts_twisted();
RegularHomLTS sl2_lts_involution();

/// The acceptance corpus: abelian algebras of dims 1-4 and the three
/// twisted variants of sl2 (twist applied through the induced bracket).
std::vector<HomLieAlgebra> canonical_hom_lie_corpus();
std::vector<RegularHomLTS> canonical_lts_corpus();

struct LiePair {
    HomLieAlgebra lie; // untwisted, alpha = id
    Matrix aut;
};
/// Seed algebras with catalog automorphisms, transported by random
/// unimodular changes of basis; structure constants stay integral.
std::vector<LiePair> random_lie_aut_pairs(std::size_t count, std::uint64_t seed);

Matrix random_unimodular(std::size_t n, Rng& rng);
LiePair conjugated(const LiePair& pair, const Matrix& basis_change);

HomLieAlgebra direct_sum_lie(const HomLieAlgebra& a, const HomLieAlgebra& b);
HomLTS direct_sum(const HomLTS& a, const HomLTS& b);

/// Fraction-free integer elimination (clear denominators, then exact
/// division steps); returns the rank and a kernel basis. Shares no code
/// with the library's rref/kernel.
struct OracleKernel {
    std::size_t rank = 0;
    std::vector<Vector> basis;
};
OracleKernel oracle_kernel(const Matrix& m);

/// θ1 : systems[t] -> systems[s], θ2 : systems[s] -> systems[r].
struct MorphismTriple {
    std::size_t t = 0, s = 0, r = 0;
    Matrix theta1, theta2;
};
struct MorphismCorpus {
    std::vector<RegularHomLTS> systems;
    std::vector<MorphismTriple> pairs;
};
MorphismCorpus random_morphism_corpus(std::size_t count, std::uint64_t seed);

} // namespace homlts::testing
