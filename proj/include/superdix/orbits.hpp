#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superdix/dixmier.hpp"

namespace superdix {

/// exp(ad x_1) ... exp(ad x_r) for even x_i; the last factor acts first.
struct AdjointAutomorphism {
    std::vector<Vector> generators;
    Matrix matrix;
    Matrix inverse;

    [[nodiscard]] Vector operator()(const Vector& v) const { return matrix * v; }
};

AdjointAutomorphism identity_automorphism(const SuperLieAlgebra& alg);
AdjointAutomorphism exp_ad(const SuperLieAlgebra& alg, const Vector& x);
/// a after b.
AdjointAutomorphism compose(const AdjointAutomorphism& a, const AdjointAutomorphism& b);
/// Multiplicative extension to U(g).
PBWElement apply(const AdjointAutomorphism& a, const AlgebraPtr& alg, const PBWElement& u);
/// (A.lambda)(v) = lambda(A^{-1} v).
Functional coadjoint(const SuperLieAlgebra& alg, const AdjointAutomorphism& a, const Functional& lambda);

enum class OrbitVerdict { EqualWithWitness, EqualByIdealSlice, DistinctWithSeparator, Inconclusive };
const char* to_string(OrbitVerdict v);
int exit_code(OrbitVerdict v);

struct OrbitComparison {
    OrbitVerdict verdict = OrbitVerdict::Inconclusive;
    std::optional<std::vector<Vector>> witness;  // replay with exp_ad, first entry acts last
    std::optional<PBWElement> separator;         // in exactly one of the two ideals
    unsigned degree = 0;
    std::string reason;
};

struct OrbitSearch {
    unsigned degree = 3;
    unsigned tries = 8;
    std::uint64_t seed = 0;
};

OrbitComparison orbit_equal(const AlgebraPtr& alg, const Functional& a, const Functional& b,
                            const OrbitSearch& search = {});
/// Coadjoint image of a under the witness list equals b.
bool replay_witness(const SuperLieAlgebra& alg, const std::vector<Vector>& witness, const Functional& a,
                    const Functional& b);

/// A(u) stays in ker(pi) for a spanning set of the kernel slice of degree <= n.
CheckReport ideal_invariance_check(const DixmierMorphism& m, const AdjointAutomorphism& a, unsigned n = 3);

struct StabilizerBound {
    GradedSubspace centralizer;  // {x : lambda([x,k]) = 0}
    GradedSubspace bound;        // centralizer + k
    CheckReport invariance;      // I(lambda|k) preserved by exp(ad x) for even basis x of the bound
};

StabilizerBound stabilizer_bound(const AlgebraPtr& alg, const Functional& lambda, const GradedSubspace& k,
                                 unsigned n = 2);

}  // namespace superdix
