#pragma once

#include <string>
#include <vector>

#include "superdix/algebra.hpp"

namespace superdix {

/// The form <x,y> = lambda([x,y]) on g and its kernel g^lambda.
struct LambdaForm {
    EvenBilinearForm form;
    GradedSubspace kernel;
};

LambdaForm lambda_form(const SuperLieAlgebra& alg, const Functional& lambda);
/// lambda([g0, g0]) = 0.
bool vanishes_on_even_derived(const SuperLieAlgebra& alg, const Functional& lambda);

/// Maximal totally isotropic subspace of `space` for `form` that contains
/// `seed` and is stable under every operator in `acting` (square matrices on
/// the ambient coordinates, each preserving `space`).  Throws HypothesisError
/// when the joint action is not nilpotent or the loop stalls before maximality.
GradedSubspace max_isotropic_submodule(const EvenBilinearForm& form, const GradedSubspace& space,
                                       const std::vector<Matrix>& acting, const GradedSubspace& seed);

enum class FlagOrder { BasisOrder, Reversed };

/// Vergne polarization of the even part g0 at lambda|g0, over a flag of ideals
/// refining the lower central series of g0.
GradedSubspace polarize_even(const SuperLieAlgebra& alg, const Functional& lambda,
                             FlagOrder order = FlagOrder::BasisOrder);

enum class PolarizationRoute { EvenOddSplit, Recursive };

struct Polarization {
    GradedSubspace h;
    Functional lambda;
    PolarizationRoute route = PolarizationRoute::EvenOddSplit;
};

/// Polarization of a nilpotent algebra.  The even/odd split route is tried
/// first; when it does not produce a polarization the recursive route is used.
Polarization polarize(const SuperLieAlgebra& alg, const Functional& lambda,
                      FlagOrder order = FlagOrder::BasisOrder);
/// Recursion through quotients by central kernels and Bell-Musson ideals.
Polarization polarize_recursive(const SuperLieAlgebra& alg, const Functional& lambda);

struct InvariantPolarization {
    GradedSubspace h;  // inside k, ambient coordinates of g
    bool invariant = false;
    std::string note;  // "invariance not achieved" when the fallback was used
};

/// Polarization of the ideal k at lambda|k that is stable under ad(g) when the
/// stable construction succeeds; otherwise a flagged ordinary polarization.
InvariantPolarization invariant_polarize(const SuperLieAlgebra& alg, const GradedSubspace& k,
                                         const Functional& lambda);

/// Empty when h satisfies every polarization invariant, else the first failure.
std::string check_polarization(const SuperLieAlgebra& alg, const Functional& lambda, const GradedSubspace& h);

}  // namespace superdix
