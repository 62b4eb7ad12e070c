#pragma once

#include <string>
#include <vector>

#include "superdix/pbw.hpp"
#include "superdix/target.hpp"

namespace superdix {

struct CheckReport {
    bool ok = true;
    std::string message;  // first failure, empty on success
};

enum class StepKind { Quotient, Even, Odd, TerminalClifford, TerminalEvaluation };
const char* to_string(StepKind k);

struct DixmierStep {
    StepKind kind;
    std::string algebra;  // name of the algebra the step acts on
    SuperDim sdim;
    std::string detail;  // quotient basis, or the y and x of the triple
};

/// One recursion level: an algebra, the target of its morphism and the images
/// of its basis vectors.
struct DixmierLevel {
    AlgebraPtr algebra;
    TargetPtr target;
    std::vector<TargetElement> images;
};

/// pi_lambda : U(g) -> factored Clifford-Weyl target with kernel I(lambda).
class DixmierMorphism {
public:
    DixmierMorphism(AlgebraPtr source, Functional lambda, std::vector<DixmierStep> steps,
                    std::vector<DixmierLevel> levels, std::vector<Scalar> radicands);

    [[nodiscard]] const AlgebraPtr& source() const { return source_; }
    [[nodiscard]] const Functional& lambda() const { return lambda_; }
    [[nodiscard]] const TargetPtr& target() const { return levels_.front().target; }
    [[nodiscard]] const std::vector<DixmierStep>& steps() const { return steps_; }
    [[nodiscard]] const std::vector<DixmierLevel>& levels() const { return levels_; }
    [[nodiscard]] const std::vector<TargetElement>& generator_images() const { return levels_.front().images; }
    /// Tower radicands in use when the morphism was built.
    [[nodiscard]] const std::vector<Scalar>& radicands() const { return radicands_; }
    [[nodiscard]] std::size_t p() const;
    [[nodiscard]] std::size_t q() const;

    [[nodiscard]] TargetElement evaluate(const PBWElement& u) const;
    /// Images of the given monomials, sharing prefix products.
    [[nodiscard]] std::vector<TargetElement> evaluate_monomials(const std::vector<Exponents>& monomials) const;

private:
    AlgebraPtr source_;
    Functional lambda_;
    std::vector<DixmierStep> steps_;
    std::vector<DixmierLevel> levels_;
    std::vector<Scalar> radicands_;
};

DixmierMorphism build_dixmier(const AlgebraPtr& alg, const Functional& lambda);
bool member(const DixmierMorphism& m, const PBWElement& u);
/// pi([a,b]) = [pi(a), pi(b)] on every basis pair, at every recursion level.
CheckReport validate_step_images(const DixmierMorphism& m);

/// Kernel of a linear map given by the images of basis vectors, as a subspace
/// of coefficient vectors.
Subspace kernel_of_images(const std::vector<TargetElement>& images);
/// ker(pi) intersected with the span of all PBW monomials of degree <= n, in
/// coordinates against monomials_up_to(source, n).
Subspace kernel_slice(const DixmierMorphism& m, unsigned n);
PBWElement element_from_coordinates(const AlgebraPtr& alg, const std::vector<Exponents>& monomials, const Vector& c);

/// I(lambda) cap U(g0) contained in I(lambda|g0), checked on degree <= n.
CheckReport even_part_ideal_check(const DixmierMorphism& m, const DixmierMorphism& m0, unsigned n = 3);
/// Morphism for the even subalgebra at the restricted functional.
DixmierMorphism build_even_part(const DixmierMorphism& m);

/// Maximal-ideal split.  For odd q the central element eps = Gamma (x) gamma
/// squares to a; the ideals are {u : pi(u) (1 +- eps/sqrt(a)) = 0}.
struct MaximalSplit {
    bool already_maximal = false;
    Scalar root;  // sqrt(a)
    std::optional<TargetElement> plus_idempotent;
    std::optional<TargetElement> minus_idempotent;
};

MaximalSplit split_maximal(const DixmierMorphism& m);
bool member_plus(const DixmierMorphism& m, const MaximalSplit& s, const PBWElement& u);
bool member_minus(const DixmierMorphism& m, const MaximalSplit& s, const PBWElement& u);

struct SplitChecks {
    bool applicable = false;  // q odd
    CheckReport sigma_swaps;
    CheckReport contain_kernel;
    CheckReport intersection;
    CheckReport left_ideal_route;  // U(g)J+ cap U(g)J- = U(g)J on F^n
    CheckReport supercenter;       // supercenter of the target is the scalars
    CheckReport clifford_full;     // products of e_i span 2^q dimensions (q even)
};

SplitChecks check_split(const DixmierMorphism& m, unsigned n = 3);

}  // namespace superdix
