#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superdix/dixmier.hpp"

namespace superdix {

class TruncationOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degree-bounded slice V_M of ind(lambda|h, g), realised as U(g)/U(g)J.
/// Vectors are elements of U(g') (g re-based complement first) supported on
/// complement monomials; the monomial m stands for m (x) v.
class InducedTruncation {
public:
    InducedTruncation(AlgebraPtr g, const GradedSubspace& h, const Functional& lambda, unsigned max_degree,
                      Parity line_parity = Parity::Even);

    [[nodiscard]] const AlgebraPtr& algebra() const { return reducer_.source(); }
    [[nodiscard]] const AlgebraPtr& rebased() const { return reducer_.rebased(); }
    [[nodiscard]] const LeftIdealReducer& reducer() const { return reducer_; }
    [[nodiscard]] const Functional& lambda() const { return lambda_; }
    [[nodiscard]] unsigned max_degree() const { return max_degree_; }
    [[nodiscard]] Parity line_parity() const { return line_parity_; }
    /// Complement monomials of degree <= d (exponents in re-based order).
    [[nodiscard]] std::vector<Exponents> basis(unsigned d) const;
    /// 1 (x) v.
    [[nodiscard]] PBWElement generator_vector() const;
    [[nodiscard]] PBWElement basis_vector(const Exponents& e) const;
    /// Parity of m (x) v; nullopt for mixed vectors.
    [[nodiscard]] std::optional<Parity> parity(const PBWElement& t) const;

    /// u acting on t; throws TruncationOverflow past the degree bound.
    [[nodiscard]] PBWElement act(const PBWElement& u, const PBWElement& t) const;

    /// {u in F^n : u V_{M-n} = 0}, in coordinates against monomials_up_to(g, n).
    [[nodiscard]] Subspace annihilator_truncated(unsigned n) const;

private:
    LeftIdealReducer reducer_;
    Functional lambda_;
    unsigned max_degree_;
    Parity line_parity_;
};

struct Stabilization {
    Subspace slice;
    unsigned probe_degree = 0;  // first M with slice(M) == slice(M + 1)
    bool stabilized = false;
};

/// Annihilator slices for M = n, n+1, ... up to max_probe, stopping once two
/// consecutive slices agree.
Stabilization stabilized_annihilator(const AlgebraPtr& g, const GradedSubspace& h, const Functional& lambda,
                                     unsigned n, unsigned max_probe = 8);

struct DescentResult {
    bool found = false;
    std::optional<PBWElement> witness;  // in U(g), built from generators of k
    std::optional<PBWElement> image;    // witness acting on t
    unsigned degree = 0;
    std::string message;
};

/// A z in U(k) with z t in V_{n-1} minus {0}, where n = degree of t.
DescentResult descend(const InducedTruncation& v, const PBWElement& t, const GradedSubspace& k, unsigned budget);

/// For k an ideal inside h with lambda([g,k]) = 0: y (m (x) v) = (-1)^{|m||y|} lambda(y) m (x) v
/// for every basis y of k and complement monomial m of degree <= M.
CheckReport ideal_component_decomposition_check(const InducedTruncation& v, const GradedSubspace& k);

}  // namespace superdix
