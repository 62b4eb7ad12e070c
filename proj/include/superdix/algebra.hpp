#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superdix/linalg.hpp"

namespace superdix {

/// Raised when an algorithm's mathematical hypothesis fails (non-nilpotent
/// input, wrong center, non-ideal, ...).  The message names the hypothesis.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
struct PbwMemo;
}

/// Finite-dimensional Lie superalgebra given by structure constants in an
/// ordered homogeneous basis.  The basis order is also the PBW order.
class SuperLieAlgebra {
public:
    /// table[i][j] is the coordinate vector of [e_i, e_j].
    SuperLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
                    std::vector<std::vector<Vector>> table);
    ~SuperLieAlgebra();
    SuperLieAlgebra(const SuperLieAlgebra&) = delete;
    SuperLieAlgebra& operator=(const SuperLieAlgebra&) = delete;

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] SuperDim sdim() const;
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<Parity>& parities() const { return parities_; }
    [[nodiscard]] Parity parity(std::size_t i) const { return parities_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    [[nodiscard]] const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
    [[nodiscard]] bool bracket_zero(std::size_t i, std::size_t j) const { return zero_[i * dim() + j]; }
    [[nodiscard]] Vector bracket(const Vector& a, const Vector& b) const;
    /// Matrix of ad(x): column j holds [x, e_j].
    [[nodiscard]] Matrix ad(const Vector& x) const;
    /// Matrix of v |-> [v, y]: column j holds [e_j, y].
    [[nodiscard]] Matrix right_ad(const Vector& y) const;
    [[nodiscard]] Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

    /// "2*q - 1/2*z" style rendering of a coordinate vector.
    [[nodiscard]] std::string format(const Vector& v) const;

    detail::PbwMemo& pbw_memo() const { return *memo_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Parity> parities_;
    std::vector<std::vector<Vector>> table_;
    std::vector<bool> zero_;
    std::unique_ptr<detail::PbwMemo> memo_;
};

using AlgebraPtr = std::shared_ptr<const SuperLieAlgebra>;

/// Even functional on g; odd coefficients are zero.
class Functional {
public:
    Functional() = default;
    Functional(const SuperLieAlgebra& alg, Vector coeffs);
    static Functional zero(const SuperLieAlgebra& alg);
    [[nodiscard]] const Vector& coeffs() const { return c_; }
    [[nodiscard]] Scalar operator()(const Vector& v) const { return dot(c_, v); }
    [[nodiscard]] Scalar at(std::size_t i) const { return c_.at(i); }
    friend bool operator==(const Functional& a, const Functional& b) = default;

private:
    Vector c_;
};

struct ValidationReport {
    bool ok = true;
    std::string axiom;    // "parity", "superskewsymmetry", "super Jacobi"
    std::string message;  // names the offending basis pair or triple
};

ValidationReport validate(const SuperLieAlgebra& alg);
bool is_nilpotent(const SuperLieAlgebra& alg);
bool is_solvable(const SuperLieAlgebra& alg);

GradedSubspace bracket_space(const SuperLieAlgebra& alg, const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace center(const SuperLieAlgebra& alg);
GradedSubspace centralizer(const SuperLieAlgebra& alg, const std::vector<Vector>& s);
/// [C^1 = g, C^2 = [g,g], ...] up to and including the first repeated term.
std::vector<GradedSubspace> lower_central_series(const SuperLieAlgebra& alg);
std::vector<GradedSubspace> derived_series(const SuperLieAlgebra& alg);
bool is_subalgebra(const SuperLieAlgebra& alg, const GradedSubspace& s);
bool is_ideal(const SuperLieAlgebra& alg, const GradedSubspace& s);
/// g' = {x in g : [x, s] subset of t}.
GradedSubspace bracket_preimage(const SuperLieAlgebra& alg, const GradedSubspace& s, const GradedSubspace& t);

/// Z(g) cap ker(lambda).
GradedSubspace central_kernel(const SuperLieAlgebra& alg, const Functional& lambda);
/// lambda o map as a functional on `target` (map: target coordinates -> alg coordinates).
Functional pull_back(const SuperLieAlgebra& target, const Functional& lambda, const Matrix& map);

/// Algebra on a new homogeneous basis (rows of `basis`, in old coordinates).
/// new_to_old maps new coordinates to old ones (columns = basis vectors).
struct Rebased {
    AlgebraPtr algebra;
    Matrix new_to_old;
    Matrix old_to_new;
};
Rebased rebase(const SuperLieAlgebra& alg, const std::vector<Vector>& basis,
               std::vector<std::string> labels, std::string name);

struct QuotientResult {
    AlgebraPtr algebra;
    Matrix projection;  // dim(q) x dim(g)
    Matrix section;     // dim(g) x dim(q), lifts onto complement basis vectors
};
QuotientResult quotient(const SuperLieAlgebra& alg, const GradedSubspace& ideal, std::string name = {});

struct SubalgebraResult {
    AlgebraPtr algebra;
    Matrix embedding;  // dim(g) x dim(s)
    GradedSubspace space;
    [[nodiscard]] Vector coordinates(const Vector& v) const { return space.space().coordinates(v); }
};
SubalgebraResult subalgebra(const SuperLieAlgebra& alg, const GradedSubspace& s, std::string name = {});

struct BMTriple {
    Vector z;  // even central, lambda(z) = 1
    Vector y;
    Vector x;
    Parity parity;
    GradedSubspace k;  // super centralizer of y, codimension one ideal
    bool y_square_zero = false;
};

/// Selection: even lifts of the center of g/span(z) first (made lambda-null),
/// otherwise an isotropic vector of y |-> z-coefficient of [y,y] on the odd lifts.
BMTriple find_bm_triple(const SuperLieAlgebra& alg, const Functional& lambda);
/// Re-checks every BMTriple invariant; empty string when all hold.
std::string check_bm_triple(const SuperLieAlgebra& alg, const BMTriple& t);

/// Convenience: shared algebra from the raw constructor arguments.
AlgebraPtr make_algebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
                        std::vector<std::vector<Vector>> table);

}  // namespace superdix
