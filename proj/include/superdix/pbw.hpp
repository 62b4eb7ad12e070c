#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superdix/algebra.hpp"

namespace superdix {

/// Exponent vector of a PBW monomial in the algebra's basis order.
using Exponents = std::vector<unsigned short>;

unsigned degree(const Exponents& e);

/// Element of U(g) in PBW normal form: exponents of odd generators are at most 1.
class PBWElement {
public:
    using Terms = std::map<Exponents, Scalar>;

    explicit PBWElement(AlgebraPtr alg);
    static PBWElement constant(AlgebraPtr alg, const Scalar& c);
    static PBWElement generator(AlgebraPtr alg, std::size_t i);
    /// Degree-one element sum_i v_i e_i.
    static PBWElement from_vector(AlgebraPtr alg, const Vector& v);
    /// Single normal monomial (exponents must respect the odd cap).
    static PBWElement monomial(AlgebraPtr alg, const Exponents& e, const Scalar& c = Scalar(1));

    [[nodiscard]] const AlgebraPtr& algebra() const { return alg_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] unsigned degree() const;
    /// Parity when all monomials share one; nullopt for zero or mixed elements.
    [[nodiscard]] std::optional<Parity> parity() const;
    [[nodiscard]] PBWElement component(Parity p) const;
    [[nodiscard]] Scalar coefficient(const Exponents& e) const;
    /// Sum of the terms of exactly degree d.
    [[nodiscard]] PBWElement homogeneous_part(unsigned d) const;

    void add_term(const Exponents& e, const Scalar& c);
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement& operator*=(const Scalar& s);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const Scalar& s, PBWElement a) { return a *= s; }
    PBWElement operator-() const;
    friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    friend bool operator==(const PBWElement& a, const PBWElement& b);

    [[nodiscard]] std::string to_string() const;

private:
    AlgebraPtr alg_;
    Terms terms_;
};

Parity monomial_parity(const SuperLieAlgebra& alg, const Exponents& e);
std::string monomial_string(const SuperLieAlgebra& alg, const Exponents& e);

PBWElement multiply(const PBWElement& u, const PBWElement& v);
PBWElement power(const PBWElement& u, unsigned n);
/// Principal antiautomorphism: x |-> -x on g, with graded reversal signs.
PBWElement alpha(const PBWElement& u);
/// Parity automorphism a0 + a1 |-> a0 - a1.
PBWElement sigma(const PBWElement& u);
/// Supercommutator [u, v] for homogeneous or mixed u, v (bilinear extension).
PBWElement supercommutator(const PBWElement& u, const PBWElement& v);
/// ad(x)(u) for x in g; if `confine` is given, checks [x, confine] within confine.
PBWElement ad_action(const Vector& x, const PBWElement& u, const GradedSubspace* confine = nullptr);
/// ad extended to U(g): ad(x1...xn) = ad(x1) o ... o ad(xn).
PBWElement ad_of_element(const PBWElement& a, const PBWElement& u);

/// Algebra morphism U(g) -> U(g') determined by the images of the generators.
PBWElement map_generators(const PBWElement& u, const AlgebraPtr& target, const std::vector<PBWElement>& images);
/// Every normal monomial of total degree <= d.
std::vector<Exponents> monomials_up_to(const SuperLieAlgebra& alg, unsigned d);

/// Normal forms modulo the left ideal U(g)J, J = kernel of lambda on U(h).
/// The algebra is re-based with a complement of h first and h last; results
/// live in U(g') supported on complement monomials.
class LeftIdealReducer {
public:
    LeftIdealReducer(AlgebraPtr g, const GradedSubspace& h, const Functional& lambda);
    /// Reduction for an arbitrary (not necessarily even) character of U(h),
    /// given by its values on g's coordinates; checked to be a character.
    LeftIdealReducer(AlgebraPtr g, const GradedSubspace& h, const Vector& character);

    [[nodiscard]] const AlgebraPtr& source() const { return g_; }
    [[nodiscard]] const AlgebraPtr& rebased() const { return rebased_; }
    [[nodiscard]] std::size_t complement_size() const { return m_; }
    [[nodiscard]] const GradedSubspace& subalgebra() const { return h_; }
    /// Image of a U(g) element in U(g').
    [[nodiscard]] PBWElement to_rebased(const PBWElement& u) const;
    /// Reduce an element already in U(g').
    [[nodiscard]] PBWElement reduce_rebased(const PBWElement& u) const;
    [[nodiscard]] PBWElement reduce(const PBWElement& u) const { return reduce_rebased(to_rebased(u)); }
    /// Whether a U(g') monomial only involves complement generators.
    [[nodiscard]] bool is_complement_monomial(const Exponents& e) const;

private:
    void init(const Vector& character);

    AlgebraPtr g_;
    GradedSubspace h_;
    AlgebraPtr rebased_;
    std::size_t m_ = 0;
    std::vector<Scalar> tail_values_;
    std::vector<PBWElement> generator_images_;
};

PBWElement reduce_mod_left_ideal(const PBWElement& u, const GradedSubspace& h, const Functional& lambda);

}  // namespace superdix
