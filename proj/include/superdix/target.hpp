#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superdix/linalg.hpp"

namespace superdix {

/// One tensor factor: a Weyl pair [q,p] = 1, a graded 2x2 matrix algebra, or
/// a single odd Clifford generator with gamma^2 = square.
struct TargetFactor {
    enum class Kind { Weyl, Matrix, Clifford };
    Kind kind;
    Scalar square;  // Clifford only
};

/// Ordered tensor product of factors; factor 0 is leftmost in every product.
class FactoredTarget {
public:
    explicit FactoredTarget(std::vector<TargetFactor> factors);

    [[nodiscard]] const std::vector<TargetFactor>& factors() const { return factors_; }
    [[nodiscard]] std::size_t offset(std::size_t factor) const { return offsets_[factor]; }
    [[nodiscard]] std::size_t key_size() const { return key_size_; }
    [[nodiscard]] std::size_t weyl_count() const;
    [[nodiscard]] std::size_t matrix_count() const;
    [[nodiscard]] bool has_clifford() const;
    /// Display names: q1/p1 for Weyl pairs, E11_1.. for matrix units, g for gamma.
    [[nodiscard]] std::string factor_label(std::size_t factor) const;

private:
    std::vector<TargetFactor> factors_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> display_index_;
    std::size_t key_size_ = 0;
};

using TargetPtr = std::shared_ptr<const FactoredTarget>;

/// Basis key: Weyl factors use two slots (q and p exponents), matrix factors
/// one slot (0 = E11, 1 = E12, 2 = E21, 3 = E22), Clifford one slot (0 or 1).
using TargetKey = std::vector<unsigned short>;

class TargetElement {
public:
    using Terms = std::map<TargetKey, Scalar>;

    explicit TargetElement(TargetPtr target);
    static TargetElement scalar(TargetPtr target, const Scalar& c);
    static TargetElement weyl_q(TargetPtr target, std::size_t factor, unsigned power = 1);
    static TargetElement weyl_p(TargetPtr target, std::size_t factor, unsigned power = 1);
    /// Matrix unit E_{row col}, rows and columns numbered 1 and 2.
    static TargetElement matrix_unit(TargetPtr target, std::size_t factor, int row, int col);
    static TargetElement gamma(TargetPtr target, std::size_t factor);

    [[nodiscard]] const TargetPtr& target() const { return target_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] TargetElement component(Parity p) const;

    void add_term(const TargetKey& k, const Scalar& c);
    TargetElement& operator+=(const TargetElement& o);
    TargetElement& operator-=(const TargetElement& o);
    TargetElement& operator*=(const Scalar& s);
    friend TargetElement operator+(TargetElement a, const TargetElement& b) { return a += b; }
    friend TargetElement operator-(TargetElement a, const TargetElement& b) { return a -= b; }
    friend TargetElement operator*(const Scalar& s, TargetElement a) { return a *= s; }
    TargetElement operator-() const;
    friend TargetElement operator*(const TargetElement& a, const TargetElement& b);
    friend bool operator==(const TargetElement& a, const TargetElement& b);

    [[nodiscard]] std::string to_string() const;

private:
    TargetPtr target_;
    Terms terms_;
};

Parity key_parity(const FactoredTarget& t, const TargetKey& k);
TargetElement supercommutator(const TargetElement& a, const TargetElement& b);

/// Target [head factors..., tail factors...].
TargetPtr concat(const FactoredTarget& head, const FactoredTarget& tail);
/// (a (x) 1)(1 (x) b) inside `joined` = concat(a.target, b.target).
TargetElement tensor(const TargetPtr& joined, const TargetElement& a, const TargetElement& b);

/// Generators of the target as an algebra: q_i, p_i, E12, E21 of each matrix factor, gamma.
std::vector<TargetElement> target_generators(const TargetPtr& t);
/// Basis elements with total Weyl degree <= d (every matrix unit and gamma power).
std::vector<TargetKey> target_basis_up_to(const FactoredTarget& t, unsigned d);

/// Dimension of the degree-bounded supercenter, per parity {even, odd}.
SuperDim supercenter_dimension(const TargetPtr& t, unsigned d);

/// Presentation of the Clifford part by odd generators e_i with e_i^2 = 1.
struct CliffordPresentation {
    std::vector<TargetElement> generators;  // e_1 .. e_q inside the target
    /// Each matrix unit and gamma as a combination of products of the e_i.
    std::vector<std::pair<std::string, std::vector<std::pair<Scalar, std::vector<std::size_t>>>>> inverse;
    bool verified = false;
    std::string message;
};

CliffordPresentation canonicalize_clifford(const TargetPtr& t);
/// Rank of the 2^q ordered products of the presentation's generators.
std::size_t clifford_span_dimension(const CliffordPresentation& pres);

}  // namespace superdix
