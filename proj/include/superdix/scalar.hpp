#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace superdix {

using Rational = mpq_class;

/// An element of Q(sqrt(d1), ..., sqrt(dk)), the first k levels of the
/// process-wide scalar tower.  Coefficients are indexed by subsets of levels
/// (bit i set means the basis product contains sqrt(d_{i+1})).
class Scalar {
public:
    Scalar() : c_{Rational(0)} {}
    Scalar(long v) : c_{Rational(v)} {}  // NOLINT: implicit by design
    Scalar(int v) : c_{Rational(v)} {}   // NOLINT
    Scalar(const Rational& q) : c_{q} { c_[0].canonicalize(); }  // NOLINT
    static Scalar fraction(long num, long den);
    static Scalar from_coefficients(std::vector<Rational> coeffs);

    [[nodiscard]] bool is_zero() const { return c_.size() == 1 && sgn(c_[0]) == 0; }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    [[nodiscard]] bool is_rational() const { return c_.size() == 1; }
    [[nodiscard]] const Rational& rational() const;  // throws unless is_rational()
    /// Number of tower levels this value actually depends on.
    [[nodiscard]] std::size_t levels() const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    [[nodiscard]] Scalar inverse() const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Total order used only for deterministic containers.
    friend bool operator<(const Scalar& a, const Scalar& b);

    /// "3/2", "1 + sqrt(2)", "-sqrt(-1)", nested radicands printed recursively.
    [[nodiscard]] std::string to_string() const;
    /// Like to_string but wrapped in parentheses when it is a sum.
    [[nodiscard]] std::string to_factor_string() const;

private:
    explicit Scalar(std::vector<Rational> c) : c_(std::move(c)) { normalize(); }
    void normalize();
    std::vector<Rational> c_;

    friend class Tower;
};

/// Append-only chain of square-root adjunctions shared by the whole process.
/// Existing levels never change, so values built over a prefix stay valid.
class Tower {
public:
    static constexpr std::size_t kMaxLevels = 12;

    static Tower& global();

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const Scalar& radicand(std::size_t level) const;
    [[nodiscard]] std::vector<Scalar> radicands() const;

    /// A square root inside the current tower, if one exists (complete test).
    [[nodiscard]] std::optional<Scalar> sqrt(const Scalar& x) const;
    /// Returns a square root of x, adjoining a new level when needed.
    /// Throws std::invalid_argument for x == 0.
    Scalar adjoin_sqrt(const Scalar& x);

    /// Internal arithmetic kernels over a level prefix.
    static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b);
    static std::vector<Rational> inv(const std::vector<Rational>& a);

private:
    Tower() = default;
    struct Impl;
    static Impl& impl();
};

/// Convenience wrappers around Tower::global().
Scalar adjoin_sqrt(const Scalar& radicand);
std::optional<Scalar> try_sqrt(const Scalar& x);

/// Renders sum_i c_i * label_i in the element grammar; an empty label marks
/// the constant term.  Zero coefficients are skipped; "0" for an empty sum.
std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

/// n!
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace superdix
