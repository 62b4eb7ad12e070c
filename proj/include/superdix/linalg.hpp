#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superdix/scalar.hpp"

namespace superdix {

using Vector = std::vector<Scalar>;

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline int sign_of(Parity a, Parity b) {  // (-1)^{|a||b|}
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
const char* to_string(Parity p);

struct SuperDim {
    std::size_t even = 0;
    std::size_t odd = 0;
    [[nodiscard]] std::size_t total() const { return even + odd; }
    friend SuperDim operator+(SuperDim a, SuperDim b) { return {a.even + b.even, a.odd + b.odd}; }
    friend bool operator==(SuperDim a, SuperDim b) = default;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
/// First nonzero entry scaled to 1 (zero vector returned unchanged).
Vector normalized_leading(const Vector& v);

/// Dense row-major matrix of tower scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    Matrix reduced;                   // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form; leftmost pivot, first nonzero row wins.
EchelonForm rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column with that entry 1.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& m);

/// Subspace of k^n stored as a reduced echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// v minus its echelon reduction; zero iff v lies in the subspace.
    [[nodiscard]] Vector residual(const Vector& v) const;
    /// Coordinates of v (which must lie in the subspace) against basis().
    [[nodiscard]] Vector coordinates(const Vector& v) const;
    /// Standard basis vectors at non-pivot columns.
    [[nodiscard]] std::vector<std::size_t> complement_indices() const;

    [[nodiscard]] Subspace sum(const Subspace& o) const;
    [[nodiscard]] Subspace intersect(const Subspace& o) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    std::size_t n_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Graded subspace of a super vector space with fixed coordinate parities.
/// The echelon basis of a graded subspace consists of homogeneous vectors.
class GradedSubspace {
public:
    GradedSubspace() = default;
    GradedSubspace(std::vector<Parity> parities, Subspace space);
    static GradedSubspace span(const std::vector<Parity>& parities, const std::vector<Vector>& vectors);
    /// Span of the homogeneous components of the given vectors.
    static GradedSubspace span_components(const std::vector<Parity>& parities,
                                          const std::vector<Vector>& vectors);
    static GradedSubspace zero(const std::vector<Parity>& parities);
    static GradedSubspace whole(const std::vector<Parity>& parities);
    static GradedSubspace even_part_of_space(const std::vector<Parity>& parities);
    static GradedSubspace odd_part_of_space(const std::vector<Parity>& parities);

    [[nodiscard]] const std::vector<Parity>& parities() const { return parities_; }
    [[nodiscard]] const Subspace& space() const { return space_; }
    [[nodiscard]] std::size_t ambient() const { return parities_.size(); }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }
    [[nodiscard]] SuperDim sdim() const;
    [[nodiscard]] const std::vector<Vector>& basis() const { return space_.basis(); }
    [[nodiscard]] std::vector<Vector> basis(Parity p) const;
    [[nodiscard]] GradedSubspace part(Parity p) const;
    [[nodiscard]] bool contains(const Vector& v) const { return space_.contains(v); }
    [[nodiscard]] bool contains(const GradedSubspace& o) const { return space_.contains(o.space_); }
    [[nodiscard]] GradedSubspace sum(const GradedSubspace& o) const;
    [[nodiscard]] GradedSubspace intersect(const GradedSubspace& o) const;
    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.parities_ == b.parities_ && a.space_ == b.space_;
    }

private:
    std::vector<Parity> parities_;
    Subspace space_;
};

/// Parity of a vector in a graded coordinate space; nullopt when inhomogeneous or zero.
std::optional<Parity> vector_parity(const std::vector<Parity>& parities, const Vector& v);
Vector component(const std::vector<Parity>& parities, const Vector& v, Parity p);

enum class FormSymmetry { SuperAntisymmetric, SuperSymmetric };

/// Even bilinear form B(u,v) = u^T G v on a super space; cross-parity entries vanish.
class EvenBilinearForm {
public:
    EvenBilinearForm(std::vector<Parity> parities, Matrix gram, FormSymmetry symmetry);

    [[nodiscard]] const std::vector<Parity>& parities() const { return parities_; }
    [[nodiscard]] const Matrix& gram() const { return gram_; }
    [[nodiscard]] FormSymmetry symmetry() const { return symmetry_; }
    [[nodiscard]] std::size_t ambient() const { return parities_.size(); }
    [[nodiscard]] Scalar operator()(const Vector& u, const Vector& v) const;
    /// Whether the block on parity p is symmetric (otherwise antisymmetric).
    [[nodiscard]] bool block_symmetric(Parity p) const;
    [[nodiscard]] GradedSubspace radical() const;

private:
    std::vector<Parity> parities_;
    Matrix gram_;
    FormSymmetry symmetry_;
};

GradedSubspace perp(const EvenBilinearForm& form, const GradedSubspace& w);
bool is_totally_isotropic(const GradedSubspace& w, const EvenBilinearForm& form);
/// Maximality per parity: antisymmetric blocks by the dimension count,
/// symmetric blocks by anisotropy of W^perp / W (root adjunction allowed).
bool is_maximal_isotropic(const GradedSubspace& w, const EvenBilinearForm& form);

/// A nonzero v with v^T g v = 0 for symmetric g.  Search order: kernel vectors,
/// isotropic coordinate vectors, 2x2 subforms with a square discriminant, then
/// (if allowed) one square root adjoined after diagonalization.
std::optional<Vector> find_isotropic_vector(const Matrix& gram, bool allow_adjoin = true);

std::string to_string(const Vector& v);

}  // namespace superdix
