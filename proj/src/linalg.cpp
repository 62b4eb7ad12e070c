#include "superdix/linalg.hpp"

#include <algorithm>
#include <utility>

namespace superdix {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= s;
    return r;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Scalar s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector normalized_leading(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return x.inverse() * v;
    return v;
}

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x *= s;
    return m;
}

EchelonForm rref(const Matrix& input) {
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x = zero_vector(m.cols());
        x[f] = Scalar(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    EchelonForm e = rref(aug);
    Vector x = zero_vector(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    EchelonForm e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    EchelonForm e = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
    return span(ambient, vs);
}

Vector Subspace::residual(const Vector& v) const {
    if (v.size() != n_) throw DimensionMismatch("vector not in ambient space");
    Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw std::invalid_argument("coordinates: vector outside subspace");
    Vector c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end()) out.push_back(j);
    return out;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.n_ != n_) throw DimensionMismatch("subspace ambient mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.n_ != n_) throw DimensionMismatch("subspace ambient mismatch");
    if (basis_.empty() || o.basis_.empty()) return Subspace(n_);
    std::vector<Vector> cols = basis_;
    for (const auto& b : o.basis_) cols.push_back(Scalar(-1) * b);
    auto ns = nullspace(Matrix::from_columns(cols, n_));
    std::vector<Vector> vs;
    for (const auto& c : ns) {
        Vector v = zero_vector(n_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!c[i].is_zero()) v = v + c[i] * basis_[i];
        vs.push_back(std::move(v));
    }
    return span(n_, vs);
}

// ---------------------------------------------------------------------------
// Graded subspaces

std::optional<Parity> vector_parity(const std::vector<Parity>& parities, const Vector& v) {
    std::optional<Parity> p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (p && *p != parities[i]) return std::nullopt;
        p = parities[i];
    }
    return p;
}

Vector component(const std::vector<Parity>& parities, const Vector& v, Parity p) {
    Vector r = v;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (parities[i] != p) r[i] = Scalar(0);
    return r;
}

GradedSubspace::GradedSubspace(std::vector<Parity> parities, Subspace space)
    : parities_(std::move(parities)), space_(std::move(space)) {
    if (space_.ambient() != parities_.size()) throw DimensionMismatch("graded subspace ambient mismatch");
    for (const auto& b : space_.basis())
        if (!vector_parity(parities_, b)) throw std::invalid_argument("subspace is not graded");
}

GradedSubspace GradedSubspace::span(const std::vector<Parity>& parities, const std::vector<Vector>& vectors) {
    return GradedSubspace(parities, Subspace::span(parities.size(), vectors));
}

GradedSubspace GradedSubspace::span_components(const std::vector<Parity>& parities,
                                               const std::vector<Vector>& vectors) {
    std::vector<Vector> comps;
    for (const auto& v : vectors)
        for (Parity p : {Parity::Even, Parity::Odd}) {
            Vector c = component(parities, v, p);
            if (!is_zero(c)) comps.push_back(std::move(c));
        }
    return span(parities, comps);
}

GradedSubspace GradedSubspace::zero(const std::vector<Parity>& parities) {
    return GradedSubspace(parities, Subspace(parities.size()));
}

GradedSubspace GradedSubspace::whole(const std::vector<Parity>& parities) {
    return GradedSubspace(parities, Subspace::whole(parities.size()));
}

GradedSubspace GradedSubspace::even_part_of_space(const std::vector<Parity>& parities) {
    return whole(parities).part(Parity::Even);
}

GradedSubspace GradedSubspace::odd_part_of_space(const std::vector<Parity>& parities) {
    return whole(parities).part(Parity::Odd);
}

SuperDim GradedSubspace::sdim() const {
    SuperDim d;
    for (const auto& b : basis())
        (*vector_parity(parities_, b) == Parity::Even ? d.even : d.odd)++;
    return d;
}

std::vector<Vector> GradedSubspace::basis(Parity p) const {
    std::vector<Vector> out;
    for (const auto& b : basis())
        if (*vector_parity(parities_, b) == p) out.push_back(b);
    return out;
}

GradedSubspace GradedSubspace::part(Parity p) const { return span(parities_, basis(p)); }

GradedSubspace GradedSubspace::sum(const GradedSubspace& o) const {
    return GradedSubspace(parities_, space_.sum(o.space_));
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& o) const {
    // Intersect parity by parity so the result has a homogeneous basis.
    std::vector<Vector> vs;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        Subspace a = Subspace::span(ambient(), basis(p));
        Subspace b = Subspace::span(ambient(), o.basis(p));
        auto i = a.intersect(b);
        vs.insert(vs.end(), i.basis().begin(), i.basis().end());
    }
    return span(parities_, vs);
}

// ---------------------------------------------------------------------------
// Forms

EvenBilinearForm::EvenBilinearForm(std::vector<Parity> parities, Matrix gram, FormSymmetry symmetry)
    : parities_(std::move(parities)), gram_(std::move(gram)), symmetry_(symmetry) {
    std::size_t n = parities_.size();
    if (gram_.rows() != n || gram_.cols() != n) throw DimensionMismatch("form matrix shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (parities_[i] != parities_[j]) {
                if (!gram_(i, j).is_zero()) throw std::invalid_argument("form is not even");
                continue;
            }
            Scalar expected = block_symmetric(parities_[i]) ? gram_(j, i) : -gram_(j, i);
            if (gram_(i, j) != expected) throw std::invalid_argument("form violates its symmetry type");
        }
}

bool EvenBilinearForm::block_symmetric(Parity p) const {
    bool even_sym = symmetry_ == FormSymmetry::SuperSymmetric;
    return p == Parity::Even ? even_sym : !even_sym;
}

Scalar EvenBilinearForm::operator()(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

GradedSubspace EvenBilinearForm::radical() const {
    return GradedSubspace::span_components(parities_, nullspace(gram_));
}

GradedSubspace perp(const EvenBilinearForm& form, const GradedSubspace& w) {
    if (w.ambient() != form.ambient()) throw DimensionMismatch("perp: subspace not in form's space");
    if (w.dim() == 0) return GradedSubspace::whole(form.parities());
    std::vector<Vector> rows;
    Matrix gt = form.gram().transpose();
    for (const auto& b : w.basis()) rows.push_back(gt * b);  // row = b^T G
    return GradedSubspace::span_components(form.parities(),
                                           nullspace(Matrix::from_rows(rows, form.ambient())));
}

bool is_totally_isotropic(const GradedSubspace& w, const EvenBilinearForm& form) {
    if (w.ambient() != form.ambient()) throw DimensionMismatch("isotropy: subspace not in form's space");
    for (const auto& a : w.basis())
        for (const auto& b : w.basis())
            if (!form(a, b).is_zero()) return false;
    return true;
}

namespace {

// Basis vectors of `big` (in order) completing `small` inside it.
std::vector<Vector> completion(const std::vector<Vector>& small, const std::vector<Vector>& big, std::size_t n) {
    Subspace acc = Subspace::span(n, small);
    std::vector<Vector> out;
    for (const auto& v : big) {
        if (acc.contains(v)) continue;
        out.push_back(v);
        std::vector<Vector> grown = acc.basis();
        grown.push_back(v);
        acc = Subspace::span(n, grown);
    }
    return out;
}

}  // namespace

bool is_maximal_isotropic(const GradedSubspace& w, const EvenBilinearForm& form) {
    if (!is_totally_isotropic(w, form)) return false;
    GradedSubspace wp = perp(form, w);
    GradedSubspace rad = form.radical();
    for (Parity p : {Parity::Even, Parity::Odd}) {
        std::size_t dim_v = 0;
        for (Parity q : form.parities())
            if (q == p) ++dim_v;
        if (!form.block_symmetric(p)) {
            if (2 * w.part(p).dim() != dim_v + rad.part(p).dim()) return false;
            continue;
        }
        // W_p^perp / W_p must be anisotropic: over a closed field this means
        // dimension 0, or dimension 1 with a nonzero induced form.
        auto comp = completion(w.basis(p), wp.basis(p), form.ambient());
        if (comp.size() >= 2) return false;
        if (comp.size() == 1 && form(comp[0], comp[0]).is_zero()) return false;
    }
    return true;
}

std::optional<Vector> find_isotropic_vector(const Matrix& g, bool allow_adjoin) {
    std::size_t m = g.rows();
    if (m == 0) return std::nullopt;
    if (auto ns = nullspace(g); !ns.empty()) return ns.front();
    for (std::size_t i = 0; i < m; ++i)
        if (g(i, i).is_zero()) return unit_vector(m, i);
    auto pair_vector = [&](const Matrix& a, std::size_t i, std::size_t j, bool adjoin) -> std::optional<Vector> {
        // a_ii + 2 a_ij t + a_jj t^2 = 0
        Scalar disc = a(i, j) * a(i, j) - a(i, i) * a(j, j);
        std::optional<Scalar> s = adjoin ? std::optional<Scalar>(adjoin_sqrt(disc)) : try_sqrt(disc);
        if (!s) return std::nullopt;
        Scalar t = (-a(i, j) + *s) / a(j, j);
        Vector v = unit_vector(m, i);
        v[j] = t;
        return v;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (auto v = pair_vector(g, i, j, false)) return v;

    // Congruence diagonalization: columns of p are the new basis.
    Matrix a = g;
    Matrix p = Matrix::identity(m);
    auto add_basis = [&](std::size_t dst, std::size_t src, const Scalar& f) {  // e_dst += f e_src
        for (std::size_t r = 0; r < m; ++r) p(r, dst) += f * p(r, src);
        for (std::size_t c = 0; c < m; ++c) a(dst, c) += f * a(src, c);
        for (std::size_t r = 0; r < m; ++r) a(r, dst) += f * a(r, src);
    };
    for (std::size_t k = 0; k < m; ++k) {
        if (a(k, k).is_zero()) {
            for (std::size_t j = k + 1; j < m; ++j)
                if (!a(k, j).is_zero()) {
                    add_basis(k, j, Scalar(1));
                    break;
                }
        }
        if (a(k, k).is_zero()) continue;
        for (std::size_t j = k + 1; j < m; ++j)
            if (!a(j, k).is_zero()) add_basis(j, k, -(a(j, k) / a(k, k)));
    }
    for (std::size_t i = 0; i < m; ++i)
        if (a(i, i).is_zero()) return p * unit_vector(m, i);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (auto v = pair_vector(a, i, j, false)) return p * *v;
    if (allow_adjoin && m >= 2)
        if (auto v = pair_vector(a, 0, 1, true)) return p * *v;
    return std::nullopt;
}

}  // namespace superdix
