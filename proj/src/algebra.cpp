#include "superdix/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "pbw_memo.hpp"

namespace superdix {

SuperLieAlgebra::SuperLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
                                 std::vector<std::vector<Vector>> table)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      parities_(std::move(parities)),
      table_(std::move(table)),
      memo_(std::make_unique<detail::PbwMemo>()) {
    std::size_t n = labels_.size();
    if (parities_.size() != n || table_.size() != n) throw DimensionMismatch("algebra table shape");
    zero_.assign(n * n, true);
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[i].size() != n) throw DimensionMismatch("algebra table shape");
        for (std::size_t j = 0; j < n; ++j) {
            if (table_[i][j].size() != n) throw DimensionMismatch("algebra table shape");
            zero_[i * n + j] = superdix::is_zero(table_[i][j]);
        }
    }
}

SuperLieAlgebra::~SuperLieAlgebra() = default;

SuperDim SuperLieAlgebra::sdim() const {
    SuperDim d;
    for (Parity p : parities_) (p == Parity::Even ? d.even : d.odd)++;
    return d;
}

std::optional<std::size_t> SuperLieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Vector SuperLieAlgebra::bracket(const Vector& a, const Vector& b) const {
    std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw DimensionMismatch("bracket operand size");
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero() || bracket_zero(i, j)) continue;
            Scalar f = a[i] * b[j];
            const Vector& c = table_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) r[k] += f * c[k];
        }
    }
    return r;
}

Matrix SuperLieAlgebra::ad(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, basis_vector(j)));
    return Matrix::from_columns(cols, dim());
}

Matrix SuperLieAlgebra::right_ad(const Vector& y) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(basis_vector(j), y));
    return Matrix::from_columns(cols, dim());
}

std::string SuperLieAlgebra::format(const Vector& v) const {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < v.size(); ++i) terms.emplace_back(v[i], labels_[i]);
    return format_sum(terms);
}

AlgebraPtr make_algebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
                        std::vector<std::vector<Vector>> table) {
    return std::make_shared<const SuperLieAlgebra>(std::move(name), std::move(labels), std::move(parities),
                                                   std::move(table));
}

// ---------------------------------------------------------------------------
// Functionals

Functional::Functional(const SuperLieAlgebra& alg, Vector coeffs) : c_(std::move(coeffs)) {
    if (c_.size() != alg.dim()) throw DimensionMismatch("functional length");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (alg.parity(i) == Parity::Odd && !c_[i].is_zero())
            throw std::invalid_argument("functional must vanish on odd basis element " + alg.labels()[i]);
}

Functional Functional::zero(const SuperLieAlgebra& alg) { return Functional(alg, zero_vector(alg.dim())); }

// ---------------------------------------------------------------------------
// Validation and structure

ValidationReport validate(const SuperLieAlgebra& g) {
    std::size_t n = g.dim();
    const auto& L = g.labels();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!g.bracket_basis(i, j)[k].is_zero() && g.parity(k) != g.parity(i) + g.parity(j))
                    return {false, "parity",
                            "[" + L[i] + "," + L[j] + "] has a component along " + L[k] + " of the wrong parity"};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar s(-sign_of(g.parity(i), g.parity(j)));
            if (g.bracket_basis(j, i) != s * g.bracket_basis(i, j))
                return {false, "superskewsymmetry",
                        "[" + L[j] + "," + L[i] + "] != " + (s.is_one() ? "+" : "-") + "[" + L[i] + "," + L[j] + "]"};
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = g.basis_vector(i), y = g.basis_vector(j), w = g.basis_vector(k);
                Vector lhs = g.bracket(x, g.bracket(y, w));
                Vector rhs = g.bracket(g.bracket(x, y), w) +
                             Scalar(sign_of(g.parity(i), g.parity(j))) * g.bracket(y, g.bracket(x, w));
                if (lhs != rhs)
                    return {false, "super Jacobi", "fails on (" + L[i] + ", " + L[j] + ", " + L[k] + ")"};
            }
    return {};
}

GradedSubspace bracket_space(const SuperLieAlgebra& g, const GradedSubspace& a, const GradedSubspace& b) {
    std::vector<Vector> vs;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) {
            Vector w = g.bracket(u, v);
            if (!is_zero(w)) vs.push_back(std::move(w));
        }
    return GradedSubspace::span_components(g.parities(), vs);
}

std::vector<GradedSubspace> lower_central_series(const SuperLieAlgebra& g) {
    std::vector<GradedSubspace> out{GradedSubspace::whole(g.parities())};
    auto whole = out.front();
    while (true) {
        auto next = bracket_space(g, whole, out.back());
        bool stable = next == out.back();
        out.push_back(std::move(next));
        if (stable || out.back().dim() == 0) break;
    }
    return out;
}

std::vector<GradedSubspace> derived_series(const SuperLieAlgebra& g) {
    std::vector<GradedSubspace> out{GradedSubspace::whole(g.parities())};
    while (true) {
        auto next = bracket_space(g, out.back(), out.back());
        bool stable = next == out.back();
        out.push_back(std::move(next));
        if (stable || out.back().dim() == 0) break;
    }
    return out;
}

bool is_nilpotent(const SuperLieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

bool is_solvable(const SuperLieAlgebra& g) {
    auto d = GradedSubspace::even_part_of_space(g.parities());
    while (d.dim() > 0) {
        auto next = bracket_space(g, d, d);
        if (next == d) return false;
        d = std::move(next);
    }
    return true;
}

namespace {

// Rows spanning the annihilator of t, so that w lies in t iff rows * w = 0.
Matrix annihilator_rows(const GradedSubspace& t) {
    std::size_t n = t.ambient();
    if (t.dim() == 0) return Matrix::identity(n);
    auto ns = nullspace(Matrix::from_rows(t.basis(), n));
    if (ns.empty()) return Matrix(0, n);
    return Matrix::from_rows(ns, n);
}

Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Matrix m(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
    return m;
}

}  // namespace

GradedSubspace bracket_preimage(const SuperLieAlgebra& g, const GradedSubspace& s, const GradedSubspace& t) {
    Matrix q = annihilator_rows(t);
    std::vector<Matrix> blocks;
    for (const auto& v : s.basis()) blocks.push_back(q * g.right_ad(v));
    if (blocks.empty()) return GradedSubspace::whole(g.parities());
    return GradedSubspace::span_components(g.parities(), nullspace(stack(blocks, g.dim())));
}

GradedSubspace centralizer(const SuperLieAlgebra& g, const std::vector<Vector>& s) {
    return bracket_preimage(g, GradedSubspace::span_components(g.parities(), s), GradedSubspace::zero(g.parities()));
}

GradedSubspace center(const SuperLieAlgebra& g) {
    return bracket_preimage(g, GradedSubspace::whole(g.parities()), GradedSubspace::zero(g.parities()));
}

bool is_subalgebra(const SuperLieAlgebra& g, const GradedSubspace& s) {
    for (const auto& a : s.basis())
        for (const auto& b : s.basis())
            if (!s.contains(g.bracket(a, b))) return false;
    return true;
}

bool is_ideal(const SuperLieAlgebra& g, const GradedSubspace& s) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& b : s.basis())
            if (!s.contains(g.bracket(g.basis_vector(i), b))) return false;
    return true;
}

Rebased rebase(const SuperLieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> labels,
               std::string name) {
    std::size_t n = g.dim();
    if (basis.size() != n || labels.size() != n) throw DimensionMismatch("rebase needs a full basis");
    Matrix to_old = Matrix::from_columns(basis, n);
    Matrix to_new = inverse(to_old);
    std::vector<Parity> par;
    for (const auto& b : basis) {
        auto p = vector_parity(g.parities(), b);
        if (!p) throw std::invalid_argument("rebase: basis vector is not homogeneous");
        par.push_back(*p);
    }
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = to_new * g.bracket(basis[i], basis[j]);
    return {make_algebra(std::move(name), std::move(labels), std::move(par), std::move(table)), to_old, to_new};
}

QuotientResult quotient(const SuperLieAlgebra& g, const GradedSubspace& ideal, std::string name) {
    if (!is_ideal(g, ideal)) throw HypothesisError("quotient: subspace is not an ideal");
    auto comp = ideal.space().complement_indices();
    std::size_t n = g.dim(), m = comp.size();
    Matrix proj(m, n), sec(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        Vector r = ideal.space().residual(g.basis_vector(j));
        for (std::size_t a = 0; a < m; ++a) proj(a, j) = r[comp[a]];
    }
    for (std::size_t a = 0; a < m; ++a) sec(comp[a], a) = Scalar(1);
    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (auto c : comp) {
        labels.push_back(g.labels()[c]);
        par.push_back(g.parity(c));
    }
    std::vector<std::vector<Vector>> table(m, std::vector<Vector>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a][b] = proj * g.bracket_basis(comp[a], comp[b]);
    if (name.empty()) name = g.name() + "/ideal";
    return {make_algebra(std::move(name), std::move(labels), std::move(par), std::move(table)), proj, sec};
}

SubalgebraResult subalgebra(const SuperLieAlgebra& g, const GradedSubspace& s, std::string name) {
    if (!is_subalgebra(g, s)) throw HypothesisError("subalgebra: subspace is not closed under the bracket");
    const auto& basis = s.basis();
    std::size_t m = basis.size();
    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (const auto& b : basis) {
        par.push_back(*vector_parity(g.parities(), b));
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!b[i].is_zero()) {
                ++nonzero;
                at = i;
            }
        labels.push_back(nonzero == 1 && b[at].is_one() ? g.labels()[at] : "[" + g.format(b) + "]");
    }
    std::vector<std::vector<Vector>> table(m, std::vector<Vector>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a][b] = s.space().coordinates(g.bracket(basis[a], basis[b]));
    if (name.empty()) name = g.name() + "/sub";
    return {make_algebra(std::move(name), std::move(labels), std::move(par), std::move(table)),
            Matrix::from_columns(basis, g.dim()), s};
}

// ---------------------------------------------------------------------------
// Bell-Musson triples

namespace {

// Index of the first nonzero coordinate of z; z-coefficients are read there.
std::size_t anchor(const Vector& z) {
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!z[i].is_zero()) return i;
    throw std::logic_error("anchor of zero vector");
}

Scalar z_coefficient(const Vector& w, const Vector& z) {
    std::size_t a = anchor(z);
    Scalar c = w[a] / z[a];
    if (w != c * z) throw std::logic_error("vector is not a multiple of z");
    return c;
}

}  // namespace

BMTriple find_bm_triple(const SuperLieAlgebra& g, const Functional& lambda) {
    if (!is_nilpotent(g)) throw HypothesisError("find_bm_triple: algebra is not nilpotent");
    auto zc = center(g);
    if (zc.dim() != 1 || zc.sdim().even != 1)
        throw HypothesisError("find_bm_triple: center is not one-dimensional and even");
    Vector z = zc.basis().front();
    Scalar lz = lambda(z);
    if (lz.is_zero()) throw HypothesisError("find_bm_triple: lambda vanishes on the center");
    z = lz.inverse() * z;
    auto zspan = GradedSubspace::span(g.parities(), {z});
    auto lifts = bracket_preimage(g, GradedSubspace::whole(g.parities()), zspan);

    BMTriple t;
    t.z = z;
    std::optional<Vector> y;
    for (const auto& v : lifts.basis(Parity::Even))
        if (!zspan.contains(v)) {
            y = v - lambda(v) * z;
            t.parity = Parity::Even;
            break;
        }
    if (!y) {
        auto odd = lifts.basis(Parity::Odd);
        std::size_t m = odd.size();
        Matrix q(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) q(a, b) = z_coefficient(g.bracket(odd[a], odd[b]), z);
        auto c = find_isotropic_vector(q, true);
        if (!c) throw HypothesisError("find_bm_triple: no isotropic odd lift (terminal (1|1) case?)");
        Vector v = zero_vector(g.dim());
        for (std::size_t a = 0; a < m; ++a)
            if (!(*c)[a].is_zero()) v = v + (*c)[a] * odd[a];
        y = v;
        t.parity = Parity::Odd;
    }
    t.y = *y;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        if (g.parity(j) != t.parity) continue;
        Scalar f = z_coefficient(g.bracket(t.y, g.basis_vector(j)), z);
        if (!f.is_zero()) {
            t.x = f.inverse() * g.basis_vector(j);
            break;
        }
    }
    if (t.x.empty()) throw HypothesisError("find_bm_triple: no x with [y,x] = z");
    t.k = centralizer(g, {t.y});
    t.y_square_zero = is_zero(g.bracket(t.y, t.y));
    if (auto err = check_bm_triple(g, t); !err.empty()) throw HypothesisError("find_bm_triple: " + err);
    return t;
}

std::string check_bm_triple(const SuperLieAlgebra& g, const BMTriple& t) {
    if (g.bracket(t.y, t.x) != t.z) return "[y,x] != z";
    if (!center(g).contains(t.z)) return "z not central";
    if (t.y_square_zero != is_zero(g.bracket(t.y, t.y))) return "y_square_zero flag wrong";
    if (t.k.dim() + 1 != g.dim()) return "k is not of codimension one";
    if (t.k.contains(t.x)) return "x lies in k";
    if (!(t.k == centralizer(g, {t.y}))) return "k is not the centralizer of y";
    if (!is_ideal(g, t.k)) return "k is not an ideal";
    auto zspan = GradedSubspace::span(g.parities(), {t.z});
    for (std::size_t j = 0; j < g.dim(); ++j)
        if (!zspan.contains(g.bracket(g.basis_vector(j), t.y))) return "[g,y] not inside span(z)";
    return {};
}

GradedSubspace central_kernel(const SuperLieAlgebra& g, const Functional& lambda) {
    GradedSubspace z = center(g);
    const auto& basis = z.basis();
    std::size_t pivot = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!lambda(basis[i]).is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == basis.size()) return z;
    std::vector<Vector> out;
    Scalar lp = lambda(basis[pivot]);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != pivot) out.push_back(basis[j] - (lambda(basis[j]) / lp) * basis[pivot]);
    return GradedSubspace::span_components(g.parities(), out);
}

Functional pull_back(const SuperLieAlgebra& target, const Functional& lambda, const Matrix& map) {
    Vector c(map.cols());
    for (std::size_t j = 0; j < map.cols(); ++j) c[j] = lambda(map.column(j));
    return {target, c};
}

}  // namespace superdix
