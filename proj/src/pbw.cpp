#include "superdix/pbw.hpp"

#include <algorithm>
#include <functional>

#include "pbw_memo.hpp"

namespace superdix {

using TermList = detail::PbwMemo::Terms;

unsigned degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

Parity monomial_parity(const SuperLieAlgebra& g, const Exponents& e) {
    unsigned odd = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (g.parity(i) == Parity::Odd) odd += e[i];
    return odd % 2 ? Parity::Odd : Parity::Even;
}

std::string monomial_string(const SuperLieAlgebra& g, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += g.labels()[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

namespace {

void accumulate(std::map<Exponents, Scalar>& acc, const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

TermList to_list(const std::map<Exponents, Scalar>& acc) { return TermList(acc.begin(), acc.end()); }

TermList right_multiply(const SuperLieAlgebra& g, const Exponents& m, std::size_t j);

TermList compute_right_multiply(const SuperLieAlgebra& g, const Exponents& m, std::size_t j) {
    std::size_t n = g.dim();
    std::ptrdiff_t r = -1;
    for (std::size_t i = n; i-- > 0;)
        if (m[i] > 0) {
            r = static_cast<std::ptrdiff_t>(i);
            break;
        }
    if (r < static_cast<std::ptrdiff_t>(j) || (r == static_cast<std::ptrdiff_t>(j) && g.parity(j) == Parity::Even)) {
        Exponents e = m;
        ++e[j];
        return {{e, Scalar(1)}};
    }
    std::map<Exponents, Scalar> acc;
    if (r == static_cast<std::ptrdiff_t>(j)) {
        // odd x_j twice: x_j x_j = 1/2 [x_j, x_j]
        Exponents rest = m;
        rest[j] = 0;
        const Vector& c = g.bracket_basis(j, j);
        for (std::size_t k = 0; k < n; ++k) {
            if (c[k].is_zero()) continue;
            Scalar f = Scalar::fraction(1, 2) * c[k];
            for (const auto& [e, d] : right_multiply(g, rest, k)) accumulate(acc, e, f * d);
        }
        return to_list(acc);
    }
    // x_r x_j = (-1)^{|r||j|} x_j x_r + [x_r, x_j]
    auto ru = static_cast<std::size_t>(r);
    Exponents rest = m;
    --rest[ru];
    Scalar s(sign_of(g.parity(ru), g.parity(j)));
    for (const auto& [e, c] : right_multiply(g, rest, j))
        for (const auto& [f, d] : right_multiply(g, e, ru)) accumulate(acc, f, s * c * d);
    if (!g.bracket_zero(ru, j)) {
        const Vector& c = g.bracket_basis(ru, j);
        for (std::size_t k = 0; k < n; ++k) {
            if (c[k].is_zero()) continue;
            for (const auto& [e, d] : right_multiply(g, rest, k)) accumulate(acc, e, c[k] * d);
        }
    }
    return to_list(acc);
}

TermList right_multiply(const SuperLieAlgebra& g, const Exponents& m, std::size_t j) {
    auto& memo = g.pbw_memo();
    auto key = std::make_pair(m, j);
    {
        std::lock_guard lock(memo.mutex);
        if (auto it = memo.right_generator.find(key); it != memo.right_generator.end()) return it->second;
    }
    TermList result = compute_right_multiply(g, m, j);
    std::lock_guard lock(memo.mutex);
    memo.right_generator.emplace(std::move(key), result);
    return result;
}

void check_same(const PBWElement& a, const PBWElement& b) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument("PBW elements belong to different algebras");
}

// Display order: higher degree first, then reverse lexicographic exponents.
bool display_before(const Exponents& a, const Exponents& b) {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

// ---------------------------------------------------------------------------

PBWElement::PBWElement(AlgebraPtr alg) : alg_(std::move(alg)) {
    if (!alg_) throw std::invalid_argument("PBWElement needs an algebra");
}

PBWElement PBWElement::constant(AlgebraPtr alg, const Scalar& c) {
    PBWElement u(std::move(alg));
    u.add_term(Exponents(u.alg_->dim(), 0), c);
    return u;
}

PBWElement PBWElement::generator(AlgebraPtr alg, std::size_t i) {
    PBWElement u(std::move(alg));
    Exponents e(u.alg_->dim(), 0);
    e.at(i) = 1;
    u.add_term(e, Scalar(1));
    return u;
}

PBWElement PBWElement::from_vector(AlgebraPtr alg, const Vector& v) {
    PBWElement u(std::move(alg));
    if (v.size() != u.alg_->dim()) throw DimensionMismatch("from_vector length");
    for (std::size_t i = 0; i < v.size(); ++i) {
        Exponents e(v.size(), 0);
        e[i] = 1;
        u.add_term(e, v[i]);
    }
    return u;
}

PBWElement PBWElement::monomial(AlgebraPtr alg, const Exponents& e, const Scalar& c) {
    PBWElement u(std::move(alg));
    if (e.size() != u.alg_->dim()) throw DimensionMismatch("monomial length");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (u.alg_->parity(i) == Parity::Odd && e[i] > 1)
            throw std::invalid_argument("monomial violates the odd exponent cap");
    u.add_term(e, c);
    return u;
}

unsigned PBWElement::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, superdix::degree(e));
    return d;
}

std::optional<Parity> PBWElement::parity() const {
    std::optional<Parity> p;
    for (const auto& [e, c] : terms_) {
        Parity q = monomial_parity(*alg_, e);
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

PBWElement PBWElement::component(Parity p) const {
    PBWElement r(alg_);
    for (const auto& [e, c] : terms_)
        if (monomial_parity(*alg_, e) == p) r.terms_.emplace(e, c);
    return r;
}

Scalar PBWElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

PBWElement PBWElement::homogeneous_part(unsigned d) const {
    PBWElement r(alg_);
    for (const auto& [e, c] : terms_)
        if (superdix::degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

void PBWElement::add_term(const Exponents& e, const Scalar& c) { accumulate(terms_, e, c); }

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PBWElement& PBWElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

PBWElement PBWElement::operator-() const {
    PBWElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const PBWElement& a, const PBWElement& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

PBWElement operator*(const PBWElement& a, const PBWElement& b) { return multiply(a, b); }

std::string PBWElement::to_string() const {
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return display_before(x->first, y->first); });
    std::vector<std::pair<Scalar, std::string>> parts;
    for (auto* t : order) parts.emplace_back(t->second, monomial_string(*alg_, t->first));
    return format_sum(parts);
}

// ---------------------------------------------------------------------------

PBWElement multiply(const PBWElement& u, const PBWElement& v) {
    check_same(u, v);
    const SuperLieAlgebra& g = *u.algebra();
    std::map<Exponents, Scalar> acc;
    for (const auto& [ma, ca] : u.terms())
        for (const auto& [mb, cb] : v.terms()) {
            std::map<Exponents, Scalar> cur{{ma, ca * cb}};
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (unsigned rep = 0; rep < mb[i]; ++rep) {
                    std::map<Exponents, Scalar> next;
                    for (const auto& [e, c] : cur)
                        for (const auto& [f, d] : right_multiply(g, e, i)) accumulate(next, f, c * d);
                    cur = std::move(next);
                }
            for (const auto& [e, c] : cur) accumulate(acc, e, c);
        }
    PBWElement r(u.algebra());
    for (const auto& [e, c] : acc) r.add_term(e, c);
    return r;
}

PBWElement power(const PBWElement& u, unsigned n) {
    PBWElement r = PBWElement::constant(u.algebra(), Scalar(1));
    for (unsigned i = 0; i < n; ++i) r = multiply(r, u);
    return r;
}

PBWElement alpha(const PBWElement& u) {
    const AlgebraPtr& alg = u.algebra();
    PBWElement r(alg);
    for (const auto& [e, c] : u.terms()) {
        unsigned len = degree(e), odd = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (alg->parity(i) == Parity::Odd) odd += e[i];
        int sign = ((len + odd * (odd - (odd > 0 ? 1 : 0)) / 2) % 2) ? -1 : 1;
        PBWElement rev = PBWElement::constant(alg, Scalar(sign) * c);
        for (std::size_t i = e.size(); i-- > 0;)
            for (unsigned rep = 0; rep < e[i]; ++rep) rev = multiply(rev, PBWElement::generator(alg, i));
        r += rev;
    }
    return r;
}

PBWElement sigma(const PBWElement& u) {
    PBWElement r(u.algebra());
    for (const auto& [e, c] : u.terms())
        r.add_term(e, monomial_parity(*u.algebra(), e) == Parity::Odd ? -c : c);
    return r;
}

PBWElement supercommutator(const PBWElement& u, const PBWElement& v) {
    check_same(u, v);
    PBWElement r(u.algebra());
    for (Parity p : {Parity::Even, Parity::Odd}) {
        PBWElement up = u.component(p);
        if (up.is_zero()) continue;
        for (Parity q : {Parity::Even, Parity::Odd}) {
            PBWElement vq = v.component(q);
            if (vq.is_zero()) continue;
            r += multiply(up, vq);
            r -= Scalar(sign_of(p, q)) * multiply(vq, up);
        }
    }
    return r;
}

PBWElement ad_action(const Vector& x, const PBWElement& u, const GradedSubspace* confine) {
    const SuperLieAlgebra& g = *u.algebra();
    if (confine) {
        for (const auto& b : confine->basis())
            if (!confine->contains(g.bracket(x, b)))
                throw HypothesisError("ad_action: [x, k] is not contained in k");
    }
    return supercommutator(PBWElement::from_vector(u.algebra(), x), u);
}

PBWElement ad_of_element(const PBWElement& a, const PBWElement& u) {
    check_same(a, u);
    const AlgebraPtr& alg = u.algebra();
    PBWElement r(alg);
    for (const auto& [e, c] : a.terms()) {
        PBWElement cur = u;
        for (std::size_t i = e.size(); i-- > 0;)
            for (unsigned rep = 0; rep < e[i]; ++rep) cur = supercommutator(PBWElement::generator(alg, i), cur);
        r += c * cur;
    }
    return r;
}

PBWElement map_generators(const PBWElement& u, const AlgebraPtr& target, const std::vector<PBWElement>& images) {
    if (images.size() != u.algebra()->dim()) throw DimensionMismatch("map_generators: one image per generator");
    PBWElement r(target);
    for (const auto& [e, c] : u.terms()) {
        PBWElement prod = PBWElement::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep) prod = multiply(prod, images[i]);
        r += prod;
    }
    return r;
}

std::vector<Exponents> monomials_up_to(const SuperLieAlgebra& g, unsigned d) {
    std::vector<Exponents> out;
    Exponents cur(g.dim(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == g.dim()) {
            out.push_back(cur);
            return;
        }
        unsigned cap = g.parity(i) == Parity::Odd ? std::min(left, 1U) : left;
        for (unsigned a = 0; a <= cap; ++a) {
            cur[i] = static_cast<unsigned short>(a);
            rec(i + 1, left - a);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        unsigned da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

// ---------------------------------------------------------------------------

LeftIdealReducer::LeftIdealReducer(AlgebraPtr g, const GradedSubspace& h, const Functional& lambda)
    : g_(std::move(g)), h_(h) {
    for (const auto& a : h_.basis())
        for (const auto& b : h_.basis())
            if (!lambda(g_->bracket(a, b)).is_zero())
                throw HypothesisError("reduce_mod_left_ideal: h is not subordinate to lambda");
    init(lambda.coeffs());
}

LeftIdealReducer::LeftIdealReducer(AlgebraPtr g, const GradedSubspace& h, const Vector& character)
    : g_(std::move(g)), h_(h) {
    if (character.size() != g_->dim()) throw DimensionMismatch("character length");
    for (const auto& a : h_.basis())
        for (const auto& b : h_.basis()) {
            // chi([a,b]) = chi(a) chi(b) - (-1)^{|a||b|} chi(b) chi(a)
            int s = sign_of(*vector_parity(g_->parities(), a), *vector_parity(g_->parities(), b));
            Scalar rhs = Scalar(1 - s) * dot(character, a) * dot(character, b);
            if (dot(character, g_->bracket(a, b)) != rhs)
                throw HypothesisError("reduce_mod_left_ideal: values do not define a character of U(h)");
        }
    init(character);
}

void LeftIdealReducer::init(const Vector& character) {
    const SuperLieAlgebra& alg = *g_;
    if (!is_subalgebra(alg, h_)) throw HypothesisError("reduce_mod_left_ideal: h is not a subalgebra");
    auto comp = h_.space().complement_indices();
    m_ = comp.size();
    std::vector<Vector> basis;
    std::vector<std::string> labels;
    for (auto c : comp) {
        basis.push_back(alg.basis_vector(c));
        labels.push_back(alg.labels()[c]);
    }
    auto sub = superdix::subalgebra(alg, h_);
    for (std::size_t j = 0; j < h_.dim(); ++j) {
        basis.push_back(h_.basis()[j]);
        labels.push_back(sub.algebra->labels()[j]);
        tail_values_.push_back(dot(character, h_.basis()[j]));
    }
    auto rb = rebase(alg, basis, labels, alg.name() + "/rebased");
    rebased_ = rb.algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        generator_images_.push_back(PBWElement::from_vector(rebased_, rb.old_to_new.column(i)));
}

PBWElement LeftIdealReducer::to_rebased(const PBWElement& u) const {
    if (u.algebra() != g_) throw std::invalid_argument("reducer: element from another algebra");
    return map_generators(u, rebased_, generator_images_);
}

PBWElement LeftIdealReducer::reduce_rebased(const PBWElement& u) const {
    if (u.algebra() != rebased_) throw std::invalid_argument("reducer: element not in the rebased algebra");
    PBWElement r(rebased_);
    for (const auto& [e, c] : u.terms()) {
        Scalar val(1);
        Exponents head = e;
        for (std::size_t j = m_; j < e.size() && !val.is_zero(); ++j) {
            for (unsigned rep = 0; rep < e[j]; ++rep) val *= tail_values_[j - m_];
            head[j] = 0;
        }
        if (!val.is_zero()) r.add_term(head, c * val);
    }
    return r;
}

bool LeftIdealReducer::is_complement_monomial(const Exponents& e) const {
    for (std::size_t j = m_; j < e.size(); ++j)
        if (e[j] != 0) return false;
    return true;
}

PBWElement reduce_mod_left_ideal(const PBWElement& u, const GradedSubspace& h, const Functional& lambda) {
    LeftIdealReducer r(u.algebra(), h, lambda);
    return r.reduce(u);
}

}  // namespace superdix
