#include "superdix/target.hpp"

#include <stdexcept>

namespace superdix {

namespace {

using Kind = TargetFactor::Kind;

std::size_t slots(Kind k) { return k == Kind::Weyl ? 2 : 1; }

void accumulate(TargetElement::Terms& acc, const TargetKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Parity factor_parity(const TargetFactor& f, const TargetKey& k, std::size_t off) {
    switch (f.kind) {
        case Kind::Weyl: return Parity::Even;
        case Kind::Matrix: return (k[off] == 1 || k[off] == 2) ? Parity::Odd : Parity::Even;
        case Kind::Clifford: return k[off] ? Parity::Odd : Parity::Even;
    }
    return Parity::Even;
}

// Products of single-factor basis elements, as (slot values, coefficient) pairs.
using FactorTerms = std::vector<std::pair<std::vector<unsigned short>, Scalar>>;

FactorTerms factor_product(const TargetFactor& f, const TargetKey& a, const TargetKey& b, std::size_t off) {
    switch (f.kind) {
        case Kind::Weyl: {
            // q^a1 p^b1 q^c1 p^d1 = sum_k (-1)^k k! C(b1,k) C(c1,k) q^{a1+c1-k} p^{b1+d1-k}
            unsigned a1 = a[off], b1 = a[off + 1], c1 = b[off], d1 = b[off + 1];
            FactorTerms out;
            for (unsigned k = 0; k <= std::min(b1, c1); ++k) {
                Rational coef = factorial(k) * binomial(b1, k) * binomial(c1, k);
                if (k % 2) coef = -coef;
                out.push_back({{static_cast<unsigned short>(a1 + c1 - k), static_cast<unsigned short>(b1 + d1 - k)},
                               Scalar(coef)});
            }
            return out;
        }
        case Kind::Matrix: {
            int i = a[off] / 2, j = a[off] % 2, k = b[off] / 2, l = b[off] % 2;
            if (j != k) return {};
            return {{{static_cast<unsigned short>(2 * i + l)}, Scalar(1)}};
        }
        case Kind::Clifford: {
            unsigned s = a[off] + b[off];
            if (s == 2) return {{{0}, f.square}};
            return {{{static_cast<unsigned short>(s)}, Scalar(1)}};
        }
    }
    return {};
}

}  // namespace

FactoredTarget::FactoredTarget(std::vector<TargetFactor> factors) : factors_(std::move(factors)) {
    std::size_t weyl = 0, mat = 0;
    for (const auto& f : factors_) {
        offsets_.push_back(key_size_);
        key_size_ += slots(f.kind);
        if (f.kind == Kind::Weyl) display_index_.push_back(++weyl);
        else if (f.kind == Kind::Matrix) display_index_.push_back(++mat);
        else display_index_.push_back(0);
        if (f.kind == Kind::Clifford && f.square.is_zero())
            throw std::invalid_argument("Clifford factor needs a nonzero square");
    }
}

std::size_t FactoredTarget::weyl_count() const {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f.kind == Kind::Weyl;
    return n;
}

std::size_t FactoredTarget::matrix_count() const {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f.kind == Kind::Matrix;
    return n;
}

bool FactoredTarget::has_clifford() const {
    for (const auto& f : factors_)
        if (f.kind == Kind::Clifford) return true;
    return false;
}

std::string FactoredTarget::factor_label(std::size_t factor) const {
    const auto& f = factors_.at(factor);
    std::string idx = std::to_string(display_index_[factor]);
    switch (f.kind) {
        case Kind::Weyl: return "A1[q" + idx + ",p" + idx + "]";
        case Kind::Matrix: return "M2[" + idx + "]";
        case Kind::Clifford: return "Cliff1[g^2=" + f.square.to_string() + "]";
    }
    return {};
}

// ---------------------------------------------------------------------------

TargetElement::TargetElement(TargetPtr target) : target_(std::move(target)) {
    if (!target_) throw std::invalid_argument("TargetElement needs a target");
}

TargetElement TargetElement::scalar(TargetPtr target, const Scalar& c) {
    TargetElement e(std::move(target));
    TargetKey k(e.target_->key_size(), 0);
    // Identity of a matrix factor is E11 + E22.
    std::vector<TargetKey> keys{k};
    for (std::size_t f = 0; f < e.target_->factors().size(); ++f) {
        if (e.target_->factors()[f].kind != Kind::Matrix) continue;
        std::vector<TargetKey> next;
        for (auto key : keys) {
            key[e.target_->offset(f)] = 0;
            next.push_back(key);
            key[e.target_->offset(f)] = 3;
            next.push_back(key);
        }
        keys = std::move(next);
    }
    for (const auto& key : keys) e.add_term(key, c);
    return e;
}

TargetElement TargetElement::weyl_q(TargetPtr target, std::size_t factor, unsigned power) {
    if (target->factors().at(factor).kind != Kind::Weyl) throw std::invalid_argument("weyl_q: not a Weyl factor");
    TargetElement one = scalar(target, Scalar(1));
    TargetElement e(target);
    for (const auto& [k0, c] : one.terms()) {
        TargetKey k = k0;
        k[target->offset(factor)] = static_cast<unsigned short>(power);
        e.add_term(k, c);
    }
    return e;
}

TargetElement TargetElement::weyl_p(TargetPtr target, std::size_t factor, unsigned power) {
    if (target->factors().at(factor).kind != Kind::Weyl) throw std::invalid_argument("weyl_p: not a Weyl factor");
    TargetElement one = scalar(target, Scalar(1));
    TargetElement e(target);
    for (const auto& [k0, c] : one.terms()) {
        TargetKey k = k0;
        k[target->offset(factor) + 1] = static_cast<unsigned short>(power);
        e.add_term(k, c);
    }
    return e;
}

TargetElement TargetElement::matrix_unit(TargetPtr target, std::size_t factor, int row, int col) {
    if (target->factors().at(factor).kind != Kind::Matrix)
        throw std::invalid_argument("matrix_unit: not a matrix factor");
    if (row < 1 || row > 2 || col < 1 || col > 2) throw std::invalid_argument("matrix_unit: index out of range");
    TargetElement one = scalar(target, Scalar(1));
    TargetElement e(target);
    auto unit = static_cast<unsigned short>(2 * (row - 1) + (col - 1));
    for (const auto& [k0, c] : one.terms()) {
        TargetKey k = k0;
        if (k[target->offset(factor)] != 0) continue;
        k[target->offset(factor)] = unit;
        e.add_term(k, c);
    }
    return e;
}

TargetElement TargetElement::gamma(TargetPtr target, std::size_t factor) {
    if (target->factors().at(factor).kind != Kind::Clifford)
        throw std::invalid_argument("gamma: not a Clifford factor");
    TargetElement one = scalar(target, Scalar(1));
    TargetElement e(target);
    for (const auto& [k0, c] : one.terms()) {
        TargetKey k = k0;
        k[target->offset(factor)] = 1;
        e.add_term(k, c);
    }
    return e;
}

Parity key_parity(const FactoredTarget& t, const TargetKey& k) {
    Parity p = Parity::Even;
    for (std::size_t f = 0; f < t.factors().size(); ++f) p = p + factor_parity(t.factors()[f], k, t.offset(f));
    return p;
}

TargetElement TargetElement::component(Parity p) const {
    TargetElement r(target_);
    for (const auto& [k, c] : terms_)
        if (key_parity(*target_, k) == p) r.terms_.emplace(k, c);
    return r;
}

void TargetElement::add_term(const TargetKey& k, const Scalar& c) { accumulate(terms_, k, c); }

TargetElement& TargetElement::operator+=(const TargetElement& o) {
    if (o.target_ != target_) throw std::invalid_argument("target elements from different targets");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TargetElement& TargetElement::operator-=(const TargetElement& o) {
    if (o.target_ != target_) throw std::invalid_argument("target elements from different targets");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TargetElement& TargetElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

TargetElement TargetElement::operator-() const {
    TargetElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const TargetElement& a, const TargetElement& b) {
    return a.target_ == b.target_ && a.terms_ == b.terms_;
}

TargetElement operator*(const TargetElement& a, const TargetElement& b) {
    if (a.target_ != b.target_) throw std::invalid_argument("target elements from different targets");
    const FactoredTarget& t = *a.target_;
    const auto& fs = t.factors();
    TargetElement::Terms acc;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            // Koszul sign: a_i passes b_j for every i > j.
            unsigned odd_b = 0, swaps = 0;
            for (std::size_t f = 0; f < fs.size(); ++f) {
                if (factor_parity(fs[f], ka, t.offset(f)) == Parity::Odd) swaps += odd_b;
                if (factor_parity(fs[f], kb, t.offset(f)) == Parity::Odd) ++odd_b;
            }
            std::vector<std::pair<TargetKey, Scalar>> partial{{TargetKey(t.key_size(), 0), swaps % 2 ? -(ca * cb) : ca * cb}};
            for (std::size_t f = 0; f < fs.size() && !partial.empty(); ++f) {
                FactorTerms ft = factor_product(fs[f], ka, kb, t.offset(f));
                std::vector<std::pair<TargetKey, Scalar>> next;
                for (const auto& [k, c] : partial)
                    for (const auto& [vals, d] : ft) {
                        TargetKey nk = k;
                        for (std::size_t s = 0; s < vals.size(); ++s) nk[t.offset(f) + s] = vals[s];
                        next.emplace_back(std::move(nk), c * d);
                    }
                partial = std::move(next);
            }
            for (const auto& [k, c] : partial) accumulate(acc, k, c);
        }
    TargetElement r(a.target_);
    r.terms_ = std::move(acc);
    return r;
}

std::string TargetElement::to_string() const {
    const FactoredTarget& t = *target_;
    std::vector<std::pair<Scalar, std::string>> parts;
    // Highest Weyl degree first.
    std::vector<const Terms::value_type*> order;
    for (const auto& e : terms_) order.push_back(&e);
    auto wdeg = [&](const TargetKey& k) {
        unsigned d = 0;
        for (std::size_t f = 0; f < t.factors().size(); ++f)
            if (t.factors()[f].kind == Kind::Weyl) d += k[t.offset(f)] + k[t.offset(f) + 1];
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) { return wdeg(x->first) > wdeg(y->first); });
    std::size_t weyl = 0, mat = 0;
    std::vector<std::string> names;
    for (const auto& f : t.factors()) {
        if (f.kind == Kind::Weyl) names.push_back(std::to_string(++weyl));
        else if (f.kind == Kind::Matrix) names.push_back(std::to_string(++mat));
        else names.emplace_back();
    }
    for (const auto* e : order) {
        const TargetKey& k = e->first;
        std::string s;
        auto add = [&](const std::string& x) { s += (s.empty() ? "" : "*") + x; };
        for (std::size_t f = 0; f < t.factors().size(); ++f) {
            std::size_t o = t.offset(f);
            switch (t.factors()[f].kind) {
                case Kind::Weyl:
                    if (k[o]) add("q" + names[f] + (k[o] > 1 ? "^" + std::to_string(k[o]) : ""));
                    if (k[o + 1]) add("p" + names[f] + (k[o + 1] > 1 ? "^" + std::to_string(k[o + 1]) : ""));
                    break;
                case Kind::Matrix: {
                    static const char* units[] = {"E11", "E12", "E21", "E22"};
                    add(std::string(units[k[o]]) + "_" + names[f]);
                    break;
                }
                case Kind::Clifford:
                    if (k[o]) add("g");
                    break;
            }
        }
        parts.emplace_back(e->second, s);
    }
    return format_sum(parts);
}

TargetElement supercommutator(const TargetElement& a, const TargetElement& b) {
    TargetElement r(a.target());
    for (Parity p : {Parity::Even, Parity::Odd}) {
        TargetElement ap = a.component(p);
        if (ap.is_zero()) continue;
        for (Parity q : {Parity::Even, Parity::Odd}) {
            TargetElement bq = b.component(q);
            if (bq.is_zero()) continue;
            r += ap * bq;
            r -= Scalar(sign_of(p, q)) * (bq * ap);
        }
    }
    return r;
}

TargetPtr concat(const FactoredTarget& head, const FactoredTarget& tail) {
    std::vector<TargetFactor> fs = head.factors();
    fs.insert(fs.end(), tail.factors().begin(), tail.factors().end());
    return std::make_shared<FactoredTarget>(std::move(fs));
}

TargetElement tensor(const TargetPtr& joined, const TargetElement& a, const TargetElement& b) {
    std::size_t na = a.target()->key_size(), nb = b.target()->key_size();
    if (joined->key_size() != na + nb) throw DimensionMismatch("tensor: target layout mismatch");
    TargetElement r(joined);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            TargetKey k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(k, ca * cb);
        }
    return r;
}

std::vector<TargetElement> target_generators(const TargetPtr& t) {
    std::vector<TargetElement> out;
    for (std::size_t f = 0; f < t->factors().size(); ++f) {
        switch (t->factors()[f].kind) {
            case Kind::Weyl:
                out.push_back(TargetElement::weyl_q(t, f));
                out.push_back(TargetElement::weyl_p(t, f));
                break;
            case Kind::Matrix:
                out.push_back(TargetElement::matrix_unit(t, f, 1, 2));
                out.push_back(TargetElement::matrix_unit(t, f, 2, 1));
                break;
            case Kind::Clifford: out.push_back(TargetElement::gamma(t, f)); break;
        }
    }
    return out;
}

std::vector<TargetKey> target_basis_up_to(const FactoredTarget& t, unsigned d) {
    std::vector<TargetKey> out;
    TargetKey cur(t.key_size(), 0);
    const auto& fs = t.factors();
    auto rec = [&](auto&& self, std::size_t f, unsigned left) -> void {
        if (f == fs.size()) {
            out.push_back(cur);
            return;
        }
        std::size_t o = t.offset(f);
        switch (fs[f].kind) {
            case Kind::Weyl:
                for (unsigned a = 0; a <= left; ++a)
                    for (unsigned b = 0; a + b <= left; ++b) {
                        cur[o] = static_cast<unsigned short>(a);
                        cur[o + 1] = static_cast<unsigned short>(b);
                        self(self, f + 1, left - a - b);
                    }
                cur[o] = cur[o + 1] = 0;
                break;
            case Kind::Matrix:
                for (unsigned short u = 0; u < 4; ++u) {
                    cur[o] = u;
                    self(self, f + 1, left);
                }
                cur[o] = 0;
                break;
            case Kind::Clifford:
                for (unsigned short u = 0; u < 2; ++u) {
                    cur[o] = u;
                    self(self, f + 1, left);
                }
                cur[o] = 0;
                break;
        }
    };
    rec(rec, 0, d);
    return out;
}

SuperDim supercenter_dimension(const TargetPtr& t, unsigned d) {
    auto basis = target_basis_up_to(*t, d);
    auto gens = target_generators(t);
    SuperDim out;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        std::vector<TargetKey> keys;
        for (const auto& k : basis)
            if (key_parity(*t, k) == p) keys.push_back(k);
        // Rows: coefficients of [gen, key] over all keys that occur.
        std::map<std::pair<std::size_t, TargetKey>, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(keys.size());
        for (std::size_t j = 0; j < keys.size(); ++j) {
            TargetElement e(t);
            e.add_term(keys[j], Scalar(1));
            for (std::size_t g = 0; g < gens.size(); ++g) {
                TargetElement br = supercommutator(gens[g], e);
                for (const auto& [k, c] : br.terms()) {
                    auto [it, ins] = row_of.try_emplace({g, k}, row_of.size());
                    cols[j].emplace_back(it->second, c);
                }
            }
        }
        Matrix m(row_of.size(), keys.size());
        for (std::size_t j = 0; j < keys.size(); ++j)
            for (const auto& [r, c] : cols[j]) m(r, j) += c;
        std::size_t dim = keys.size() - (row_of.empty() ? 0 : rank(m));
        (p == Parity::Even ? out.even : out.odd) = dim;
    }
    return out;
}

CliffordPresentation canonicalize_clifford(const TargetPtr& t) {
    CliffordPresentation out;
    Scalar i;
    bool have_i = false;
    using Word = std::vector<std::pair<Scalar, std::vector<std::size_t>>>;
    for (std::size_t f = 0; f < t->factors().size(); ++f) {
        const auto& fac = t->factors()[f];
        std::string tag = "_" + std::to_string(f + 1);
        if (fac.kind == Kind::Matrix) {
            if (!have_i) {
                i = adjoin_sqrt(Scalar(-1));
                have_i = true;
            }
            auto e12 = TargetElement::matrix_unit(t, f, 1, 2), e21 = TargetElement::matrix_unit(t, f, 2, 1);
            std::size_t a = out.generators.size(), b = a + 1;
            out.generators.push_back(e12 + e21);
            out.generators.push_back(-i * e12 + i * e21);
            Scalar half = Scalar::fraction(1, 2);
            out.inverse.push_back({"E12" + tag, Word{{half, {a}}, {half * i, {b}}}});
            out.inverse.push_back({"E21" + tag, Word{{half, {a}}, {-half * i, {b}}}});
            out.inverse.push_back({"E11" + tag, Word{{half, {}}, {-half * i, {a, b}}}});
            out.inverse.push_back({"E22" + tag, Word{{half, {}}, {half * i, {a, b}}}});
        } else if (fac.kind == Kind::Clifford) {
            Scalar root = adjoin_sqrt(fac.square);
            std::size_t a = out.generators.size();
            out.generators.push_back(root.inverse() * TargetElement::gamma(t, f));
            out.inverse.push_back({"g", Word{{root, {a}}}});
        }
    }
    // Relations e_i^2 = 1 and e_i e_j = -e_j e_i.
    const auto one = TargetElement::scalar(t, Scalar(1));
    const auto& e = out.generators;
    for (std::size_t a = 0; a < e.size(); ++a) {
        if (!(e[a] * e[a] == one)) {
            out.message = "e" + std::to_string(a + 1) + "^2 != 1";
            return out;
        }
        for (std::size_t b = a + 1; b < e.size(); ++b)
            if (!(e[a] * e[b] + e[b] * e[a]).is_zero()) {
                out.message = "e" + std::to_string(a + 1) + ", e" + std::to_string(b + 1) + " do not anticommute";
                return out;
            }
    }
    // Inverse images reproduce the original generators.
    std::size_t inv = 0;
    for (std::size_t f = 0; f < t->factors().size(); ++f) {
        const auto& fac = t->factors()[f];
        std::vector<TargetElement> originals;
        if (fac.kind == Kind::Matrix) {
            originals = {TargetElement::matrix_unit(t, f, 1, 2), TargetElement::matrix_unit(t, f, 2, 1),
                         TargetElement::matrix_unit(t, f, 1, 1), TargetElement::matrix_unit(t, f, 2, 2)};
        } else if (fac.kind == Kind::Clifford) {
            originals = {TargetElement::gamma(t, f)};
        }
        for (const auto& orig : originals) {
            TargetElement val(t);
            for (const auto& [c, word] : out.inverse[inv].second) {
                TargetElement prod = TargetElement::scalar(t, c);
                for (auto w : word) prod = prod * e[w];
                val += prod;
            }
            if (!(val == orig)) {
                out.message = "inverse image of " + out.inverse[inv].first + " does not match";
                return out;
            }
            ++inv;
        }
    }
    out.verified = true;
    return out;
}

std::size_t clifford_span_dimension(const CliffordPresentation& pres) {
    const auto& e = pres.generators;
    if (e.empty()) return 1;
    const TargetPtr& t = e.front().target();
    std::vector<TargetElement> products;
    for (std::size_t mask = 0; mask < (std::size_t{1} << e.size()); ++mask) {
        TargetElement prod = TargetElement::scalar(t, Scalar(1));
        for (std::size_t a = 0; a < e.size(); ++a)
            if (mask & (std::size_t{1} << a)) prod = prod * e[a];
        products.push_back(std::move(prod));
    }
    std::map<TargetKey, std::size_t> col;
    for (const auto& p : products)
        for (const auto& [k, c] : p.terms()) col.try_emplace(k, col.size());
    Matrix m(products.size(), col.size());
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& [k, c] : products[r].terms()) m(r, col[k]) = c;
    return rank(m);
}

}  // namespace superdix
