#include "superdix/induced.hpp"

namespace superdix {

InducedTruncation::InducedTruncation(AlgebraPtr g, const GradedSubspace& h, const Functional& lambda,
                                     unsigned max_degree, Parity line_parity)
    : reducer_(std::move(g), h, lambda), lambda_(lambda), max_degree_(max_degree), line_parity_(line_parity) {}

std::vector<Exponents> InducedTruncation::basis(unsigned d) const {
    std::vector<Exponents> out;
    for (auto& e : monomials_up_to(*rebased(), d))
        if (reducer_.is_complement_monomial(e)) out.push_back(std::move(e));
    return out;
}

PBWElement InducedTruncation::generator_vector() const { return PBWElement::constant(rebased(), Scalar(1)); }

PBWElement InducedTruncation::basis_vector(const Exponents& e) const {
    if (!reducer_.is_complement_monomial(e)) throw std::invalid_argument("basis_vector: not a complement monomial");
    return PBWElement::monomial(rebased(), e);
}

std::optional<Parity> InducedTruncation::parity(const PBWElement& t) const {
    auto p = t.parity();
    if (!p) return p;
    return *p + line_parity_;
}

PBWElement InducedTruncation::act(const PBWElement& u, const PBWElement& t) const {
    if (u.degree() + t.degree() > max_degree_)
        throw TruncationOverflow("act: degree " + std::to_string(u.degree() + t.degree()) + " exceeds the bound " +
                                 std::to_string(max_degree_));
    return reducer_.reduce_rebased(multiply(reducer_.to_rebased(u), t));
}

Subspace InducedTruncation::annihilator_truncated(unsigned n) const {
    if (n > max_degree_) throw std::invalid_argument("annihilator_truncated: probe degree below slice degree");
    const AlgebraPtr& g = algebra();
    auto mons = monomials_up_to(*g, n);
    auto probes = basis(max_degree_ - n);
    std::map<std::pair<std::size_t, Exponents>, std::size_t> row;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        PBWElement u = reducer_.to_rebased(PBWElement::monomial(g, mons[i]));
        for (std::size_t p = 0; p < probes.size(); ++p) {
            PBWElement r = reducer_.reduce_rebased(multiply(u, PBWElement::monomial(rebased(), probes[p])));
            for (const auto& [e, c] : r.terms()) {
                auto it = row.try_emplace({p, e}, row.size()).first;
                cols[i].emplace_back(it->second, c);
            }
        }
    }
    if (row.empty()) return Subspace::whole(mons.size());
    Matrix m(row.size(), mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (const auto& [r, c] : cols[i]) m(r, i) += c;
    return Subspace::span(mons.size(), nullspace(m));
}

Stabilization stabilized_annihilator(const AlgebraPtr& g, const GradedSubspace& h, const Functional& lambda,
                                     unsigned n, unsigned max_probe) {
    Stabilization out;
    std::optional<Subspace> prev;
    for (unsigned m = n; m <= max_probe; ++m) {
        Subspace s = InducedTruncation(g, h, lambda, m).annihilator_truncated(n);
        if (prev && *prev == s) {
            out.slice = s;
            out.probe_degree = m - 1;
            out.stabilized = true;
            return out;
        }
        prev = std::move(s);
    }
    out.slice = *prev;
    out.probe_degree = max_probe;
    return out;
}

DescentResult descend(const InducedTruncation& v, const PBWElement& t, const GradedSubspace& k, unsigned budget) {
    if (t.algebra() != v.rebased()) throw std::invalid_argument("descend: vector not in the truncation");
    for (const auto& [e, c] : t.terms())
        if (!v.reducer().is_complement_monomial(e)) throw std::invalid_argument("descend: vector not reduced");
    unsigned n = t.degree();
    if (t.is_zero() || n == 0) throw std::invalid_argument("descend: vector lies in V_0");
    const AlgebraPtr& g = v.algebra();
    if (!is_ideal(*g, k)) throw HypothesisError("descend: k is not an ideal");
    auto sub = subalgebra(*g, k);
    std::vector<PBWElement> gens;
    for (std::size_t j = 0; j < sub.algebra->dim(); ++j)
        gens.push_back(PBWElement::from_vector(g, sub.embedding.column(j)));

    DescentResult out;
    for (unsigned d = 1; d <= budget; ++d) {
        if (d + n > v.max_degree()) {
            out.message = "degree budget exceeds the truncation bound";
            return out;
        }
        auto mons = monomials_up_to(*sub.algebra, d);
        std::vector<PBWElement> ws, images;
        for (const auto& e : mons) {
            ws.push_back(map_generators(PBWElement::monomial(sub.algebra, e), g, gens));
            images.push_back(v.act(ws.back(), t));
        }
        // Components of degree >= n must cancel.
        std::map<Exponents, std::size_t> row;
        for (const auto& img : images)
            for (const auto& [e, c] : img.terms())
                if (degree(e) >= n) row.try_emplace(e, row.size());
        Matrix m(row.size(), mons.size());
        for (std::size_t j = 0; j < images.size(); ++j)
            for (const auto& [e, c] : images[j].terms())
                if (auto it = row.find(e); it != row.end()) m(it->second, j) = c;
        std::vector<Vector> sols = row.empty() ? std::vector<Vector>{} : nullspace(m);
        if (row.empty())
            for (std::size_t j = 0; j < mons.size(); ++j) sols.push_back(unit_vector(mons.size(), j));
        for (const auto& s : sols) {
            PBWElement img(v.rebased()), w(g);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (!s[j].is_zero()) {
                    img += s[j] * images[j];
                    w += s[j] * ws[j];
                }
            if (img.is_zero()) continue;
            out.found = true;
            out.witness = w;
            out.image = img;
            out.degree = d;
            return out;
        }
    }
    out.message = "no witness within degree " + std::to_string(budget);
    return out;
}

CheckReport ideal_component_decomposition_check(const InducedTruncation& v, const GradedSubspace& k) {
    const AlgebraPtr& g = v.algebra();
    const Functional& lambda = v.lambda();
    if (!is_ideal(*g, k)) return {false, "k is not an ideal"};
    if (!v.reducer().subalgebra().contains(k)) return {false, "k is not contained in h"};
    for (std::size_t i = 0; i < g->dim(); ++i)
        for (const auto& y : k.basis())
            if (!lambda(g->bracket(g->basis_vector(i), y)).is_zero())
                return {false, "lambda([" + g->labels()[i] + ", " + g->format(y) + "]) != 0"};
    if (v.max_degree() == 0) return {};
    for (const auto& y : k.basis()) {
        Parity py = *vector_parity(g->parities(), y);
        PBWElement ye = PBWElement::from_vector(g, y);
        for (const auto& e : v.basis(v.max_degree() - 1)) {
            PBWElement m = v.basis_vector(e);
            Parity pm = monomial_parity(*v.rebased(), e);
            PBWElement expect = Scalar(sign_of(pm, py)) * lambda(y) * m;
            if (!(v.act(ye, m) == expect))
                return {false, "line " + m.to_string() + " is not scaled correctly by " + g->format(y)};
        }
    }
    return {};
}

}  // namespace superdix
