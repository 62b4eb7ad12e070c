#include "superdix/polarization.hpp"

#include <algorithm>

namespace superdix {

namespace {

bool lambda_vanishes_on_brackets(const SuperLieAlgebra& g, const Functional& lambda) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j)
            if (!g.bracket_zero(i, j) && !lambda(g.bracket_basis(i, j)).is_zero()) return false;
    return true;
}

std::vector<Parity> parities_of(const std::vector<Vector>& basis, const std::vector<Parity>& ambient) {
    std::vector<Parity> out;
    for (const auto& b : basis) {
        auto p = vector_parity(ambient, b);
        if (!p) throw std::invalid_argument("basis vector is not homogeneous");
        out.push_back(*p);
    }
    return out;
}

// Vectors of `big` (in order) extending `small` to a basis of their sum.
std::vector<Vector> extend(const GradedSubspace& small, const std::vector<Vector>& big) {
    Subspace acc = small.space();
    std::vector<Vector> out;
    for (const auto& v : big) {
        if (acc.contains(v)) continue;
        out.push_back(v);
        acc = acc.sum(Subspace::span(acc.ambient(), {v}));
    }
    return out;
}

GradedSubspace map_basis(const Matrix& embed, const std::vector<Vector>& basis, const std::vector<Parity>& parities) {
    std::vector<Vector> out;
    for (const auto& b : basis) out.push_back(embed * b);
    return GradedSubspace::span_components(parities, out);
}

// {x in a : lambda([x, a]) = 0}
GradedSubspace relative_kernel(const SuperLieAlgebra& g, const Functional& lambda, const GradedSubspace& a) {
    const auto& basis = a.basis();
    Matrix k(basis.size(), basis.size());
    for (std::size_t l = 0; l < basis.size(); ++l)
        for (std::size_t j = 0; j < basis.size(); ++j) k(l, j) = lambda(g.bracket(basis[j], basis[l]));
    std::vector<Vector> out;
    for (const auto& coeffs : nullspace(k)) {
        Vector v = zero_vector(g.dim());
        for (std::size_t j = 0; j < basis.size(); ++j) v = v + coeffs[j] * basis[j];
        out.push_back(v);
    }
    return GradedSubspace::span_components(g.parities(), out);
}

GradedSubspace recursive_impl(const SuperLieAlgebra& g, const Functional& lambda) {
    if (lambda_vanishes_on_brackets(g, lambda)) return GradedSubspace::whole(g.parities());
    GradedSubspace c = central_kernel(g, lambda);
    if (c.dim() > 0) {
        auto q = quotient(g, c);
        Functional lq = pull_back(*q.algebra, lambda, q.section);
        GradedSubspace hq = recursive_impl(*q.algebra, lq);
        return map_basis(q.section, hq.basis(), g.parities()).sum(c);
    }
    if (g.sdim() == SuperDim{1, 1}) return GradedSubspace::even_part_of_space(g.parities());
    BMTriple t = find_bm_triple(g, lambda);
    auto sub = subalgebra(g, t.k);
    Functional lk = pull_back(*sub.algebra, lambda, sub.embedding);
    GradedSubspace hk = recursive_impl(*sub.algebra, lk);
    return map_basis(sub.embedding, hk.basis(), g.parities());
}

std::vector<Matrix> ad_matrices(const SuperLieAlgebra& g, std::optional<Parity> only) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!only || g.parity(i) == *only) out.push_back(g.ad(g.basis_vector(i)));
    return out;
}

bool stable_under(const SuperLieAlgebra& g, const GradedSubspace& h) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& b : h.basis())
            if (!h.contains(g.bracket(g.basis_vector(i), b))) return false;
    return true;
}

}  // namespace

LambdaForm lambda_form(const SuperLieAlgebra& alg, const Functional& lambda) {
    std::size_t n = alg.dim();
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!alg.bracket_zero(i, j)) gram(i, j) = lambda(alg.bracket_basis(i, j));
    EvenBilinearForm form(alg.parities(), gram, FormSymmetry::SuperAntisymmetric);
    GradedSubspace kernel = form.radical();
    if (!is_subalgebra(alg, kernel)) throw HypothesisError("lambda_form: kernel is not a subalgebra");
    return {std::move(form), std::move(kernel)};
}

bool vanishes_on_even_derived(const SuperLieAlgebra& alg, const Functional& lambda) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (alg.parity(i) == Parity::Even && alg.parity(j) == Parity::Even &&
                !lambda(alg.bracket_basis(i, j)).is_zero())
                return false;
    return true;
}

GradedSubspace max_isotropic_submodule(const EvenBilinearForm& form, const GradedSubspace& space,
                                       const std::vector<Matrix>& acting, const GradedSubspace& seed) {
    const auto& basis = space.basis();
    std::size_t m = basis.size();
    if (!space.contains(seed)) throw std::invalid_argument("max_isotropic_submodule: seed outside the space");
    std::vector<Parity> par = parities_of(basis, form.parities());

    // Everything below works in coordinates against `basis`.
    Matrix gram(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) gram(a, b) = form(basis[a], basis[b]);
    EvenBilinearForm rf(par, gram, form.symmetry());
    std::vector<Matrix> ops;
    for (const auto& op : acting) {
        Matrix r(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            Vector img = op * basis[b];
            if (!space.contains(img)) throw std::invalid_argument("max_isotropic_submodule: action leaves the space");
            Vector c = space.space().coordinates(img);
            for (std::size_t a = 0; a < m; ++a) r(a, b) = c[a];
        }
        ops.push_back(std::move(r));
    }
    std::vector<Vector> seed_coords;
    for (const auto& s : seed.basis()) seed_coords.push_back(space.space().coordinates(s));
    GradedSubspace w = GradedSubspace::span_components(par, seed_coords);
    if (!is_totally_isotropic(w, rf)) throw std::invalid_argument("max_isotropic_submodule: seed not isotropic");

    for (;;) {
        GradedSubspace wp = perp(rf, w);
        // N = {u in W^perp : op(u) in W for every op}
        const auto& cand = wp.basis();
        std::vector<Vector> n_vectors = w.basis();
        if (ops.empty()) {
            n_vectors.insert(n_vectors.end(), cand.begin(), cand.end());
        } else {
            Matrix sys(ops.size() * m, cand.size());
            for (std::size_t i = 0; i < cand.size(); ++i)
                for (std::size_t t = 0; t < ops.size(); ++t) {
                    Vector r = w.space().residual(ops[t] * cand[i]);
                    for (std::size_t a = 0; a < m; ++a) sys(t * m + a, i) = r[a];
                }
            for (const auto& coeffs : nullspace(sys)) {
                Vector v = zero_vector(m);
                for (std::size_t i = 0; i < cand.size(); ++i) v = v + coeffs[i] * cand[i];
                n_vectors.push_back(v);
            }
        }
        GradedSubspace nsp = GradedSubspace::span_components(par, n_vectors);
        std::optional<Vector> pick;
        for (Parity p : {Parity::Even, Parity::Odd}) {
            auto ext = extend(w, nsp.basis(p));
            if (ext.empty()) continue;
            if (!rf.block_symmetric(p)) {
                pick = ext.front();
                break;
            }
            Matrix c(ext.size(), ext.size());
            for (std::size_t a = 0; a < ext.size(); ++a)
                for (std::size_t b = 0; b < ext.size(); ++b) c(a, b) = rf(ext[a], ext[b]);
            if (auto t = find_isotropic_vector(c)) {
                Vector v = zero_vector(m);
                for (std::size_t a = 0; a < ext.size(); ++a) v = v + (*t)[a] * ext[a];
                pick = v;
                break;
            }
        }
        if (!pick) break;
        std::vector<Vector> grown = w.basis();
        grown.push_back(*pick);
        w = GradedSubspace::span_components(par, grown);
    }
    if (!is_maximal_isotropic(w, rf))
        throw HypothesisError(
            "max_isotropic_submodule: stalled before maximality (action not nilpotent or form not invariant)");
    std::vector<Vector> out;
    for (const auto& c : w.basis()) {
        Vector v = zero_vector(form.ambient());
        for (std::size_t a = 0; a < m; ++a) v = v + c[a] * basis[a];
        out.push_back(v);
    }
    return GradedSubspace::span_components(form.parities(), out);
}

GradedSubspace polarize_even(const SuperLieAlgebra& alg, const Functional& lambda, FlagOrder order) {
    GradedSubspace g0 = GradedSubspace::even_part_of_space(alg.parities());
    std::vector<GradedSubspace> series{g0};
    while (series.back().dim() > 0) {
        GradedSubspace next = bracket_space(alg, g0, series.back());
        if (next.dim() == series.back().dim()) throw HypothesisError("polarize_even: even part is not nilpotent");
        series.push_back(next);
    }
    GradedSubspace a = GradedSubspace::zero(alg.parities());
    GradedSubspace h = a;
    for (std::size_t level = series.size() - 1; level-- > 0;) {
        std::vector<Vector> vs = series[level].basis();
        if (order == FlagOrder::Reversed) std::reverse(vs.begin(), vs.end());
        for (const auto& v : vs) {
            if (a.contains(v)) continue;
            a = a.sum(GradedSubspace::span(alg.parities(), {v}));
            h = h.sum(relative_kernel(alg, lambda, a));
        }
    }
    return h;
}

Polarization polarize(const SuperLieAlgebra& alg, const Functional& lambda, FlagOrder order) {
    if (!is_nilpotent(alg)) throw HypothesisError("polarize: algebra is not nilpotent");
    if (lambda_vanishes_on_brackets(alg, lambda))
        return {GradedSubspace::whole(alg.parities()), lambda, PolarizationRoute::EvenOddSplit};
    try {
        LambdaForm lf = lambda_form(alg, lambda);
        GradedSubspace g1 = GradedSubspace::odd_part_of_space(alg.parities());
        GradedSubspace v = max_isotropic_submodule(lf.form, g1, ad_matrices(alg, Parity::Even),
                                                   GradedSubspace::zero(alg.parities()));
        GradedSubspace h = polarize_even(alg, lambda, order).sum(v);
        if (check_polarization(alg, lambda, h).empty()) return {h, lambda, PolarizationRoute::EvenOddSplit};
    } catch (const HypothesisError&) {
    }
    return polarize_recursive(alg, lambda);
}

Polarization polarize_recursive(const SuperLieAlgebra& alg, const Functional& lambda) {
    if (!is_nilpotent(alg)) throw HypothesisError("polarize: algebra is not nilpotent");
    GradedSubspace h = recursive_impl(alg, lambda);
    if (auto err = check_polarization(alg, lambda, h); !err.empty())
        throw HypothesisError("polarize_recursive: " + err);
    return {h, lambda, PolarizationRoute::Recursive};
}

InvariantPolarization invariant_polarize(const SuperLieAlgebra& alg, const GradedSubspace& k,
                                         const Functional& lambda) {
    if (!is_ideal(alg, k)) throw HypothesisError("invariant_polarize: k is not an ideal");
    auto sub = subalgebra(alg, k);
    Functional lk = pull_back(*sub.algebra, lambda, sub.embedding);
    auto check_in_k = [&](const GradedSubspace& h) {
        std::vector<Vector> coords;
        for (const auto& b : h.basis()) coords.push_back(sub.coordinates(b));
        return check_polarization(*sub.algebra, lk, GradedSubspace::span_components(sub.algebra->parities(), coords));
    };
    try {
        LambdaForm lf = lambda_form(alg, lambda);
        GradedSubspace h = max_isotropic_submodule(lf.form, k, ad_matrices(alg, std::nullopt),
                                                   GradedSubspace::zero(alg.parities()));
        if (stable_under(alg, h) && check_in_k(h).empty()) return {h, true, ""};
    } catch (const HypothesisError&) {
    }
    Polarization p = polarize(*sub.algebra, lk);
    GradedSubspace h = map_basis(sub.embedding, p.h.basis(), alg.parities());
    bool stable = stable_under(alg, h);
    return {h, stable, stable ? "" : "invariance not achieved"};
}

std::string check_polarization(const SuperLieAlgebra& alg, const Functional& lambda, const GradedSubspace& h) {
    if (!is_subalgebra(alg, h)) return "not a subalgebra";
    for (const auto& a : h.basis())
        for (const auto& b : h.basis())
            if (!lambda(alg.bracket(a, b)).is_zero()) return "not subordinate: lambda([h,h]) != 0";
    LambdaForm lf = lambda_form(alg, lambda);
    if (!h.contains(lf.kernel)) return "does not contain the kernel g^lambda";
    std::size_t g0 = alg.sdim().even;
    if (2 * h.sdim().even != g0 + lf.kernel.sdim().even) return "even part has the wrong dimension";
    if (!is_maximal_isotropic(h, lf.form)) return "odd part is not maximal isotropic";
    return {};
}

}  // namespace superdix
