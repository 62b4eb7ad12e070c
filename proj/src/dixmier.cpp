#include "superdix/dixmier.hpp"

#include <algorithm>
#include <functional>

#include "superdix/polarization.hpp"

namespace superdix {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::Quotient: return "quotient";
        case StepKind::Even: return "even";
        case StepKind::Odd: return "odd";
        case StepKind::TerminalClifford: return "terminal_clifford";
        case StepKind::TerminalEvaluation: return "terminal_evaluation";
    }
    return "?";
}

namespace {

using Kind = TargetFactor::Kind;

bool lambda_kills_brackets(const SuperLieAlgebra& g, const Functional& lambda) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j)
            if (!g.bracket_zero(i, j) && !lambda(g.bracket_basis(i, j)).is_zero()) return false;
    return true;
}

TargetElement combine(const TargetPtr& t, const std::vector<TargetElement>& images, const Vector& v) {
    TargetElement r(t);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r += v[i] * images[i];
    return r;
}

std::string format_span(const SuperLieAlgebra& g, const std::vector<Vector>& vs) {
    std::string s = "span(";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + g.format(vs[i]);
    return s + ")";
}

class Builder {
public:
    std::vector<DixmierStep> steps;
    std::vector<DixmierLevel> levels;  // innermost first

    DixmierLevel build(const AlgebraPtr& g, const Functional& lambda) {
        DixmierLevel level = build_level(g, lambda);
        levels.push_back(level);
        return level;
    }

private:
    void record(StepKind kind, const SuperLieAlgebra& g, std::string detail) {
        steps.push_back({kind, g.name(), g.sdim(), std::move(detail)});
    }

    DixmierLevel build_level(const AlgebraPtr& gp, const Functional& lambda) {
        const SuperLieAlgebra& g = *gp;
        std::size_t n = g.dim();
        if (lambda_kills_brackets(g, lambda)) {
            record(StepKind::TerminalEvaluation, g, "");
            auto t = std::make_shared<const FactoredTarget>(std::vector<TargetFactor>{});
            std::vector<TargetElement> images;
            for (std::size_t j = 0; j < n; ++j) images.push_back(TargetElement::scalar(t, lambda.at(j)));
            return {gp, t, images};
        }
        GradedSubspace c = central_kernel(g, lambda);
        if (c.dim() > 0) {
            record(StepKind::Quotient, g, format_span(g, c.basis()));
            auto q = quotient(g, c);
            DixmierLevel inner = build(q.algebra, pull_back(*q.algebra, lambda, q.section));
            std::vector<TargetElement> images;
            for (std::size_t j = 0; j < n; ++j) images.push_back(combine(inner.target, inner.images, q.projection.column(j)));
            return {gp, inner.target, images};
        }
        if (g.sdim() == SuperDim{1, 1}) {
            std::size_t y = g.parity(0) == Parity::Odd ? 0 : 1;
            Scalar a = lambda(g.bracket_basis(y, y)) * Scalar::fraction(1, 2);
            record(StepKind::TerminalClifford, g, "y = " + g.labels()[y]);
            auto t = std::make_shared<const FactoredTarget>(std::vector<TargetFactor>{{Kind::Clifford, a}});
            std::vector<TargetElement> images;
            for (std::size_t j = 0; j < n; ++j)
                images.push_back(j == y ? TargetElement::gamma(t, 0) : TargetElement::scalar(t, lambda.at(j)));
            return {gp, t, images};
        }
        BMTriple tr = find_bm_triple(g, lambda);
        bool even = tr.parity == Parity::Even;
        record(even ? StepKind::Even : StepKind::Odd, g, "y = " + g.format(tr.y) + ", x = " + g.format(tr.x));

        auto sub = subalgebra(g, tr.k, g.name() + "/k");
        const SuperLieAlgebra& k = *sub.algebra;
        auto qk = quotient(k, GradedSubspace::span(k.parities(), {sub.coordinates(tr.y)}), g.name() + "'");
        Functional lbar = pull_back(*qk.algebra, lambda, sub.embedding * qk.section);
        DixmierLevel inner = build(qk.algebra, lbar);
        auto image_in_k = [&](const Vector& v) {  // v in k, ambient coordinates of g
            return combine(inner.target, inner.images, qk.projection * sub.coordinates(v));
        };

        auto head = std::make_shared<const FactoredTarget>(
            std::vector<TargetFactor>{{even ? Kind::Weyl : Kind::Matrix, Scalar(0)}});
        TargetPtr t = concat(*head, *inner.target);
        auto inner_one = TargetElement::scalar(inner.target, Scalar(1));
        std::vector<TargetElement> images;
        for (std::size_t j = 0; j < n; ++j) {
            Vector e = g.basis_vector(j);
            Scalar alpha = lambda(g.bracket(tr.y, e));
            Vector kpart = e - alpha * tr.x;
            TargetElement img(t);
            if (even) {
                // sum_m (1/m!) (-q)^m (x) pi'(ad(x)^m kpart) + alpha p
                Vector cur = kpart;
                for (unsigned m = 0; !is_zero(cur); ++m) {
                    Scalar coef(Rational(m % 2 ? -1 : 1, 1) / factorial(m));
                    img += coef * tensor(t, TargetElement::weyl_q(head, 0, m), image_in_k(cur));
                    cur = g.bracket(tr.x, cur);
                    if (m > n) throw HypothesisError("build_dixmier: ad(x) is not nilpotent");
                }
                if (!alpha.is_zero()) img += alpha * tensor(t, TargetElement::weyl_p(head, 0), inner_one);
            } else {
                Vector w = Scalar::fraction(1, 2) * g.bracket(tr.x, tr.x);
                auto id = TargetElement::scalar(head, Scalar(1));
                img += tensor(t, id, image_in_k(kpart));
                TargetElement upper = image_in_k(g.bracket(tr.x, kpart));
                if (!alpha.is_zero()) upper += alpha * image_in_k(w);
                img += tensor(t, TargetElement::matrix_unit(head, 0, 1, 2), upper);
                if (!alpha.is_zero()) img += alpha * tensor(t, TargetElement::matrix_unit(head, 0, 2, 1), inner_one);
            }
            images.push_back(std::move(img));
        }
        return {gp, t, images};
    }
};

std::vector<TargetElement> evaluate_with(const TargetPtr& t, const std::vector<TargetElement>& gens,
                                         const std::vector<Exponents>& monomials) {
    std::map<Exponents, TargetElement> memo;
    std::function<const TargetElement&(const Exponents&)> image = [&](const Exponents& e) -> const TargetElement& {
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        std::ptrdiff_t last = -1;
        for (std::size_t i = e.size(); i-- > 0;)
            if (e[i] > 0) {
                last = static_cast<std::ptrdiff_t>(i);
                break;
            }
        TargetElement val = TargetElement::scalar(t, Scalar(1));
        if (last >= 0) {
            Exponents prefix = e;
            --prefix[static_cast<std::size_t>(last)];
            val = image(prefix) * gens[static_cast<std::size_t>(last)];
        }
        return memo.emplace(e, std::move(val)).first->second;
    };
    std::vector<TargetElement> out;
    for (const auto& m : monomials) out.push_back(image(m));
    return out;
}

Vector sigma_coordinates(const SuperLieAlgebra& g, const std::vector<Exponents>& mons, const Vector& v) {
    Vector out = v;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (monomial_parity(g, mons[i]) == Parity::Odd) out[i] = -out[i];
    return out;
}

Subspace kernel_of_pbw(const std::vector<PBWElement>& elems, std::size_t ambient) {
    std::map<Exponents, std::size_t> row;
    for (const auto& e : elems)
        for (const auto& [k, c] : e.terms()) row.try_emplace(k, row.size());
    Matrix m(row.size(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (const auto& [k, c] : elems[j].terms()) m(row[k], j) = c;
    if (row.empty()) return Subspace::whole(ambient);
    return Subspace::span(ambient, nullspace(m));
}

}  // namespace

DixmierMorphism::DixmierMorphism(AlgebraPtr source, Functional lambda, std::vector<DixmierStep> steps,
                                 std::vector<DixmierLevel> levels, std::vector<Scalar> radicands)
    : source_(std::move(source)),
      lambda_(std::move(lambda)),
      steps_(std::move(steps)),
      levels_(std::move(levels)),
      radicands_(std::move(radicands)) {}

std::size_t DixmierMorphism::p() const {
    return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const auto& s) {
        return s.kind == StepKind::Even;
    }));
}

std::size_t DixmierMorphism::q() const {
    std::size_t q = 0;
    for (const auto& s : steps_) {
        if (s.kind == StepKind::Odd) q += 2;
        if (s.kind == StepKind::TerminalClifford) q += 1;
    }
    return q;
}

std::vector<TargetElement> DixmierMorphism::evaluate_monomials(const std::vector<Exponents>& monomials) const {
    return evaluate_with(target(), generator_images(), monomials);
}

TargetElement DixmierMorphism::evaluate(const PBWElement& u) const {
    if (u.algebra() != source_) throw std::invalid_argument("evaluate: element of another algebra");
    std::vector<Exponents> mons;
    for (const auto& [e, c] : u.terms()) mons.push_back(e);
    auto imgs = evaluate_monomials(mons);
    TargetElement r(target());
    std::size_t i = 0;
    for (const auto& [e, c] : u.terms()) r += c * imgs[i++];
    return r;
}

DixmierMorphism build_dixmier(const AlgebraPtr& alg, const Functional& lambda) {
    if (!is_nilpotent(*alg)) throw HypothesisError("build_dixmier: algebra is not nilpotent");
    Builder b;
    b.build(alg, lambda);
    std::reverse(b.levels.begin(), b.levels.end());
    std::size_t used = 0;
    for (const auto& img : b.levels.front().images)
        for (const auto& [k, c] : img.terms()) used = std::max(used, c.levels());
    for (const auto& f : b.levels.front().target->factors()) used = std::max(used, f.square.levels());
    auto all = Tower::global().radicands();
    std::vector<Scalar> rad(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(used));
    return {alg, lambda, std::move(b.steps), std::move(b.levels), std::move(rad)};
}

bool member(const DixmierMorphism& m, const PBWElement& u) { return m.evaluate(u).is_zero(); }

CheckReport validate_step_images(const DixmierMorphism& m) {
    for (const auto& level : m.levels()) {
        const SuperLieAlgebra& g = *level.algebra;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (!level.images[i].component(g.parity(i) + Parity::Odd).is_zero())
                return {false, g.name() + ": image of " + g.labels()[i] + " has the wrong parity"};
            for (std::size_t j = i; j < g.dim(); ++j) {
                TargetElement lhs = combine(level.target, level.images, g.bracket_basis(i, j));
                TargetElement rhs = supercommutator(level.images[i], level.images[j]);
                if (!(lhs == rhs))
                    return {false, g.name() + ": bracket [" + g.labels()[i] + ", " + g.labels()[j] + "] not preserved"};
            }
        }
    }
    return {};
}

Subspace kernel_of_images(const std::vector<TargetElement>& images) {
    std::map<TargetKey, std::size_t> row;
    for (const auto& e : images)
        for (const auto& [k, c] : e.terms()) row.try_emplace(k, row.size());
    if (row.empty()) return Subspace::whole(images.size());
    Matrix m(row.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [k, c] : images[j].terms()) m(row[k], j) = c;
    return Subspace::span(images.size(), nullspace(m));
}

Subspace kernel_slice(const DixmierMorphism& m, unsigned n) {
    return kernel_of_images(m.evaluate_monomials(monomials_up_to(*m.source(), n)));
}

PBWElement element_from_coordinates(const AlgebraPtr& alg, const std::vector<Exponents>& monomials, const Vector& c) {
    PBWElement r(alg);
    for (std::size_t i = 0; i < monomials.size(); ++i) r.add_term(monomials[i], c[i]);
    return r;
}

DixmierMorphism build_even_part(const DixmierMorphism& m) {
    const SuperLieAlgebra& g = *m.source();
    auto sub = subalgebra(g, GradedSubspace::even_part_of_space(g.parities()), g.name() + "_0");
    return build_dixmier(sub.algebra, pull_back(*sub.algebra, m.lambda(), sub.embedding));
}

CheckReport even_part_ideal_check(const DixmierMorphism& m, const DixmierMorphism& m0, unsigned n) {
    const SuperLieAlgebra& g = *m.source();
    const SuperLieAlgebra& g0 = *m0.source();
    // Generators of g0 are unit vectors of g (even labels keep their names).
    std::vector<TargetElement> gens;
    for (std::size_t i = 0; i < g0.dim(); ++i) {
        auto idx = g.index_of(g0.labels()[i]);
        if (!idx) return {false, "even subalgebra label " + g0.labels()[i] + " not found in g"};
        gens.push_back(m.generator_images()[*idx]);
    }
    auto mons = monomials_up_to(g0, n);
    Subspace ker = kernel_of_images(evaluate_with(m.target(), gens, mons));
    auto imgs0 = m0.evaluate_monomials(mons);
    for (const auto& v : ker.basis()) {
        TargetElement r = combine(m0.target(), imgs0, v);
        if (!r.is_zero())
            return {false, "element " + element_from_coordinates(m0.source(), mons, v).to_string() +
                               " lies in I(lambda) but not in I(lambda|g0)"};
    }
    return {};
}

MaximalSplit split_maximal(const DixmierMorphism& m) {
    MaximalSplit s;
    const TargetPtr& t = m.target();
    if (!t->has_clifford()) {
        s.already_maximal = true;
        return s;
    }
    TargetElement eps = TargetElement::scalar(t, Scalar(1));
    Scalar a;
    for (std::size_t f = 0; f < t->factors().size(); ++f) {
        const auto& fac = t->factors()[f];
        if (fac.kind == Kind::Matrix)
            eps = eps * (TargetElement::matrix_unit(t, f, 1, 1) - TargetElement::matrix_unit(t, f, 2, 2));
        else if (fac.kind == Kind::Clifford) {
            eps = eps * TargetElement::gamma(t, f);
            a = fac.square;
        }
    }
    s.root = adjoin_sqrt(a);
    auto one = TargetElement::scalar(t, Scalar(1));
    Scalar half = Scalar::fraction(1, 2);
    s.plus_idempotent = half * (one + s.root.inverse() * eps);
    s.minus_idempotent = half * (one - s.root.inverse() * eps);
    return s;
}

bool member_plus(const DixmierMorphism& m, const MaximalSplit& s, const PBWElement& u) {
    if (s.already_maximal) return member(m, u);
    return (m.evaluate(u) * *s.plus_idempotent).is_zero();
}

bool member_minus(const DixmierMorphism& m, const MaximalSplit& s, const PBWElement& u) {
    if (s.already_maximal) return member(m, u);
    return (m.evaluate(u) * *s.minus_idempotent).is_zero();
}

namespace {

CheckReport left_ideal_route(const DixmierMorphism& m, unsigned n) {
    const AlgebraPtr& gp = m.source();
    const SuperLieAlgebra& g = *gp;
    const Functional& lambda = m.lambda();
    InvariantPolarization ip = invariant_polarize(g, GradedSubspace::whole(g.parities()), lambda);
    const GradedSubspace& h = ip.h;
    LambdaForm lf = lambda_form(g, lambda);
    GradedSubspace hp = perp(lf.form, h);
    std::optional<Vector> c;
    for (const auto& v : hp.basis(Parity::Odd))
        if (!h.contains(v)) {
            c = v;
            break;
        }
    if (!c) return {false, "no odd vector in h^perp outside h"};
    Scalar cc = lambda(g.bracket(*c, *c));
    if (cc.is_zero()) return {false, "chosen c has lambda([c,c]) = 0"};
    Scalar mu = adjoin_sqrt(cc * Scalar::fraction(1, 2));
    GradedSubspace hext = h.sum(GradedSubspace::span(g.parities(), {*c}));
    if (!is_subalgebra(g, hext)) return {false, "h + span(c) is not a subalgebra"};
    // A covector vanishing on h with value 1 on c.
    std::vector<Vector> rows = h.basis();
    rows.push_back(*c);
    Vector rhs = zero_vector(rows.size());
    rhs.back() = Scalar(1);
    auto dual = solve(Matrix::from_rows(rows, g.dim()), rhs);
    if (!dual) return {false, "could not separate c from h"};

    auto mons = monomials_up_to(g, n);
    auto slice = [&](const LeftIdealReducer& r) {
        std::vector<PBWElement> red;
        for (const auto& e : mons) red.push_back(r.reduce(PBWElement::monomial(gp, e)));
        return kernel_of_pbw(red, mons.size());
    };
    Subspace base = slice(LeftIdealReducer(gp, h, lambda));
    Subspace plus = slice(LeftIdealReducer(gp, hext, lambda.coeffs() + mu * *dual));
    Subspace minus = slice(LeftIdealReducer(gp, hext, lambda.coeffs() - mu * *dual));
    if (!(plus.intersect(minus) == base))
        return {false, "U(g)J+ cap U(g)J- differs from U(g)J on F^" + std::to_string(n)};
    return {};
}

}  // namespace

SplitChecks check_split(const DixmierMorphism& m, unsigned n) {
    SplitChecks out;
    const TargetPtr& t = m.target();
    SuperDim zc = supercenter_dimension(t, 3);
    if (!(zc == SuperDim{1, 0}))
        out.supercenter = {false, "supercenter of the target has sdim (" + std::to_string(zc.even) + "|" +
                                      std::to_string(zc.odd) + ") in degree <= 3"};
    CliffordPresentation pres = canonicalize_clifford(t);
    if (!pres.verified) {
        out.clifford_full = {false, pres.message};
    } else if (clifford_span_dimension(pres) != (std::size_t{1} << pres.generators.size())) {
        out.clifford_full = {false, "Clifford generators do not span a full Clifford algebra"};
    }
    MaximalSplit s = split_maximal(m);
    out.applicable = !s.already_maximal;
    if (!out.applicable) return out;

    const SuperLieAlgebra& g = *m.source();
    auto mons = monomials_up_to(g, n);
    auto imgs = m.evaluate_monomials(mons);
    std::vector<TargetElement> ip, im;
    for (const auto& x : imgs) {
        ip.push_back(x * *s.plus_idempotent);
        im.push_back(x * *s.minus_idempotent);
    }
    Subspace k = kernel_of_images(imgs);
    Subspace kp = kernel_of_images(ip);
    Subspace km = kernel_of_images(im);
    std::vector<Vector> swapped;
    for (const auto& v : kp.basis()) swapped.push_back(sigma_coordinates(g, mons, v));
    if (!(Subspace::span(mons.size(), swapped) == km)) out.sigma_swaps = {false, "Sigma(I+) != I- on the slice"};
    if (!kp.contains(k) || !km.contains(k)) out.contain_kernel = {false, "I(lambda) not contained in both ideals"};
    if (!(kp.intersect(km) == k)) out.intersection = {false, "I+ cap I- != I(lambda) on the slice"};
    out.left_ideal_route = left_ideal_route(m, n);
    return out;
}

}  // namespace superdix
