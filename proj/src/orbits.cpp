#include "superdix/orbits.hpp"

#include <random>

namespace superdix {

namespace {

Matrix exp_matrix(const SuperLieAlgebra& alg, const Vector& x) {
    std::size_t n = alg.dim();
    Matrix ad = alg.ad(x);
    Matrix out = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (std::size_t m = 1;; ++m) {
        term = Scalar::fraction(1, static_cast<long>(m)) * (ad * term);
        if (term.is_zero()) break;
        if (m > n) throw HypothesisError("exp_ad: ad(x) is not nilpotent");
        out = out + term;
    }
    return out;
}

AdjointAutomorphism exp_unchecked(const SuperLieAlgebra& alg, const Vector& x) {
    return {{x}, exp_matrix(alg, x), exp_matrix(alg, Scalar(-1) * x)};
}

// Basis adapted to the upper central series, innermost first.
std::vector<Vector> central_series_basis(const SuperLieAlgebra& g) {
    std::size_t n = g.dim();
    GradedSubspace z = GradedSubspace::zero(g.parities());
    std::vector<Vector> out;
    while (z.dim() < n) {
        // {x : [e_i, x] in z for every i}
        Matrix sys(n * n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Vector r = z.space().residual(g.bracket(g.basis_vector(i), g.basis_vector(j)));
                for (std::size_t a = 0; a < n; ++a) sys(i * n + a, j) = r[a];
            }
        GradedSubspace next = GradedSubspace::span_components(g.parities(), nullspace(sys));
        if (next.dim() == z.dim()) throw HypothesisError("orbit search: algebra is not nilpotent");
        for (Parity p : {Parity::Even, Parity::Odd})
            for (const auto& v : next.basis(p)) {
                if (z.contains(v)) continue;
                out.push_back(v);
                z = z.sum(GradedSubspace::span(g.parities(), {v}));
            }
    }
    return out;
}

std::size_t agreement(const Functional& a, const Functional& b, const std::vector<Vector>& basis) {
    std::size_t i = 0;
    while (i < basis.size() && a(basis[i]) == b(basis[i])) ++i;
    return i;
}

// t with (exp(t ad x).mu)(v) = target when that value is affine in t.
std::optional<Scalar> solve_linear(const SuperLieAlgebra& g, const Functional& mu, const Vector& x, const Vector& v,
                                   const Scalar& target) {
    Vector w = g.bracket(x, v);
    Scalar slope = -mu(w);
    if (slope.is_zero()) return std::nullopt;
    for (w = g.bracket(x, w); !is_zero(w); w = g.bracket(x, w))
        if (!mu(w).is_zero()) return std::nullopt;
    return (target - mu(v)) / slope;
}

struct Sweep {
    std::vector<Vector> witness;  // first entry acts last
    Functional current;
};

bool greedy(const SuperLieAlgebra& g, Sweep& s, const Functional& goal, const std::vector<Vector>& basis,
            const std::vector<Vector>& candidates) {
    for (;;) {
        std::size_t i = agreement(s.current, goal, basis);
        if (i == basis.size()) return true;
        bool moved = false;
        for (const auto& x : candidates) {
            auto t = solve_linear(g, s.current, x, basis[i], goal(basis[i]));
            if (!t) continue;
            Vector tx = *t * x;
            Functional next = coadjoint(g, exp_unchecked(g, tx), s.current);
            if (agreement(next, goal, basis) <= i) continue;
            s.witness.insert(s.witness.begin(), tx);
            s.current = next;
            moved = true;
            break;
        }
        if (!moved) return false;
    }
}

Vector random_even(const SuperLieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Vector x = zero_vector(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.parity(i) == Parity::Even) x[i] = Scalar(coeff(rng));
    return x;
}

PBWElement separator_between(const AlgebraPtr& alg, const std::vector<Exponents>& mons, const Subspace& in,
                             const Subspace& out) {
    for (const auto& v : in.basis())
        if (!out.contains(v)) return element_from_coordinates(alg, mons, v);
    throw std::logic_error("separator_between: slices agree");
}

}  // namespace

AdjointAutomorphism identity_automorphism(const SuperLieAlgebra& alg) {
    return {{}, Matrix::identity(alg.dim()), Matrix::identity(alg.dim())};
}

AdjointAutomorphism exp_ad(const SuperLieAlgebra& alg, const Vector& x) {
    if (x.size() != alg.dim()) throw DimensionMismatch("exp_ad: vector length");
    auto p = vector_parity(alg.parities(), x);
    if (!is_zero(x) && (!p || *p != Parity::Even)) throw HypothesisError("exp_ad: x is not even");
    AdjointAutomorphism a = exp_unchecked(alg, x);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            Vector ei = alg.basis_vector(i), ej = alg.basis_vector(j);
            if (a(alg.bracket(ei, ej)) != alg.bracket(a(ei), a(ej)))
                throw std::logic_error("exp_ad: bracket not preserved on (" + alg.labels()[i] + ", " +
                                       alg.labels()[j] + ")");
        }
    return a;
}

AdjointAutomorphism compose(const AdjointAutomorphism& a, const AdjointAutomorphism& b) {
    std::vector<Vector> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return {std::move(gens), a.matrix * b.matrix, b.inverse * a.inverse};
}

PBWElement apply(const AdjointAutomorphism& a, const AlgebraPtr& alg, const PBWElement& u) {
    std::vector<PBWElement> images;
    for (std::size_t j = 0; j < alg->dim(); ++j) images.push_back(PBWElement::from_vector(alg, a.matrix.column(j)));
    return map_generators(u, alg, images);
}

Functional coadjoint(const SuperLieAlgebra& alg, const AdjointAutomorphism& a, const Functional& lambda) {
    return Functional(alg, a.inverse.transpose() * lambda.coeffs());
}

const char* to_string(OrbitVerdict v) {
    switch (v) {
        case OrbitVerdict::EqualWithWitness: return "equal_with_witness";
        case OrbitVerdict::EqualByIdealSlice: return "equal_by_ideal_slice";
        case OrbitVerdict::DistinctWithSeparator: return "distinct_with_separator";
        case OrbitVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int exit_code(OrbitVerdict v) {
    switch (v) {
        case OrbitVerdict::EqualWithWitness: return 0;
        case OrbitVerdict::DistinctWithSeparator: return 1;
        default: return 2;
    }
}

bool replay_witness(const SuperLieAlgebra& alg, const std::vector<Vector>& witness, const Functional& a,
                    const Functional& b) {
    Functional cur = a;
    for (auto it = witness.rbegin(); it != witness.rend(); ++it) cur = coadjoint(alg, exp_ad(alg, *it), cur);
    return cur == b;
}

OrbitComparison orbit_equal(const AlgebraPtr& alg, const Functional& a, const Functional& b,
                            const OrbitSearch& search) {
    const SuperLieAlgebra& g = *alg;
    OrbitComparison out;
    out.degree = search.degree;
    GradedSubspace z_space = center(g);
    for (const auto& z : z_space.basis()) {
        if (a(z) == b(z)) continue;
        out.verdict = OrbitVerdict::DistinctWithSeparator;
        out.separator = PBWElement::from_vector(alg, z) - a(z) * PBWElement::constant(alg, Scalar(1));
        out.degree = 1;
        out.reason = "central values differ on " + g.format(z);
        return out;
    }
    if (a == b) {
        out.verdict = OrbitVerdict::EqualWithWitness;
        out.witness = std::vector<Vector>{};
        out.reason = "functionals coincide";
        return out;
    }
    try {
        auto mons = monomials_up_to(g, search.degree);
        Subspace ka = kernel_slice(build_dixmier(alg, a), search.degree);
        Subspace kb = kernel_slice(build_dixmier(alg, b), search.degree);
        if (ka != kb) {
            out.verdict = OrbitVerdict::DistinctWithSeparator;
            out.separator = ka.contains(kb) ? separator_between(alg, mons, ka, kb) : separator_between(alg, mons, kb, ka);
            out.reason = "ideal slices differ";
            return out;
        }
    } catch (const HypothesisError& e) {
        out.reason = std::string("ideal comparison failed: ") + e.what();
    }

    std::vector<Vector> basis = central_series_basis(g);
    std::vector<Vector> candidates;
    for (const auto& v : basis)
        if (*vector_parity(g.parities(), v) == Parity::Even) candidates.push_back(v);
    for (unsigned attempt = 0; attempt <= search.tries; ++attempt) {
        Sweep s{{}, a};
        std::vector<Vector> cands = candidates;
        if (attempt > 0) {
            std::mt19937_64 rng(search.seed + attempt);
            Vector x = random_even(g, rng);
            if (!is_zero(x)) {
                s.current = coadjoint(g, exp_unchecked(g, x), a);
                s.witness.push_back(x);
            }
            for (int extra = 0; extra < 4; ++extra) cands.push_back(random_even(g, rng));
        }
        if (greedy(g, s, b, basis, cands) && replay_witness(g, s.witness, a, b)) {
            out.verdict = OrbitVerdict::EqualWithWitness;
            out.witness = std::move(s.witness);
            out.reason = "witness found";
            return out;
        }
    }
    if (out.reason.empty()) {
        out.verdict = OrbitVerdict::EqualByIdealSlice;
        out.reason = "ideal slices agree up to degree " + std::to_string(search.degree) + "; no witness found";
    }
    return out;
}

CheckReport ideal_invariance_check(const DixmierMorphism& m, const AdjointAutomorphism& a, unsigned n) {
    const AlgebraPtr& alg = m.source();
    auto mons = monomials_up_to(*alg, n);
    Subspace slice = kernel_slice(m, n);
    for (const auto& c : slice.basis()) {
        PBWElement u = element_from_coordinates(alg, mons, c);
        PBWElement au = apply(a, alg, u);
        if (!member(m, au)) return {false, "image of " + u.to_string() + " leaves the ideal"};
    }
    return {};
}

StabilizerBound stabilizer_bound(const AlgebraPtr& alg, const Functional& lambda, const GradedSubspace& k,
                                 unsigned n) {
    const SuperLieAlgebra& g = *alg;
    if (!is_ideal(g, k)) throw HypothesisError("stabilizer_bound: k is not an ideal");
    const auto& kb = k.basis();
    Matrix sys(kb.size(), g.dim());
    for (std::size_t r = 0; r < kb.size(); ++r)
        for (std::size_t j = 0; j < g.dim(); ++j) sys(r, j) = lambda(g.bracket(g.basis_vector(j), kb[r]));
    StabilizerBound out{GradedSubspace::span_components(g.parities(),
                                                        kb.empty() ? std::vector<Vector>{} : nullspace(sys)),
                        GradedSubspace::zero(g.parities()),
                        {}};
    if (kb.empty()) out.centralizer = GradedSubspace::whole(g.parities());
    out.bound = out.centralizer.sum(k);
    if (kb.empty()) return out;

    auto sub = subalgebra(g, k);
    DixmierMorphism mk = build_dixmier(sub.algebra, pull_back(*sub.algebra, lambda, sub.embedding));
    std::size_t d = sub.algebra->dim();
    for (const auto& x : out.bound.basis(Parity::Even)) {
        AdjointAutomorphism a = exp_ad(g, x);
        AdjointAutomorphism ak{{x}, Matrix(d, d), Matrix(d, d)};
        for (std::size_t j = 0; j < d; ++j) {
            Vector fwd = sub.coordinates(a.matrix * sub.embedding.column(j));
            Vector back = sub.coordinates(a.inverse * sub.embedding.column(j));
            for (std::size_t i = 0; i < d; ++i) {
                ak.matrix(i, j) = fwd[i];
                ak.inverse(i, j) = back[i];
            }
        }
        CheckReport r = ideal_invariance_check(mk, ak, n);
        if (!r.ok) {
            out.invariance = {false, "exp(ad " + g.format(x) + "): " + r.message};
            return out;
        }
    }
    return out;
}

}  // namespace superdix
