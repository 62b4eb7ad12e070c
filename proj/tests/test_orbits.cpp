#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "superdix/orbits.hpp"

using namespace superdix;

namespace {

Vector basis_of(const AlgebraPtr& g, const std::string& s) { return g->basis_vector(*g->index_of(s)); }

GradedSubspace span_of(const AlgebraPtr& g, const std::vector<std::string>& labels) {
    std::vector<Vector> vs;
    for (const auto& l : labels) vs.push_back(basis_of(g, l));
    return GradedSubspace::span(g->parities(), vs);
}

Vector random_even(const SuperLieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vector x = zero_vector(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.parity(i) == Parity::Even) x[i] = Scalar::fraction(coeff(rng), 1 + (i % 2));
    return x;
}

}  // namespace

TEST(Orbits, ExpAd) {
    auto h = fixtures::h3();
    EXPECT_EQ(exp_ad(*h, basis_of(h, "z")).matrix, Matrix::identity(3));
    AdjointAutomorphism a = exp_ad(*h, basis_of(h, "q"));
    EXPECT_EQ(a(basis_of(h, "p")), basis_of(h, "p") + basis_of(h, "z"));
    EXPECT_EQ(a(basis_of(h, "q")), basis_of(h, "q"));
    AdjointAutomorphism back = exp_ad(*h, Scalar(-1) * basis_of(h, "q"));
    EXPECT_EQ(compose(a, back).matrix, Matrix::identity(3));
    EXPECT_EQ(a.matrix * a.inverse, Matrix::identity(3));

    auto s = fixtures::superheis_hyp();
    EXPECT_THROW((void)exp_ad(*s, basis_of(s, "c1")), HypothesisError);
    auto c = fixtures::odd11_clifford();
    EXPECT_EQ(exp_ad(*c, basis_of(c, "z")).matrix, Matrix::identity(2));
}

TEST(Orbits, Coadjoint) {
    auto h = fixtures::h3();
    Functional lambda = fixtures::functional(h, {{"z", 1}});
    EXPECT_EQ(coadjoint(*h, identity_automorphism(*h), lambda), lambda);
    Functional moved = coadjoint(*h, exp_ad(*h, basis_of(h, "q")), lambda);
    EXPECT_EQ(moved, fixtures::functional(h, {{"z", 1}, {"p", -1}}));

    auto g = fixtures::heis53();
    Functional lg = fixtures::functional(g, {{"z", 2}, {"q1", 1}});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        Functional m = coadjoint(*g, exp_ad(*g, random_even(*g, rng)), lg);
        GradedSubspace z_space = center(*g);
        for (const auto& z : z_space.basis()) EXPECT_EQ(m(z), lg(z));
    }
}

TEST(Orbits, OrbitEqual) {
    auto h = fixtures::h3();
    Functional z1 = fixtures::functional(h, {{"z", 1}});
    OrbitComparison same = orbit_equal(h, z1, z1);
    EXPECT_EQ(same.verdict, OrbitVerdict::EqualWithWitness);
    ASSERT_TRUE(same.witness);
    EXPECT_TRUE(same.witness->empty());

    Functional shifted = fixtures::functional(h, {{"z", 1}, {"p", 1}});
    OrbitComparison eq = orbit_equal(h, z1, shifted);
    ASSERT_EQ(eq.verdict, OrbitVerdict::EqualWithWitness) << eq.reason;
    EXPECT_EQ(eq.witness->size(), 1U);
    EXPECT_TRUE(replay_witness(*h, *eq.witness, z1, shifted));

    OrbitComparison dz = orbit_equal(h, z1, fixtures::functional(h, {{"z", 2}}));
    EXPECT_EQ(dz.verdict, OrbitVerdict::DistinctWithSeparator);
    ASSERT_TRUE(dz.separator);
    EXPECT_EQ(exit_code(dz.verdict), 1);

    Functional pa = fixtures::functional(h, {{"p", 1}});
    Functional qa = fixtures::functional(h, {{"q", 1}});
    OrbitComparison dpq = orbit_equal(h, pa, qa);
    EXPECT_EQ(dpq.verdict, OrbitVerdict::DistinctWithSeparator);
    ASSERT_TRUE(dpq.separator);
    EXPECT_NE(member(build_dixmier(h, pa), *dpq.separator), member(build_dixmier(h, qa), *dpq.separator));

    auto g = fixtures::heis53();
    Functional lg = fixtures::functional(g, {{"z", 1}});
    std::mt19937_64 rng(3);
    Functional target = coadjoint(*g, exp_ad(*g, random_even(*g, rng)), lg);
    OrbitComparison w = orbit_equal(g, lg, target, {2, 4, 11});
    ASSERT_EQ(w.verdict, OrbitVerdict::EqualWithWitness) << w.reason;
    EXPECT_TRUE(replay_witness(*g, *w.witness, lg, target));
}

TEST(Orbits, ForwardInvariance) {
    struct Case {
        AlgebraPtr g;
        std::map<std::string, Scalar> lambda;
    };
    std::vector<Case> cases{
        {fixtures::h3(), {{"z", 1}}},
        {fixtures::h3(), {{"p", 1}}},
        {fixtures::superheis_hyp(), {{"z", 1}}},
        {fixtures::engineered22(), {{"z", 1}, {"a", 1}}},
        {fixtures::hc32(), {{"z", 1}}},
        {fixtures::nonsym32(), {{"z", 1}}},
    };
    std::mt19937_64 rng(2024);
    for (const auto& c : cases) {
        SCOPED_TRACE(c.g->name());
        Functional lambda = fixtures::functional(c.g, c.lambda);
        DixmierMorphism m = build_dixmier(c.g, lambda);
        Subspace base = kernel_slice(m, 3);
        for (int i = 0; i < 20; ++i) {
            Functional moved = coadjoint(*c.g, exp_ad(*c.g, random_even(*c.g, rng)), lambda);
            EXPECT_EQ(kernel_slice(build_dixmier(c.g, moved), 3), base);
        }
    }
}

TEST(Orbits, IdealInvariance) {
    auto h = fixtures::h3();
    DixmierMorphism m = build_dixmier(h, fixtures::functional(h, {{"z", 1}}));
    EXPECT_TRUE(ideal_invariance_check(m, identity_automorphism(*h)).ok);
    EXPECT_TRUE(ideal_invariance_check(m, exp_ad(*h, basis_of(h, "q"))).ok);
    auto e = fixtures::engineered22();
    DixmierMorphism me = build_dixmier(e, fixtures::functional(e, {{"z", 1}}));
    EXPECT_TRUE(ideal_invariance_check(me, exp_ad(*e, basis_of(e, "a"))).ok);
}

TEST(Orbits, StabilizerBound) {
    auto h = fixtures::h3();
    Functional lambda = fixtures::functional(h, {{"z", 1}});
    StabilizerBound b = stabilizer_bound(h, lambda, span_of(h, {"z", "q"}));
    EXPECT_EQ(b.bound.space(), span_of(h, {"z", "q"}).space());
    EXPECT_TRUE(b.invariance.ok) << b.invariance.message;

    StabilizerBound whole = stabilizer_bound(h, lambda, GradedSubspace::whole(h->parities()));
    EXPECT_EQ(whole.bound.dim(), 3U);
    EXPECT_TRUE(whole.invariance.ok);

    auto ab = fixtures::abelian();
    StabilizerBound ba = stabilizer_bound(ab, fixtures::functional(ab, {{"a", 1}}), span_of(ab, {"a"}));
    EXPECT_EQ(ba.bound.dim(), 3U);
    EXPECT_TRUE(ba.invariance.ok);

    auto g = fixtures::h5();
    StabilizerBound bg = stabilizer_bound(g, fixtures::functional(g, {{"z", 1}}), span_of(g, {"z", "q1"}));
    EXPECT_EQ(bg.bound.dim(), 4U);
    EXPECT_TRUE(bg.invariance.ok) << bg.invariance.message;
}
