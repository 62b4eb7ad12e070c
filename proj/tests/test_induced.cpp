#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superdix/induced.hpp"
#include "superdix/polarization.hpp"

using namespace superdix;

namespace {

PBWElement gen(const AlgebraPtr& g, const std::string& s) { return PBWElement::generator(g, *g->index_of(s)); }

GradedSubspace span_of(const AlgebraPtr& g, const std::vector<std::string>& labels) {
    std::vector<Vector> vs;
    for (const auto& l : labels) vs.push_back(g->basis_vector(*g->index_of(l)));
    return GradedSubspace::span(g->parities(), vs);
}

// p^n in the truncation of h3 induced from span(z, q); p is the first re-based generator.
PBWElement p_power(const InducedTruncation& v, unsigned short n) { return v.basis_vector({n, 0, 0}); }

}  // namespace

TEST(Induced, DerivativeAction) {
    auto h = fixtures::h3();
    InducedTruncation v(h, span_of(h, {"z", "q"}), fixtures::functional(h, {{"z", 1}}), 6);
    EXPECT_EQ(v.basis(3).size(), 4U);
    for (unsigned short n = 1; n <= 5; ++n)
        EXPECT_EQ(v.act(gen(h, "q"), p_power(v, n)), Scalar(n) * p_power(v, n - 1));
    EXPECT_EQ(v.act(gen(h, "z"), p_power(v, 3)), p_power(v, 3));
    EXPECT_EQ(v.act(gen(h, "p"), p_power(v, 2)), p_power(v, 3));
    EXPECT_THROW((void)v.act(gen(h, "p"), p_power(v, 6)), TruncationOverflow);
}

TEST(Induced, AnnihilatorOfHeisenberg) {
    auto h = fixtures::h3();
    InducedTruncation v(h, span_of(h, {"z", "q"}), fixtures::functional(h, {{"z", 1}}), 5);
    Subspace s = v.annihilator_truncated(1);
    ASSERT_EQ(s.dim(), 1U);
    auto mons = monomials_up_to(*h, 1);
    PBWElement u = element_from_coordinates(h, mons, s.basis().front());
    EXPECT_TRUE(u.to_string() == "z - 1" || u.to_string() == "-z + 1") << u.to_string();
}

TEST(Induced, AnnihilatorMatchesKernel) {
    struct Case {
        AlgebraPtr g;
        std::map<std::string, Scalar> lambda;
        unsigned n;
    };
    std::vector<Case> cases{
        {fixtures::h3(), {{"z", 1}}, 2},
        {fixtures::h3(), {{"z", 1}, {"p", 1}}, 2},
        {fixtures::h5(), {{"z", 1}}, 1},
        {fixtures::odd11_clifford(), {{"z", 1}}, 2},
        {fixtures::superheis_hyp(), {{"z", 1}}, 2},
        {fixtures::superheis_diag(), {{"z", 1}}, 2},
        {fixtures::engineered22(), {{"z", 1}, {"a", 1}}, 2},
        {fixtures::nonsym32(), {{"z", 1}}, 1},
    };
    for (const auto& c : cases) {
        SCOPED_TRACE(c.g->name());
        Functional lambda = fixtures::functional(c.g, c.lambda);
        Polarization pol = polarize(*c.g, lambda);
        Stabilization st = stabilized_annihilator(c.g, pol.h, lambda, c.n, c.n + 6);
        EXPECT_TRUE(st.stabilized);
        EXPECT_EQ(st.slice, kernel_slice(build_dixmier(c.g, lambda), c.n));
    }
}

TEST(Induced, PolarizationIndependence) {
    auto h = fixtures::h5();
    Functional lambda = fixtures::functional(h, {{"z", 1}});
    GradedSubspace a = polarize_even(*h, lambda, FlagOrder::BasisOrder);
    GradedSubspace b = polarize_even(*h, lambda, FlagOrder::Reversed);
    GradedSubspace c = span_of(h, {"z", "p1", "p2"});
    auto sa = stabilized_annihilator(h, a, lambda, 2, 6);
    auto sb = stabilized_annihilator(h, b, lambda, 2, 6);
    auto sc = stabilized_annihilator(h, c, lambda, 2, 6);
    EXPECT_EQ(sa.slice, sb.slice);
    EXPECT_EQ(sa.slice, sc.slice);
}

TEST(Induced, Descent) {
    auto h = fixtures::h3();
    InducedTruncation v(h, span_of(h, {"z", "q"}), fixtures::functional(h, {{"z", 1}}), 6);
    DescentResult r = descend(v, p_power(v, 2), span_of(h, {"z", "q"}), 2);
    ASSERT_TRUE(r.found) << r.message;
    EXPECT_EQ(r.degree, 1U);
    EXPECT_LT(r.image->degree(), 2U);
    EXPECT_FALSE(r.image->is_zero());
    EXPECT_EQ(v.act(*r.witness, p_power(v, 2)), *r.image);

    DescentResult none = descend(v, p_power(v, 2), span_of(h, {"z"}), 3);
    EXPECT_FALSE(none.found);
    EXPECT_THROW((void)descend(v, v.generator_vector(), span_of(h, {"z"}), 1), std::invalid_argument);
}

TEST(Induced, IdealComponentDecomposition) {
    auto h = fixtures::h3();
    InducedTruncation v(h, span_of(h, {"z", "q"}), fixtures::functional(h, {{"z", 1}}), 4);
    EXPECT_TRUE(ideal_component_decomposition_check(v, span_of(h, {"z"})).ok);
    CheckReport bad = ideal_component_decomposition_check(v, span_of(h, {"z", "q"}));
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.message.empty());

    auto s = fixtures::superheis_hyp();
    Functional ls = fixtures::functional(s, {{"z", 1}});
    InducedTruncation vs(s, span_of(s, {"z", "c1"}), ls, 3);
    EXPECT_TRUE(ideal_component_decomposition_check(vs, span_of(s, {"z"})).ok);
}
