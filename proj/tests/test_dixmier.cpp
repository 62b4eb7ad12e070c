#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superdix/dixmier.hpp"
#include "superdix/polarization.hpp"

using namespace superdix;

namespace {

PBWElement gen(const AlgebraPtr& g, const std::string& s) { return PBWElement::generator(g, *g->index_of(s)); }
PBWElement one(const AlgebraPtr& g) { return PBWElement::constant(g, Scalar(1)); }

struct Case {
    AlgebraPtr g;
    std::map<std::string, Scalar> lambda;
};

std::vector<Case> catalogue() {
    return {
        {fixtures::abelian(), {{"a", 1}, {"b", 2}}},
        {fixtures::h3(), {{"z", 1}}},
        {fixtures::h3(), {{"z", 1}, {"p", 1}}},
        {fixtures::h3(), {}},
        {fixtures::h5(), {{"z", 1}}},
        {fixtures::odd11_zero(), {{"z", 1}}},
        {fixtures::odd11_clifford(), {{"z", 1}}},
        {fixtures::superheis_hyp(), {{"z", 1}}},
        {fixtures::superheis_diag(), {{"z", 1}}},
        {fixtures::superheis_13(), {{"z", 1}}},
        {fixtures::engineered22(), {{"z", 1}, {"a", 1}}},
        {fixtures::hc32(), {{"z", 1}}},
        {fixtures::nonsym32(), {{"z", 1}}},
        {fixtures::nonsym32(), {{"z", 1}, {"q", 1}}},
        {fixtures::heis53(), {{"z", 1}}},
    };
}

}  // namespace

TEST(Dixmier, Examples) {
    auto ab = fixtures::abelian();
    auto m0 = build_dixmier(ab, fixtures::functional(ab, {{"a", 1}}));
    EXPECT_EQ(m0.p(), 0U);
    EXPECT_EQ(m0.q(), 0U);

    auto c = fixtures::odd11_clifford();
    auto mc = build_dixmier(c, fixtures::functional(c, {{"z", 1}}));
    EXPECT_EQ(mc.p(), 0U);
    EXPECT_EQ(mc.q(), 1U);
    EXPECT_EQ(mc.generator_images()[1].to_string(), "g");
    EXPECT_TRUE(member(mc, gen(c, "c") * gen(c, "c") - Scalar::fraction(1, 2) * one(c)));

    auto h = fixtures::h3();
    auto mh = build_dixmier(h, fixtures::functional(h, {{"z", 1}}));
    EXPECT_EQ(mh.p(), 1U);
    EXPECT_EQ(mh.q(), 0U);
    EXPECT_TRUE(member(mh, gen(h, "z") - one(h)));
    EXPECT_FALSE(member(mh, gen(h, "q")));

    auto s = fixtures::superheis_hyp();
    auto ms = build_dixmier(s, fixtures::functional(s, {{"z", 1}}));
    EXPECT_EQ(ms.p(), 0U);
    EXPECT_EQ(ms.q(), 2U);
}

TEST(Dixmier, CatalogueFormulaAndRelations) {
    for (const auto& cs : catalogue()) {
        auto lam = fixtures::functional(cs.g, cs.lambda);
        auto m = build_dixmier(cs.g, lam);
        auto lf = lambda_form(*cs.g, lam);
        auto sd = cs.g->sdim();
        auto kd = lf.kernel.sdim();
        EXPECT_EQ(2 * m.p(), sd.even - kd.even) << cs.g->name();
        EXPECT_EQ(m.q(), sd.odd - kd.odd) << cs.g->name();
        auto rep = validate_step_images(m);
        EXPECT_TRUE(rep.ok) << cs.g->name() << ": " << rep.message;
    }
}

TEST(Dixmier, SplitMaximal) {
    auto c = fixtures::odd11_clifford();
    auto m = build_dixmier(c, fixtures::functional(c, {{"z", 1}}));
    auto s = split_maximal(m);
    ASSERT_FALSE(s.already_maximal);
    Scalar r = adjoin_sqrt(Scalar(2)).inverse();
    auto u = gen(c, "c") - r * one(c);
    EXPECT_TRUE(member_plus(m, s, u));
    EXPECT_FALSE(member_minus(m, s, u));
    for (const auto& cs : catalogue()) {
        auto mm = build_dixmier(cs.g, fixtures::functional(cs.g, cs.lambda));
        auto chk = check_split(mm);
        EXPECT_TRUE(chk.supercenter.ok) << cs.g->name() << chk.supercenter.message;
        EXPECT_TRUE(chk.clifford_full.ok) << cs.g->name() << chk.clifford_full.message;
        EXPECT_EQ(chk.applicable, mm.q() % 2 == 1);
        EXPECT_TRUE(chk.sigma_swaps.ok) << cs.g->name();
        EXPECT_TRUE(chk.contain_kernel.ok) << cs.g->name();
        EXPECT_TRUE(chk.intersection.ok) << cs.g->name();
        EXPECT_TRUE(chk.left_ideal_route.ok) << cs.g->name() << ": " << chk.left_ideal_route.message;
    }
}

TEST(Dixmier, EvenPart) {
    for (const auto& cs : catalogue()) {
        auto m = build_dixmier(cs.g, fixtures::functional(cs.g, cs.lambda));
        auto m0 = build_even_part(m);
        auto rep = even_part_ideal_check(m, m0);
        EXPECT_TRUE(rep.ok) << cs.g->name() << ": " << rep.message;
    }
}
