#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superdix/polarization.hpp"

using namespace superdix;

namespace {

GradedSubspace span_of(const AlgebraPtr& g, std::vector<std::string> labels) {
    std::vector<Vector> vs;
    for (const auto& l : labels) vs.push_back(g->basis_vector(*g->index_of(l)));
    return GradedSubspace::span(g->parities(), vs);
}

}  // namespace

TEST(LambdaForm, Kernels) {
    auto g = fixtures::h3();
    auto lf = lambda_form(*g, fixtures::functional(g, {{"z", 1}}));
    EXPECT_EQ(lf.kernel, span_of(g, {"z"}));
    auto c = fixtures::odd11_clifford();
    EXPECT_EQ(lambda_form(*c, fixtures::functional(c, {{"z", 1}})).kernel, span_of(c, {"z"}));
    EXPECT_EQ(lambda_form(*g, Functional::zero(*g)).kernel, GradedSubspace::whole(g->parities()));
}

TEST(MaxIsotropic, HyperbolicAndDiagonal) {
    std::vector<Parity> odd2{Parity::Odd, Parity::Odd};
    Matrix anti(2, 2);
    anti(0, 1) = 1;
    anti(1, 0) = 1;
    EvenBilinearForm hyp(odd2, anti, FormSymmetry::SuperAntisymmetric);
    auto whole = GradedSubspace::whole(odd2);
    EXPECT_EQ(max_isotropic_submodule(hyp, whole, {}, GradedSubspace::zero(odd2)),
              GradedSubspace::span(odd2, {unit_vector(2, 0)}));
    EvenBilinearForm diag(odd2, Matrix::identity(2), FormSymmetry::SuperAntisymmetric);
    auto w = max_isotropic_submodule(diag, whole, {}, GradedSubspace::zero(odd2));
    ASSERT_EQ(w.dim(), 1U);
    Scalar i = adjoin_sqrt(Scalar(-1));
    EXPECT_TRUE(w.contains(Vector{Scalar(1), i}));
}

TEST(Polarize, Examples) {
    auto g = fixtures::h3();
    auto lam = fixtures::functional(g, {{"z", 1}});
    EXPECT_EQ(polarize_even(*g, lam), span_of(g, {"z", "q"}));
    EXPECT_EQ(polarize_even(*g, lam, FlagOrder::Reversed), span_of(g, {"z", "p"}));
    auto h5 = fixtures::h5();
    EXPECT_EQ(polarize_even(*h5, fixtures::functional(h5, {{"z", 1}})).dim(), 3U);
    auto c = fixtures::odd11_clifford();
    EXPECT_EQ(polarize(*c, fixtures::functional(c, {{"z", 1}})).h, span_of(c, {"z"}));
    auto s = fixtures::superheis_hyp();
    EXPECT_EQ(polarize(*s, fixtures::functional(s, {{"z", 1}})).h, span_of(s, {"z", "c1"}));
}

TEST(Polarize, CatalogueInvariants) {
    std::vector<std::pair<AlgebraPtr, std::map<std::string, Scalar>>> cases{
        {fixtures::abelian(), {{"a", 1}, {"b", 2}}},
        {fixtures::h3(), {{"z", 1}}},
        {fixtures::h3(), {{"z", 1}, {"p", 1}}},
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
    for (const auto& [g, vals] : cases) {
        auto lam = fixtures::functional(g, vals);
        auto p = polarize(*g, lam);
        EXPECT_EQ(check_polarization(*g, lam, p.h), "") << g->name();
        auto r = polarize_recursive(*g, lam);
        EXPECT_EQ(r.h.sdim(), p.h.sdim()) << g->name();
    }
}

TEST(InvariantPolarize, ContainsBellMussonIdeal) {
    auto g = fixtures::h3();
    auto lam = fixtures::functional(g, {{"z", 1}});
    auto a = span_of(g, {"z", "q"});
    auto ip = invariant_polarize(*g, GradedSubspace::whole(g->parities()), lam);
    EXPECT_TRUE(ip.invariant);
    EXPECT_EQ(ip.h.dim(), 2U);
    EXPECT_TRUE(ip.h.contains(a));
    auto ab = fixtures::abelian();
    auto ipa = invariant_polarize(*ab, GradedSubspace::whole(ab->parities()), fixtures::functional(ab, {{"a", 3}}));
    EXPECT_EQ(ipa.h, GradedSubspace::whole(ab->parities()));
}
