#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superdix/pbw.hpp"

using namespace superdix;

namespace {

PBWElement gen(const AlgebraPtr& g, const std::string& s) { return PBWElement::generator(g, *g->index_of(s)); }

}  // namespace

TEST(Scalar, PerfectSquaresStayRational) {
    auto r = adjoin_sqrt(Scalar::fraction(9, 4));
    EXPECT_EQ(r, Scalar::fraction(3, 2));
}

TEST(Scalar, SqrtTwoSquares) {
    auto r = adjoin_sqrt(Scalar(2));
    EXPECT_FALSE(r.is_rational());
    EXPECT_EQ(r * r, Scalar(2));
    EXPECT_EQ(r.to_string(), "sqrt(2)");
    auto i = adjoin_sqrt(Scalar(-1));
    EXPECT_EQ(i * i, Scalar(-1));
    EXPECT_EQ((r * i) * (r * i), Scalar(-2));
    EXPECT_EQ(adjoin_sqrt(Scalar(8)), Scalar(2) * r);
    EXPECT_EQ((Scalar(1) + r).inverse() * (Scalar(1) + r), Scalar(1));
}

TEST(Scalar, NestedSquareDetected) {
    auto r = adjoin_sqrt(Scalar(2));
    Scalar x = Scalar(3) + Scalar(2) * r;  // (1 + sqrt 2)^2
    auto before = Tower::global().size();
    auto s = adjoin_sqrt(x);
    EXPECT_EQ(s * s, x);
    EXPECT_EQ(Tower::global().size(), before);
}

TEST(Algebra, Validation) {
    EXPECT_TRUE(validate(*fixtures::h3()).ok);
    EXPECT_TRUE(validate(*fixtures::nonsym32()).ok) << validate(*fixtures::nonsym32()).message;
    EXPECT_TRUE(validate(*fixtures::engineered22()).ok);
    EXPECT_TRUE(validate(*fixtures::heis53()).ok);
    EXPECT_TRUE(is_nilpotent(*fixtures::nonsym32()));
    EXPECT_TRUE(is_nilpotent(*fixtures::engineered22()));
}

TEST(Pbw, StraighteningInH3) {
    auto g = fixtures::h3();
    auto pq = gen(g, "p") * gen(g, "q");
    EXPECT_EQ(pq.to_string(), "q*p - z");
    EXPECT_EQ(alpha(gen(g, "q") * gen(g, "p")), pq);
}

TEST(Pbw, OddSquare) {
    auto g = fixtures::odd11_clifford();
    auto c = gen(g, "c");
    EXPECT_EQ((c * c).to_string(), "1/2*z");
}

TEST(Pbw, ReduceModLeftIdeal) {
    auto g = fixtures::h3();
    auto h = GradedSubspace::span(g->parities(), {g->basis_vector(0), g->basis_vector(1)});
    auto lam = fixtures::functional(g, {{"z", 1}});
    // q p = p q + z with q, z - 1 in the left ideal
    EXPECT_EQ(reduce_mod_left_ideal(gen(g, "q") * gen(g, "p"), h, lam).to_string(), "1");
    EXPECT_TRUE(reduce_mod_left_ideal(gen(g, "p") * gen(g, "q"), h, lam).is_zero());
    EXPECT_EQ(reduce_mod_left_ideal(gen(g, "p") * gen(g, "p"), h, lam).to_string(), "p^2");
}
