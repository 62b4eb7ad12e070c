#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "random_elements.hpp"
#include "superdix/linalg.hpp"

using namespace superdix;

namespace {

std::vector<AlgebraPtr> small_algebras() {
    return {fixtures::h3(),           fixtures::odd11_clifford(), fixtures::superheis_hyp(), fixtures::superheis_13(),
            fixtures::engineered22(), fixtures::hc32(),           fixtures::nonsym32()};
}

}  // namespace

TEST(Properties, TowerArithmetic) {
    std::vector<Scalar> gens{Scalar(1), adjoin_sqrt(Scalar(2)), adjoin_sqrt(Scalar(3))};
    gens.push_back(adjoin_sqrt(Scalar(1) + gens[1]));
    std::mt19937_64 rng(11);
    auto random_scalar = [&] {
        Scalar s(0);
        for (const auto& g : gens) s += randomized::small_scalar(rng) * g;
        return s;
    };
    for (int i = 0; i < 500; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a - a, Scalar(0));
        if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Scalar(1));
        if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
        auto r = try_sqrt(a * a);
        ASSERT_TRUE(r);
        ASSERT_EQ(*r * *r, a * a);
    }
}

TEST(Properties, PerpDimension) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t ne = 1 + rng() % 4, no = rng() % 4;
        std::vector<Parity> par(ne, Parity::Even);
        par.resize(ne + no, Parity::Odd);
        std::size_t n = ne + no;
        Matrix gram(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (par[i] != par[j]) continue;
                Scalar v(coeff(rng));
                if (par[i] == Parity::Even) {
                    if (i == j) continue;
                    gram(i, j) = v;
                    gram(j, i) = -v;
                } else {
                    gram(i, j) = v;
                    gram(j, i) = v;
                }
            }
        EvenBilinearForm form(par, gram, FormSymmetry::SuperAntisymmetric);
        std::vector<Vector> ws;
        for (std::size_t k = 0; k < 1 + rng() % n; ++k) {
            Parity p = par[rng() % n];
            Vector v = zero_vector(n);
            for (std::size_t i = 0; i < n; ++i)
                if (par[i] == p) v[i] = Scalar(coeff(rng));
            ws.push_back(v);
        }
        GradedSubspace w = GradedSubspace::span(par, ws);
        GradedSubspace wp = perp(form, w);
        GradedSubspace rad = form.radical();
        EXPECT_EQ(wp.dim(), n - w.dim() + w.intersect(rad).dim());
        EXPECT_TRUE(wp.contains(rad));
        EXPECT_EQ(perp(form, wp).space(), w.sum(rad).space());
    }
}

TEST(Properties, LinearAlgebra) {
    std::mt19937_64 rng(23);
    Scalar r2 = adjoin_sqrt(Scalar(2));
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() % 3) m(i, j) = randomized::small_scalar(rng) + ((rng() % 4) ? Scalar(0) : r2);
        auto ns = nullspace(m);
        EXPECT_EQ(rank(m) + ns.size(), cols);
        for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
        if (rows == cols && rank(m) == rows) EXPECT_EQ(m * inverse(m), Matrix::identity(rows));
    }
}

TEST(Properties, Associativity) {
    std::mt19937_64 rng(29);
    auto algs = small_algebras();
    for (int i = 0; i < 200; ++i) {
        const AlgebraPtr& g = algs[i % algs.size()];
        PBWElement u = randomized::homogeneous_element(g, 3, randomized::random_parity(*g, rng), rng);
        PBWElement v = randomized::homogeneous_element(g, 3, randomized::random_parity(*g, rng), rng);
        PBWElement w = randomized::homogeneous_element(g, 3, randomized::random_parity(*g, rng), rng);
        ASSERT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w))) << g->name();
    }
}

TEST(Properties, PrincipalAntiautomorphism) {
    std::mt19937_64 rng(31);
    for (const auto& g : small_algebras()) {
        for (int i = 0; i < 15; ++i) {
            PBWElement u = randomized::homogeneous_element(g, 3, randomized::random_parity(*g, rng), rng);
            PBWElement v = randomized::homogeneous_element(g, 3, randomized::random_parity(*g, rng), rng);
            Scalar sign(sign_of(*u.parity(), *v.parity()));
            EXPECT_EQ(alpha(multiply(u, v)), sign * multiply(alpha(v), alpha(u))) << g->name();
            EXPECT_EQ(alpha(alpha(u)), u);
            EXPECT_EQ(sigma(sigma(u)), u);
        }
        for (const auto& e : monomials_up_to(*g, 3)) {
            PBWElement m = PBWElement::monomial(g, e);
            EXPECT_EQ(alpha(alpha(m)), m);
        }
    }
}

TEST(Properties, AutoIdentity) {
    std::mt19937_64 rng(37);
    struct Setting {
        AlgebraPtr g;
        std::vector<std::string> ideal;
    };
    std::vector<Setting> settings{{fixtures::h3(), {"z", "q"}},
                                  {fixtures::engineered22(), {"z", "c2"}},
                                  {fixtures::nonsym32(), {"z", "q", "d"}},
                                  {fixtures::hc32(), {"z", "q", "p", "c1", "c2"}},
                                  {fixtures::superheis_13(), {"z", "c3"}}};
    for (const auto& s : settings) {
        const AlgebraPtr& g = s.g;
        std::vector<Vector> kb;
        for (const auto& l : s.ideal) kb.push_back(g->basis_vector(*g->index_of(l)));
        ASSERT_TRUE(is_ideal(*g, GradedSubspace::span(g->parities(), kb)));
        for (int trial = 0; trial < 12; ++trial) {
            std::size_t p = 1 + rng() % 2;
            std::vector<Vector> ys;
            std::vector<unsigned> ns;
            bool odd_power = false;
            for (std::size_t i = 0; i < p; ++i) {
                Parity par = randomized::random_parity(*g, rng);
                ys.push_back(randomized::homogeneous_vector(*g, par, rng));
                ns.push_back(rng() % 4);
                odd_power = odd_power || (par == Parity::Odd && ns.back() >= 2);
            }
            // z: a product of one or two ideal basis vectors.
            PBWElement z = PBWElement::from_vector(g, kb[rng() % kb.size()]);
            if (rng() & 1U) z = multiply(z, PBWElement::from_vector(g, kb[rng() % kb.size()]));
            if (!z.parity()) continue;
            EXPECT_TRUE(randomized::auto_identity(g, ys, ns, z, true)) << g->name() << " trial " << trial;
            if (!odd_power) EXPECT_TRUE(randomized::auto_identity(g, ys, ns, z)) << g->name() << " trial " << trial;
        }
    }
}

TEST(Properties, AutoIdentityOddSquare) {
    // z = y = c with [c,c] = z: z y^2 = 1/2 z c, while ordinary binomials add 2 y delta(y)(c) = -2 z c.
    auto g = fixtures::odd11_clifford();
    Vector c = g->basis_vector(1);
    PBWElement ce = PBWElement::from_vector(g, c);
    EXPECT_EQ(multiply(ce, power(ce, 2)).to_string(), "1/2*z*c");
    EXPECT_FALSE(randomized::auto_identity(g, {c}, {2}, ce));
    EXPECT_TRUE(randomized::auto_identity(g, {c}, {2}, ce, true));
}
