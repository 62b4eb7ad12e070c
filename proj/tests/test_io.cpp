#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "superdix/io.hpp"

using namespace superdix;

namespace {

const std::filesystem::path kCatalogue = SUPERDIX_CATALOGUE_DIR;

AlgebraPtr algebra_text(const std::string& text) { return algebra_from_json(parse_json_text(text)); }

}  // namespace

TEST(Io, LoadsCatalogueAlgebras) {
    std::vector<AlgebraPtr> fx{fixtures::abelian(),        fixtures::h3(),           fixtures::h5(),
                               fixtures::odd11_zero(),     fixtures::odd11_clifford(), fixtures::superheis_hyp(),
                               fixtures::superheis_diag(), fixtures::superheis_13(), fixtures::engineered22(),
                               fixtures::hc32(),           fixtures::nonsym32(),     fixtures::heis53()};
    for (const auto& f : fx) {
        SCOPED_TRACE(f->name());
        AlgebraPtr g = load_algebra(kCatalogue / "algebras" / (f->name() + ".json"));
        EXPECT_EQ(algebra_to_json(*g).dump(), algebra_to_json(*f).dump());
    }
    EXPECT_EQ(load_algebra(kCatalogue / "algebras/h3.json")->sdim(), (SuperDim{3, 0}));
    EXPECT_EQ(load_algebra(kCatalogue / "algebras/odd11_clifford.json")->sdim(), (SuperDim{1, 1}));
}

TEST(Io, RoundTrip) {
    for (const auto& entry : std::filesystem::directory_iterator(kCatalogue / "algebras")) {
        std::string once = algebra_to_json(*load_algebra(entry.path())).dump(2);
        std::string twice = algebra_to_json(*algebra_text(once)).dump(2);
        EXPECT_EQ(once, twice) << entry.path();
    }
}

TEST(Io, SkewCompletion) {
    AlgebraPtr g = algebra_text(R"({"name": "h3r", "generators": [
        {"id": "z", "parity": "even"}, {"id": "q", "parity": "even"}, {"id": "p", "parity": "even"}],
        "brackets": [{"left": "p", "right": "q", "value": {"z": "-1"}}]})");
    EXPECT_EQ(g->bracket_basis(1, 2), (Vector{Scalar(1), Scalar(0), Scalar(0)}));
}

TEST(Io, Diagnostics) {
    try {
        (void)parse_json_text("{\"name\": \"x\",\n  \"generators\": [}");
        FAIL() << "no error";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_GT(e.column(), 1U);
    }
    // [a,b] = c and [c,a] = a give [b,[c,a]] = -c with the other two terms zero.
    try {
        (void)algebra_text(R"({"name": "bad", "generators": [
            {"id": "a", "parity": "even"}, {"id": "b", "parity": "even"}, {"id": "c", "parity": "even"}],
            "brackets": [{"left": "a", "right": "b", "value": {"c": "1"}},
                         {"left": "c", "right": "a", "value": {"a": "1"}}]})");
        FAIL() << "no error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("Jacobi"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)algebra_text(R"({"name": "d", "generators": [{"id": "a", "parity": "even"},
        {"id": "a", "parity": "odd"}]})"),
                 InputError);
    EXPECT_THROW((void)algebra_text(R"({"name": "u", "generators": [{"id": "a", "parity": "even"}],
        "brackets": [{"left": "a", "right": "b", "value": {}}]})"),
                 InputError);
    EXPECT_THROW((void)algebra_text(R"({"name": "s", "generators": [{"id": "a", "parity": "even"},
        {"id": "b", "parity": "even"}], "brackets": [{"left": "a", "right": "b", "value": {"a": "1"}},
        {"left": "b", "right": "a", "value": {"a": "1"}}]})"),
                 InputError);
    auto h = fixtures::h3();
    EXPECT_THROW((void)parse_element(h, "z + w"), InputError);
    EXPECT_THROW((void)parse_element(h, "z +"), InputError);
    EXPECT_THROW((void)parse_element(h, "q / p"), InputError);
    EXPECT_THROW((void)functional_from_json(*h, parse_json_text(R"({"values": {"w": "1"}})")), InputError);
    auto c = fixtures::odd11_clifford();
    EXPECT_THROW((void)functional_from_json(*c, parse_json_text(R"({"values": {"c": "1"}})")), InputError);
}

TEST(Io, Elements) {
    auto h = fixtures::h3();
    EXPECT_EQ(parse_element(h, "z - 1").to_string(), "z - 1");
    EXPECT_EQ(parse_element(h, "3/2*p^2*q - z"), parse_element(h, "3/2*q*p^2 - 3*p*z - z"));
    EXPECT_EQ(parse_element(h, "  q*p "), parse_element(h, "p*q + z"));
    EXPECT_EQ(parse_element(h, "(q + p)^2"), parse_element(h, "q^2 + 2*q*p + p^2 - z"));
    auto c = fixtures::odd11_clifford();
    EXPECT_EQ(parse_element(c, "c^2").to_string(), "1/2*z");
    EXPECT_EQ(parse_element(c, "sqrt(2)*c*c"), parse_element(c, "sqrt(2)/2*z"));
}

TEST(Io, Scalars) {
    EXPECT_EQ(parse_scalar("3/4"), Scalar::fraction(3, 4));
    EXPECT_EQ(parse_scalar("-(1/2)"), Scalar::fraction(-1, 2));
    Scalar r = parse_scalar("sqrt(2)");
    EXPECT_EQ(r * r, Scalar(2));
    Scalar nested = parse_scalar("sqrt(1 + sqrt(2))");
    EXPECT_EQ(nested * nested, Scalar(1) + r);
    for (const auto& text : {"1 + sqrt(2)", "-1/3*sqrt(2)", "sqrt(-1)", "(2 - sqrt(3))/5", "sqrt(1 + sqrt(2))"}) {
        Scalar v = parse_scalar(text);
        EXPECT_EQ(parse_scalar(v.to_string()), v) << text;
    }
}

TEST(Io, PrintParseFixpoint) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Scalar root = adjoin_sqrt(Scalar(3));
    for (const auto& g : {fixtures::h3(), fixtures::nonsym32(), fixtures::heis53()}) {
        auto mons = monomials_up_to(*g, 3);
        for (int trial = 0; trial < 20; ++trial) {
            PBWElement u(g);
            for (int t = 0; t < 4; ++t) {
                Scalar c = Scalar(coeff(rng)) + Scalar::fraction(coeff(rng), 3) * root;
                u += c * PBWElement::monomial(g, mons[rng() % mons.size()]);
            }
            std::string s = u.to_string();
            PBWElement back = parse_element(g, s);
            EXPECT_EQ(back, u) << s;
            EXPECT_EQ(back.to_string(), s);
        }
    }
}
