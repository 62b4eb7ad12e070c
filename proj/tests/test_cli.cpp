#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "superdix/cli.hpp"
#include "superdix/io.hpp"

using namespace superdix;

namespace {

const std::filesystem::path kCatalogue = SUPERDIX_CATALOGUE_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string alg(const std::string& name) { return (kCatalogue / "algebras" / (name + ".json")).string(); }
std::string fun(const std::string& name) { return (kCatalogue / "functionals" / (name + ".json")).string(); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, Golden) {
    Json pairs = read_json_file(kCatalogue / "pairs.json");
    ASSERT_GE(pairs.size(), 8U);
    for (const auto& p : pairs) {
        std::string name = p.at("name").get<std::string>();
        std::string a = (kCatalogue / p.at("algebra").get<std::string>()).string();
        std::string f = (kCatalogue / p.at("functional").get<std::string>()).string();
        for (const char* cmd : {"dixmier", "polarize"}) {
            SCOPED_TRACE(name + " " + cmd);
            CliRun r = run({cmd, a, f, "--json"});
            EXPECT_EQ(r.code, 0) << r.err;
            EXPECT_EQ(r.out, slurp(kCatalogue / "golden" / (name + "." + cmd + ".json")));
        }
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"member", alg("h3"), fun("h3__z"), "--element", "z - 1"}).code, 0);
    EXPECT_EQ(run({"member", alg("h3"), fun("h3__z"), "--element", "q"}).code, 1);
    CliRun d = run({"orbit-eq", alg("h3"), fun("h3__z"), fun("h3__z2"), "--degree", "3", "--json"});
    EXPECT_EQ(d.code, 1);
    Json dj = parse_json_text(d.out);
    EXPECT_EQ(dj["verdict"], "distinct_with_separator");
    EXPECT_EQ(dj["separator"], "z - 1");
    EXPECT_EQ(run({"orbit-eq", alg("h3"), fun("h3__z"), fun("h3__z_p")}).code, 0);
    EXPECT_EQ(run({"validate", alg("nonsym32")}).code, 0);
    EXPECT_EQ(run({"split-max", alg("superheis_13"), fun("superheis_13__z")}).code, 0);
    EXPECT_EQ(run({"induce", alg("h3"), fun("h3__z"), "--degree", "2"}).code, 0);
    EXPECT_EQ(run({"selftest"}).code, 0);

    EXPECT_EQ(run({"dixmier", alg("missing"), fun("h3__z")}).code, 3);
    EXPECT_EQ(run({"dixmier", alg("h3"), fun("hc32__z")}).code, 3);
    EXPECT_EQ(run({"member", alg("h3"), fun("h3__z"), "--element", "w"}).code, 3);
    EXPECT_EQ(run({"member", alg("h3"), fun("h3__z")}).code, 3);
    EXPECT_EQ(run({"bogus"}).code, 3);
    EXPECT_EQ(run({"polarize", alg("h3"), fun("h3__z"), "--route", "sideways"}).code, 3);
}

TEST(Cli, ValidateReportsAxiom) {
    std::filesystem::path bad = std::filesystem::temp_directory_path() / "superdix_bad_algebra.json";
    std::ofstream(bad) << R"({"name": "bad", "generators": [{"id": "a", "parity": "even"},
        {"id": "b", "parity": "even"}, {"id": "c", "parity": "even"}],
        "brackets": [{"left": "a", "right": "b", "value": {"c": "1"}},
                     {"left": "c", "right": "a", "value": {"a": "1"}}]})";
    CliRun r = run({"validate", bad.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("Jacobi"), std::string::npos) << r.out;
    std::filesystem::remove(bad);
}

TEST(Cli, Reproducible) {
    std::vector<std::string> args{"orbit-eq", alg("heis53"), fun("heis53__z"), fun("heis53__z"), "--json",
                                  "--seed", "9"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> split{"split-max", alg("superheis_diag"), fun("superheis_diag__z"), "--json"};
    CliRun a = run(split), b = run(split);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
}
