#include <weyl_e8/cli.hpp>
#include <weyl_e8/identities.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace weyl_e8;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Table2MatchesCatalogCsv) {
    const Result r = run({"table2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, catalog_table().to_csv());
    EXPECT_NE(r.out.find("Tot.,60,68,38,17,8,2,1,194"), std::string::npos);
}

TEST(Cli, BasisExample) {
    const Result r = run({"basis", "--weight", "4", "--index", "1", "--json", "-"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dimension 1"), std::string::npos);
    const auto pos = r.out.find('{');
    ASSERT_NE(pos, std::string::npos);
    const auto j = nlohmann::json::parse(r.out.substr(pos));
    EXPECT_EQ(j.at("dimension"), 1);
    EXPECT_FALSE(j.contains("seconds"));
}

TEST(Cli, VerifyIdentitiesPasses) {
    const Result r = run({"verify", "--suite", "identities", "--seed", "5"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS identities"), std::string::npos);
    EXPECT_NE(r.out.find("seed 5"), std::string::npos);
}

TEST(Cli, VerifyNumericFailsWithTinyTolerance) {
    EXPECT_EQ(run({"verify", "--suite", "numeric"}).code, 0);
    const Result r = run({"verify", "--suite", "numeric", "--tol", "1e-30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL numeric"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwoWithFlagTable) {
    for (const auto& args : std::vector<std::vector<std::string>>{{},
                                                                 {"bogus"},
                                                                 {"table2", "--unknown"},
                                                                 {"basis", "--weight", "4"},
                                                                 {"verify", "--suite", "nope"},
                                                                 {"eval", "--tau", "0,-1"},
                                                                 {"eval", "--z", "1,2"},
                                                                 {"eval", "Q7"}}) {
        const Result r = run(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
        EXPECT_NE(r.err.find("--json"), std::string::npos);
    }
}

TEST(Cli, DeterministicJson) {
    const std::vector<std::string> args{"verify", "--suite", "numeric", "--seed", "11", "--json", "-"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> lb{"lb-table", "--max-index", "6", "--json", "-"};
    const Result a = run(lb), b = run(lb);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("m,0,1,2,3,4,5,6\nd_lb,0,0,0,0,1,0,2\n"), std::string::npos);
}

TEST(Cli, EvalForms) {
    const Result r = run({"eval", "A1", "E4", "--tau", "0,1.2", "--z", "0,0,0,0,0,0,0,0", "--json", "-"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    const auto a1 = j.at("values").at("A1"), e4 = j.at("values").at("E4");
    EXPECT_NEAR(a1[0].get<double>(), e4[0].get<double>(), 1e-12);
}

TEST(Cli, GeneratorsFilter) {
    const Result r = run({"generators", "--index", "45"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
    EXPECT_EQ(r.out.rfind("G(0,15,45,0) = ", 0), 0u);
}

TEST(Cli, ParseComplex) {
    EXPECT_EQ(cli::parse_complex("0.07i"), Complex(0, 0.07));
    EXPECT_EQ(cli::parse_complex("-i"), Complex(0, -1));
    EXPECT_EQ(cli::parse_complex("0.5-2i"), Complex(0.5, -2));
    EXPECT_EQ(cli::parse_complex("1e-3+2e-2i"), Complex(1e-3, 2e-2));
    EXPECT_EQ(cli::parse_complex("3"), Complex(3, 0));
    EXPECT_THROW(cli::parse_complex("x"), cli::UsageError);
}

TEST(DataFiles, IdentityTablesMatchChecksumAndSource) {
    std::ifstream in(WEYL_E8_DATA_DIR "/identity_tables.json");
    ASSERT_TRUE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    EXPECT_TRUE(identity_tables_consistent(doc));
    nlohmann::json tampered = doc;
    tampered["tables"]["forms_in_ab"]["A1"]["terms"][0]["c"] = "7";
    EXPECT_FALSE(identity_tables_consistent(tampered));
}
