#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iwasawa/class_data.hpp"
#include "iwasawa/cli.hpp"
#include "iwasawa/report.hpp"

using namespace iwasawa;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "iwasawa");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(std::string const & name, std::string const & body)
{
    auto path = testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

std::string const record_head = R"({"p": 3, "s": 2, "flags": {"single_ramified_prime": true,
    "totally_ramified": true, "p_nmid_class_number_k0": true}, )";

} // namespace

TEST(Cli, Chevalley)
{
    auto r = run({"chevalley", "--h", "1", "--deg", "2", "--ram", "2", "--unit-index", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    r = run({"chevalley", "--h", "1", "--deg", "3", "--ram", "3,3", "--unit-index", "3"});
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(run({"chevalley", "--h", "1", "--deg", "3", "--ram", "3", "--unit-index", "3"}).code, 1);
    EXPECT_EQ(run({"chevalley", "--h", "1", "--deg", "4", "--ram", "3", "--unit-index", "1"}).code, 2);
}

TEST(Cli, Quotient)
{
    auto r = run({"quotient", "--p", "3", "--summands", "p^1", "--level", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
    r = run({"quotient", "--p", "3", "--summands", "f:T^2+3*T+3", "--level", "2"});
    EXPECT_EQ(r.out, "infinite\n");
    r = run({"quotient", "--p", "2", "--summands", "f:T^2+2*T+4,p^1", "--level", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run({"quotient", "--p", "3", "--summands", "f:T^2+T+3", "--level", "1"}).code, 2);
    EXPECT_EQ(run({"quotient", "--p", "3", "--summands", "g:T", "--level", "1"}).code, 2);
}

TEST(Cli, Ramify)
{
    auto r = run({"ramify", "--p", "3", "--d", "22"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d=22 p=3 totally_ramified v3_disc_K1=37 v3_disc_K0=7\n");
    r = run({"ramify", "--p", "2", "--d", "21"});
    EXPECT_EQ(r.out, "d=21 p=2 totally_ramified single_prime_above_2=true\n");
    EXPECT_EQ(run({"ramify", "--p", "3", "--d", "9"}).code, 2);
    EXPECT_EQ(run({"ramify", "--p", "5", "--d", "7"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"deduce"}).code, 2);
    EXPECT_EQ(run({"deduce", "--fixtures", IWASAWA_FIXTURES, "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FixtureErrors)
{
    auto missing = run({"deduce", "--fixtures", "/nonexistent.json"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("/nonexistent.json"), std::string::npos);

    auto bad = write_temp("bad_order.json", "[" + record_head + R"("label": "x", "levels": [[3,1],[9]]}])");
    EXPECT_EQ(run({"deduce", "--fixtures", bad}).code, 1);

    auto bad_key = write_temp("bad_key.json", "[" + record_head + R"("label": "x", "levels": [[3]], "zz": 0}])");
    auto r = run({"report", "--fixtures", bad_key});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("zz"), std::string::npos);
}

TEST(Cli, DeduceJsonIsSortedAndStable)
{
    auto a = run({"deduce", "--fixtures", IWASAWA_FIXTURES, "--label", "d=1870", "--format", "json"});
    auto b = run({"deduce", "--fixtures", IWASAWA_FIXTURES, "--label", "d=1870", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    ASSERT_EQ(doc.size(), 1u);
    auto const & rec = doc[0];
    EXPECT_EQ(rec["mu"], 3);
    EXPECT_EQ(rec["lambda"], 0);
    EXPECT_EQ(rec["nu"]["min"], 4);
    std::vector<std::string> keys;
    for (auto it = rec.begin(); it != rec.end(); ++it)
        keys.push_back(it.key());
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    // Round trip through the parser leaves the bytes unchanged.
    EXPECT_EQ(doc.dump(2) + "\n", a.out);
}

TEST(Cli, DeduceText)
{
    auto r = run({"deduce", "--fixtures", IWASAWA_FIXTURES, "--label", "d=22"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("μ=1 λ=0 ν=1"), std::string::npos);
    EXPECT_NE(r.out.find("R6"), std::string::npos);
    EXPECT_EQ(run({"deduce", "--fixtures", IWASAWA_FIXTURES, "--label", "no-such"}).code, 1);
}

TEST(Cli, InconsistentFixture)
{
    auto path = write_temp("inconsistent.json", "[" + record_head + R"("label": "x", "levels": [[9],[9]]}])");
    auto r = run({"deduce", "--fixtures", path});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, ContradictionExitCode)
{
    auto path = write_temp("contra.json", "[" + record_head +
                                              R"("label": "x", "levels": [[9],[9,9]],
                                              "expected": {"mu": 1, "lambda": 0, "nu": 5}}])");
    auto r = run({"report", "--fixtures", path});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("CONTRADICTED"), std::string::npos);
}

TEST(Report, Statuses)
{
    auto recs = load_fixtures(std::string_view("[" + record_head + R"("label": "x", "levels": [[9],[9,9]],
        "expected": {"mu": 1, "lambda": 0, "nu": {"min": 0, "max": 9}}}])"));
    auto r = deduce(recs[0]);
    EXPECT_EQ(compare(recs[0], r), Status::ok);
    recs[0].expected->nu = ExpectedValue::bounds(3, std::nullopt);
    EXPECT_EQ(compare(recs[0], r), Status::mismatch);
    recs[0].expected->nu = ExpectedValue::exact(3);
    EXPECT_EQ(compare(recs[0], r), Status::contradicted);
    recs[0].expected.reset();
    EXPECT_EQ(compare(recs[0], r), Status::not_applicable);
    EXPECT_EQ(render_invariants(r), "μ=1 λ=0 ν=1");
}

TEST(Report, ShippedReport)
{
    auto recs = load_fixture_file(IWASAWA_FIXTURES);
    auto rep = build_report(recs);
    EXPECT_FALSE(rep.contradicted);
    EXPECT_FALSE(rep.errors);
    EXPECT_NE(rep.text.find("d=110 | 3 | 3 | [4,8] | μ=2 λ=0 ν=2 | OK"), std::string::npos);
    EXPECT_EQ(rep.text, build_report(recs).text);
}
