#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "hsym/hopf.hpp"
#include "hsym/io.hpp"
#include "hsym/ppartitions.hpp"

using namespace hsym;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return CliRun{code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, HSymProductAtMinusOne) {
    const CliRun r = run({"product", "--algebra", "hsym", "--lambda", "-1", "1,-2", "2,-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto got = lincomb_from_json<SignedPermutation>(json::parse(r.out));
    EXPECT_EQ(got, shifted_quasi_shuffle(test::perm("1,-2"), test::perm("2,-1"), Rational(-1)));
    EXPECT_EQ(got.size(), 8u);
}

TEST(Cli, LambdaDefaultsToMinusOne) {
    EXPECT_EQ(run({"product", "--algebra", "hsym", "1,-2", "2,-1"}).out,
              run({"product", "--algebra", "hsym", "--lambda", "-1", "1,-2", "2,-1"}).out);
}

TEST(Cli, Phi2OfSignedPermutation) {
    const CliRun r = run({"map", "--which", "phi2", "-3,1,2,-4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"terms":[{"coeff":"-1","key":"1,2"}]})"));
}

TEST(Cli, TextFormat) {
    const CliRun r = run({"--format", "text", "product", "--algebra", "rqsym-f", "1,e", "1,e"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "−1·F[2,e] − 1·F[1,1,e] + 2·F[2,e,e] + 2·F[1,e,1,e] + 2·F[1,1,e,e]\n");
}

TEST(Cli, CoproductAndAntipode) {
    CliRun r = run({"coproduct", "--algebra", "ssym", "1,3,2,4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(tensor_from_json<SignedPermutation>(json::parse(r.out)), hsym_coproduct(test::perm("1,3,2,4")));
    r = run({"antipode", "--algebra", "rqsym-m", "e"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"terms":[{"coeff":"-1","key":"e"}]})"));
}

TEST(Cli, ConvertRoundTrip) {
    const CliRun r = run({"convert", "--from", "f", "--to", "m", "2,e"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto m = lincomb_from_json<RegularizedComposition>(json::parse(r.out));
    EXPECT_EQ(m_to_f(m), test::comps({{"2,e", 1}}));
}

TEST(Cli, GammaOfPosetFile) {
    const std::string path = temp_file("hsym_fig2.poset", "-4 < 2\n2 < -1\n2 < -3\n");
    const CliRun r = run({"gamma", "--poset", path, "--vars", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(lincomb_from_json<RegularizedComposition>(j["F"]), test::comps({{"e,1,e,e", 2}, {"e,1,e", -1}}));
    EXPECT_EQ(j["linear_extensions"], json::parse(R"(["-4,2,-3,-1","-4,2,-1,-3"])"));
}

TEST(Cli, Expand) {
    const CliRun r = run({"--format", "text", "expand", "--basis", "m", "--vars", "2", "1,e"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1·x1 x2^e\n");
}

TEST(Cli, VerifySquare) {
    const CliRun r = run({"--format", "text", "verify", "--suite", "square", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("0 mismatches / 59 checks"), std::string::npos) << r.out;
}

TEST(Cli, VerifyHopfNeedsLambda) {
    EXPECT_EQ(run({"verify", "--suite", "hopf", "--max-degree", "2"}).code, 2);
    const CliRun r = run({"verify", "--suite", "hopf", "--max-degree", "2", "--lambda", "-1", "--lambda", "1/2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["summary"]["mismatches"], 0);
}

TEST(Cli, OutputIndependentOfJobs) {
    const std::vector<std::string> base{"verify", "--suite", "morphisms", "--max-degree", "2"};
    auto with_jobs = base;
    with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
    EXPECT_EQ(run(base).out, run(with_jobs).out);
}

TEST(Cli, ParseErrorsExitTwo) {
    CliRun r = run({"product", "--algebra", "hsym", "1,1", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("position"), std::string::npos) << r.err;
    EXPECT_EQ(run({"product", "--algebra", "nope", "1", "1"}).code, 2);
    EXPECT_EQ(run({"product", "--algebra", "hsym", "--bogus", "1", "1"}).code, 2);
    EXPECT_EQ(run({"map", "--which", "d1", "1,-2"}).code, 2);
    EXPECT_EQ(run({"product", "--algebra", "qsym", "1,e", "1"}).code, 2);
    EXPECT_EQ(run({"gamma", "--poset", "/nonexistent/file", "--vars", "2"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}
