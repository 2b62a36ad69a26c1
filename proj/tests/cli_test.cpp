#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "reprange_cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "reprange");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = reprange::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using nlohmann::json;

} // namespace

TEST(CliGolden, Analyze4312) {
    const auto r = run({"analyze", "4312"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(GOLDEN_DIR "/analyze_4312.txt"));
}

TEST(CliGolden, Analyze5273416) {
    const auto r = run({"analyze", "5273416"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(GOLDEN_DIR "/analyze_5273416.txt"));
}

TEST(CliAnalyze, JsonRowsAndRoundTrip) {
    const auto r = run({"analyze", "4312", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    EXPECT_EQ(j["permutation"], "4312");
    EXPECT_EQ(j["n"], 4);
    ASSERT_EQ(j["rows"].size(), 3u);
    const int expected[3][2] = {{1, 2}, {2, 3}, {1, 2}};
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(j["rows"][i]["k"], i + 1);
        EXPECT_EQ(j["rows"][i]["min"], expected[i][0]);
        EXPECT_EQ(j["rows"][i]["max"], expected[i][1]);
    }
    EXPECT_EQ(j["rows"][0]["pos_pairs"], json::parse("[[1,3],[1,4]]"));
    EXPECT_EQ(j["rows"][0]["val_pairs"], json::parse("[[4,1]]"));
    EXPECT_EQ(j["rows"][0]["bound"], 2);
    EXPECT_EQ(j["patterns"]["p3412"].size(), 0u);
    EXPECT_EQ(j["patterns"]["p321"].size(), 2u);
}

TEST(CliAnalyze, WorkedExamplePairCounts) {
    const auto j = json::parse(run({"analyze", "5273416", "--format", "json"}).out);
    const std::size_t pos[] = {1, 1, 3, 2, 2, 0};
    const std::size_t val[] = {2, 2, 2, 3, 1, 1};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(j["rows"][i]["pos_pairs"].size(), pos[i]);
        EXPECT_EQ(j["rows"][i]["val_pairs"].size(), val[i]);
    }
}

TEST(CliAnalyze, IdentityRowsAreZero) {
    const auto j = json::parse(run({"analyze", "1234", "--format", "json"}).out);
    for (const auto& row : j["rows"]) {
        EXPECT_EQ(row["min"], 0);
        EXPECT_EQ(row["max"], 0);
        EXPECT_EQ(row["expat"], 0);
        EXPECT_EQ(row["pos_pairs"].size(), 0u);
        EXPECT_EQ(row["val_pairs"].size(), 0u);
        EXPECT_EQ(row["in_support"], false);
    }
}

TEST(CliAnalyze, SingleKAndErrors) {
    const auto j = json::parse(run({"analyze", "4312", "--k", "2", "--format", "json"}).out);
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["k"], 2);

    EXPECT_EQ(run({"analyze", "4312", "--k", "4"}).code, 2);
    const auto bad = run({"analyze", "4412"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("duplicate"), std::string::npos);
    EXPECT_EQ(run({"analyze", "4312", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliWords, Example4312) {
    const auto r = run({"words", "4312"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 1 3 2 1\n2 3 1 2 1\n2 3 2 1 2\n3 2 1 3 2\n3 2 3 1 2\ntotal 5\n");
}

TEST(CliWords, IdentityAndLimit) {
    EXPECT_EQ(run({"words", "1"}).out, "(empty)\ntotal 1\n");
    const auto r = run({"words", "4321", "--limit", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2 1 3 2 1\n1 2 3 1 2 1\n1 2 3 2 1 2\ntotal 16 (showing first 3)\n");

    const auto j = json::parse(run({"words", "4321", "--limit", "3", "--format", "json"}).out);
    EXPECT_EQ(j["count"], 16);
    EXPECT_EQ(j["truncated"], true);
    EXPECT_EQ(j["words"].size(), 3u);
}

TEST(CliWitness, WorkedExample) {
    const auto r = run({"witness", "5273416", "--k", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["u"]["perm"], "2314567");
    EXPECT_EQ(j["v"]["perm"], "1234576");
    EXPECT_EQ(j["t"], json::parse("[[4,3],[5,4]]"));
    EXPECT_EQ(j["d"]["perm"], "3142657");
    EXPECT_EQ(j["sigma_count"], 2);
    EXPECT_EQ(j["expatriation"], 2);
    EXPECT_EQ(j["reduced"], true);
}

TEST(CliWitness, TableAndEdgeCases) {
    const auto id = run({"witness", "1234", "--k", "2"});
    EXPECT_EQ(id.code, 0);
    EXPECT_NE(id.out.find("assembled: (empty)"), std::string::npos);

    const auto j = json::parse(run({"witness", "4321", "--k", "2", "--format", "json"}).out);
    int twos = 0;
    for (const auto& a : j["assembled"]) twos += a.get<int>() == 2;
    EXPECT_EQ(twos, 2);

    EXPECT_EQ(run({"witness", "4321"}).code, 2);
    EXPECT_EQ(run({"witness", "4321", "--k", "9"}).code, 2);
}

TEST(CliVerify, MinOnDegreeThree) {
    const auto r = run({"verify", "--n", "3", "--n-min", "3", "--theorems", "min", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["cases_checked"], 12);
    EXPECT_EQ(j["reports"][0]["failures"].size(), 0u);
}

TEST(CliVerify, SweepsToFivePass) {
    const auto r = run({"verify", "--n", "5", "--theorems",
                        "min,max_gt_1,max_bound,fixed,lemma1,witness,oracle,long_element", "--workers", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(CliVerify, AllReportsTheSecondBruhatPair) {
    const auto r = run({"verify", "--n", "5", "--theorems", "all", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["passed"], false);
    for (const auto& rep : j["reports"]) {
        if (rep["theorem"] == "bruhat_examples") {
            ASSERT_EQ(rep["failures"].size(), 1u);
        } else {
            EXPECT_EQ(rep["failures"].size(), 0u) << rep["theorem"];
        }
    }
}

TEST(CliVerify, RefusalsAndUsage) {
    const auto r = run({"verify", "--n", "9", "--theorems", "all"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("capped"), std::string::npos);
    EXPECT_EQ(run({"verify", "--n", "7", "--theorems", "oracle"}).code, 2);
    EXPECT_EQ(run({"verify", "--n", "4", "--theorems", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}
