#include <gtest/gtest.h>

#include "reprange/verify.hpp"

using namespace reprange;

TEST(Unrank, MatchesNextPermutationOrder) {
    std::vector<int> line{1, 2, 3, 4, 5};
    for (std::uint64_t r = 0; r < 120; ++r) {
        EXPECT_EQ(unrank(5, r).one_line(), line);
        std::next_permutation(line.begin(), line.end());
    }
}

TEST(RunCheck, MinOnDegreeThree) {
    const auto rep = run_check(Check::min, 3, 3);
    EXPECT_EQ(rep.theorem_id, "min");
    EXPECT_EQ(rep.degree_range, std::vector<int>{3});
    EXPECT_EQ(rep.cases_checked, 12u);
    EXPECT_TRUE(rep.passed());
}

TEST(RunCheck, CaseCountSumsOverDegrees) {
    const auto rep = run_check(Check::fixed, 2, 5);
    EXPECT_EQ(rep.cases_checked, 2u * 1 + 6u * 2 + 24u * 3 + 120u * 4);
    EXPECT_TRUE(rep.passed());
}

TEST(RunCheck, SweepChecksPassUpToFive) {
    for (auto c : all_checks()) {
        if (c == Check::bruhat_examples) continue;
        const auto rep = run_check(c, 2, 5);
        EXPECT_TRUE(rep.passed()) << rep.theorem_id;
        EXPECT_GT(rep.cases_checked, 0u) << rep.theorem_id;
    }
}

TEST(RunCheck, WorkerCountDoesNotChangeReport) {
    const auto a = run_check(Check::max_bound, 2, 6, 1);
    const auto b = run_check(Check::max_bound, 2, 6, 7);
    EXPECT_EQ(a.cases_checked, b.cases_checked);
    EXPECT_EQ(a.failures.size(), b.failures.size());
    EXPECT_TRUE(b.passed());
}

TEST(RunCheck, CapsAreEnforced) {
    EXPECT_THROW(run_check(Check::oracle, 2, 7), SweepRefused);
    EXPECT_THROW(run_check(Check::min, 2, 8), SweepRefused);
    EXPECT_THROW(run_check(Check::min, 1, 3), SweepRefused);
    EXPECT_THROW(run_checks(all_checks(), 2, 9, 1, true), SweepRefused);
    EXPECT_THROW(run_checks({Check::oracle}, 2, 7), SweepRefused);
}

TEST(RunChecks, ClampMakesDegreesVisible) {
    const auto reps = run_checks({Check::oracle, Check::long_element}, 2, 7, 2, true);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_EQ(reps[0].degree_range.back(), 6);
    EXPECT_EQ(reps[1].degree_range.back(), 7);
    EXPECT_EQ(reps[1].degree_range.front(), 3);
}

TEST(RunCheck, BruhatExamples) {
    const auto rep = run_check(Check::bruhat_examples, 2, 2);
    EXPECT_EQ(rep.cases_checked, 2u);
    // Both pairs are covers. Only 561234 -> 651234 drops in pattern count;
    // 32541 -> 52341 goes from 2 to 3.
    ASSERT_EQ(rep.failures.size(), 1u);
    EXPECT_EQ(rep.failures[0].w, parse_permutation("52341"));
    EXPECT_EQ(rep.failures[0].expected, "pattern count below 2");
    EXPECT_EQ(rep.failures[0].actual, "3");
}

TEST(ParseCheck, Names) {
    EXPECT_EQ(parse_check("max_gt_1"), Check::max_gt_1);
    EXPECT_FALSE(parse_check("nope").has_value());
}
