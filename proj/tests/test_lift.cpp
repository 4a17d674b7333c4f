#include <gtest/gtest.h>

#include "steintri/catalog.hpp"
#include "steintri/lift.hpp"

using namespace steintri;

namespace {

const EventuallyPeriodicSequence& cat(std::string_view n) { return catalog_entry(n).sequence; }

GenFunction lifts(std::string_view n, std::uint64_t horizon, unsigned threads = 1) {
    LiftOptions opt;
    opt.horizon = horizon;
    opt.threads = threads;
    return count_lifts(cat(n), opt);
}

} // namespace

TEST(CountLifts, FirstCoefficientsOfQ1) {
    GenFunction g = lifts("Q1", 16);
    EXPECT_EQ(g.target_modulus, 4u);
    EXPECT_EQ(g.stride, 8u);
    EXPECT_EQ(g.coefficient(0), 1u);
    EXPECT_EQ(g.coefficient(8), 8u);
    EXPECT_EQ(g.coefficient(16), 34u);
    // the 7-class values are genuine counts even though the published
    // series for Q1 lists only multiples of 8
    EXPECT_EQ(g.coefficient(7), 10u);
    EXPECT_EQ(g.coefficient(15), 72u);
    EXPECT_EQ(g.coefficient(3), 0u);  // inadmissible length
}

TEST(CountLifts, ShortSeries) {
    GenFunction r5 = lifts("R5", 64);
    EXPECT_EQ(r5.coefficient(7), 10u);
    EXPECT_EQ(r5.coefficient(8), 10u);
    EXPECT_EQ(r5.coefficient(15), 0u);
    EXPECT_EQ(r5.coefficient(16), 0u);
    EXPECT_EQ(r5.coefficient(23), 0u);

    GenFunction r1 = lifts("R1", 64);
    for (const auto& [n, a] : r1.coefficients)
        EXPECT_EQ(a, n == 0 ? 1u : 0u) << n;
}

TEST(CountLifts, RejectsOddSource) {
    auto odd = std::get<EventuallyPeriodicSequence>(parse_sequence("0(12)", Modulus(3)));
    EXPECT_THROW(count_lifts(odd), std::domain_error);
}

TEST(CountLifts, ThreadedRunsAgree) {
    GenFunction a = lifts("Q3", 96, 1);
    GenFunction b = lifts("Q3", 96, 4);
    EXPECT_EQ(a.coefficients, b.coefficients);
}

TEST(EnumerateLifts, LiftsOfQ1AtEight) {
    auto got = enumerate_lifts(cat("Q1"), 8);
    std::vector<std::string> names;
    for (const auto& s : got) names.push_back(to_string(s));
    EXPECT_EQ(names, (std::vector<std::string>{"01220232", "01222032", "03220212", "03222012",
                                               "21022230", "21202230", "23022210", "23202210"}));
    // includes the catalog lift of Q1
    EXPECT_EQ(names.front(), to_string(prefix(cat("S1"), 8)));
    for (const auto& s : got) {
        EXPECT_TRUE(is_strongly_balanced(s));
        EXPECT_EQ(project(s), prefix(cat("Q1"), 8));
    }
}

TEST(EnumerateLifts, Degenerate) {
    auto empty = enumerate_lifts(cat("Q1"), 0);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty.front().empty());
    EXPECT_TRUE(enumerate_lifts(cat("R1"), 7).empty());
    EXPECT_TRUE(enumerate_lifts(cat("Q1"), 5).empty());  // inadmissible
}

TEST(EnumerateLifts, PrefixClosure) {
    auto outer = enumerate_lifts(cat("Q1"), 24);
    auto inner = enumerate_lifts(cat("Q1"), 16);
    for (const auto& l : outer) {
        auto p = prefix(l, 16);
        EXPECT_NE(std::find(inner.begin(), inner.end(), p), inner.end());
    }
    EXPECT_EQ(outer.size(), 58u);
    EXPECT_TRUE(std::is_sorted(outer.begin(), outer.end()));
}

TEST(EnumerateLifts, CapGuard) {
    LiftOptions opt;
    opt.frontier_cap = 4;
    EXPECT_THROW(enumerate_lifts(cat("Q1"), 8, opt), std::runtime_error);
}

TEST(BruteForce, MatchesFrontierCounts) {
    for (const char* name : {"Q1", "R3", "R5", "R12"}) {
        GenFunction g = lifts(name, 8);
        EXPECT_EQ(brute_force_lifts(cat(name), 7), g.coefficient(7)) << name;
        EXPECT_EQ(brute_force_lifts(cat(name), 8), g.coefficient(8)) << name;
    }
    EXPECT_EQ(brute_force_lifts(cat("Q1"), 0), 1u);
    EXPECT_EQ(brute_force_lifts(cat("Q1"), 16), 34u);
    EXPECT_THROW(brute_force_lifts(cat("Q1"), 25), std::invalid_argument);
}

TEST(DetectTail, SyntheticSeries) {
    GenFunction g;
    g.stride = 8;
    g.horizon = 200;
    for (std::uint64_t n = 0; n <= 200; n += 8)
        g.coefficients.emplace_back(n, n >= 104 ? 2 : 5);
    g = detect_tail(g);
    ASSERT_TRUE(g.tail.has_value());
    EXPECT_EQ(g.tail->start, 104u);
    EXPECT_EQ(g.tail->stride, 8u);
    EXPECT_EQ(g.tail->constant, 2u);

    GenFunction zeros;
    zeros.stride = 8;
    zeros.horizon = 100;
    for (std::uint64_t n = 0; n <= 100; n += 8) zeros.coefficients.emplace_back(n, 0);
    EXPECT_FALSE(detect_tail(zeros).tail.has_value());

    EXPECT_THROW(detect_tail(g, 1), std::invalid_argument);
}

TEST(DetectTail, Q1AtHorizonTwoHundred) {
    GenFunction g = detect_tail(lifts("Q1", 200));
    ASSERT_TRUE(g.tail.has_value());
    EXPECT_EQ(g.tail->start, 104u);
    EXPECT_EQ(g.tail->constant, 2u);

    // Q4's series ends by 80, so no tail may be reported
    EXPECT_FALSE(detect_tail(lifts("Q4", 200)).tail.has_value());
}

TEST(CountLifts, ModEightTarget) {
    GenFunction g = lifts("S1", 32);
    EXPECT_EQ(g.target_modulus, 8u);
    EXPECT_EQ(g.stride, 16u);
    EXPECT_EQ(g.coefficient(0), 1u);
    EXPECT_EQ(g.coefficient(15), 0u);
    EXPECT_EQ(g.coefficient(16), 16u);
    EXPECT_EQ(g.coefficient(32), 46u);
}
