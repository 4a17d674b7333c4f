#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "steintri/catalog.hpp"
#include "steintri/census.hpp"
#include "steintri/lift.hpp"

using namespace steintri;

TEST(Census, SmallModFourCounts) {
    auto r7 = count_balanced(Modulus(4), 7);
    EXPECT_EQ(r7.total_sequences, 16384u);
    EXPECT_EQ(r7.balanced_count, 64u);

    auto r8 = count_balanced(Modulus(4), 8);
    EXPECT_EQ(r8.balanced_count, 300u);
}

TEST(Census, SamplesAreLexSortedAndContainKnownRows) {
    auto s7 = sample_balanced(Modulus(4), 7, 1000);
    EXPECT_EQ(s7.size(), 64u);
    EXPECT_TRUE(std::is_sorted(s7.begin(), s7.end()));
    auto worked = std::get<ModSequence>(parse_sequence("0100203", Modulus(4)));
    EXPECT_NE(std::find(s7.begin(), s7.end(), worked), s7.end());

    auto s8 = sample_balanced(Modulus(4), 8, 1000);
    auto s1_8 = prefix(catalog_entry("S1").sequence, 8);
    EXPECT_NE(std::find(s8.begin(), s8.end(), s1_8), s8.end());

    auto s0 = sample_balanced(Modulus(2), 0, 10);
    ASSERT_EQ(s0.size(), 1u);
    EXPECT_TRUE(s0.front().empty());

    EXPECT_EQ(sample_balanced(Modulus(4), 7, 3).size(), 3u);
}

TEST(Census, ZeroLength) {
    auto r = count_balanced(Modulus(5), 0);
    EXPECT_EQ(r.total_sequences, 1u);
    EXPECT_EQ(r.balanced_count, 1u);
}

TEST(Census, InadmissibleShortCircuits) {
    auto r = count_balanced(Modulus(4), 9);
    EXPECT_TRUE(r.shortcircuited);
    EXPECT_EQ(r.balanced_count, 0u);
    EXPECT_EQ(r.nodes_visited, 0u);

    CensusOptions opt;
    opt.shortcircuit_inadmissible = false;
    auto full = count_balanced(Modulus(4), 9, opt);
    EXPECT_FALSE(full.shortcircuited);
    EXPECT_EQ(full.balanced_count, 0u);
    EXPECT_GT(full.nodes_visited, 0u);
}

TEST(Census, BudgetGuard) {
    CensusOptions opt;
    opt.budget = 10;
    EXPECT_THROW(count_balanced(Modulus(4), 8, opt), std::runtime_error);
    opt.force = true;
    EXPECT_EQ(count_balanced(Modulus(4), 8, opt).balanced_count, 300u);
}

TEST(Census, PartitionIndependence) {
    std::uint64_t expect = 300;
    for (unsigned parts : {1u, 4u, 16u}) {
        CensusOptions opt;
        opt.partitions = parts;
        auto r = count_balanced(Modulus(4), 8, opt);
        EXPECT_EQ(r.balanced_count, expect) << parts;
        EXPECT_GE(r.partitions_used, parts);
    }
    // threads must not change the count either
    CensusOptions opt;
    opt.partitions = 16;
    opt.threads = 4;
    EXPECT_EQ(count_balanced(Modulus(4), 8, opt).balanced_count, expect);
}

TEST(Census, OrbitCounts) {
    EXPECT_EQ(orbit_count(Modulus(4), 7, CensusGroup{}), 16u);
    EXPECT_EQ(orbit_count(Modulus(4), 8, CensusGroup{}), 75u);

    // trivial group: one orbit per balanced row
    CensusGroup trivial;
    trivial.reversal = false;
    trivial.units = {1};
    EXPECT_EQ(orbit_count(Modulus(4), 7, trivial), 64u);

    EXPECT_EQ(CensusGroup{}.describe(Modulus(6)), "reversal x units{1,5}");
    EXPECT_EQ(CensusGroup{}.order(Modulus(6)), 4u);
}

TEST(Census, OrbitCountMatchesExplicitCanonicalization) {
    // brute-force the orbit count of the (4, 7) balanced set
    auto rows = sample_balanced(Modulus(4), 7, 1000);
    auto canon = [&](const ModSequence& s) {
        ModSequence best = s;
        for (residue_t u : Modulus(4).units()) {
            for (ModSequence img : {s.scaled(u), s.scaled(u).reversed()})
                if (img < best) best = img;
        }
        return best;
    };
    std::uint64_t canonical = 0;
    for (const auto& s : rows)
        if (canon(s) == s) ++canonical;
    EXPECT_EQ(canonical, 16u);
}

TEST(Census, AgreesWithLiftSearchOnProjectedFibers) {
    // at lengths 7 and 8 over Z/4 the checkpoint chain is a single
    // nontrivial balance test, so the balanced rows are exactly the
    // strongly balanced lifts of their mod-2 projections
    for (unsigned n : {7u, 8u}) {
        auto rows = sample_balanced(Modulus(4), n, 100000);
        std::map<std::string, std::vector<ModSequence>> fibers;
        for (const auto& s : rows)
            fibers[to_string(project(s))].push_back(s);
        std::size_t enumerated_total = 0;
        for (auto& [proj, members] : fibers) {
            auto base = std::get<ModSequence>(parse_sequence(proj, Modulus(2)));
            EventuallyPeriodicSequence padded(base, ModSequence(Modulus(2), {0}));
            auto lifts = enumerate_lifts(padded, n);
            EXPECT_EQ(lifts, members) << "fiber " << proj << " at n = " << n;
            enumerated_total += lifts.size();
        }
        EXPECT_EQ(enumerated_total, rows.size());
    }
}

TEST(Census, KnownZeroAtFifteenFive) {
    auto r = count_balanced(Modulus(15), 5);
    EXPECT_EQ(r.total_sequences, 759375u);
    EXPECT_EQ(r.balanced_count, 0u);
    EXPECT_FALSE(r.shortcircuited);
}
