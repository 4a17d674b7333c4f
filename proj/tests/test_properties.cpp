// Property checks with hand-rolled generators over random moduli and
// lengths; fixed seeds keep runs reproducible.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "steintri/catalog.hpp"
#include "steintri/census.hpp"
#include "steintri/lift.hpp"
#include "steintri/triangle.hpp"

using namespace steintri;

namespace {

ModSequence random_sequence(std::mt19937& rng, unsigned m, std::size_t n) {
    std::uniform_int_distribution<unsigned> sym(0, m - 1);
    ModSequence s{Modulus(m)};
    for (std::size_t i = 0; i < n; ++i) s.push_back(sym(rng));
    return s;
}

} // namespace

TEST(Properties, PascalInvariantOnRandomTriangles) {
    std::mt19937 rng(101);
    for (int i = 0; i < 100; ++i) {
        unsigned m = 2 + rng() % 10;
        auto s = random_sequence(rng, m, rng() % 48);
        auto t = build_triangle(s);
        EXPECT_TRUE(t.satisfies_pascal());
        EXPECT_EQ(t.first_row(), s);
    }
}

TEST(Properties, BandConsistencyOnRandomExtensions) {
    std::mt19937 rng(103);
    for (int i = 0; i < 80; ++i) {
        unsigned m = 2 + rng() % 10;
        auto s = random_sequence(rng, m, rng() % 32);
        auto f = random_sequence(rng, m, 1 + rng() % 12);
        auto [band, next] = extend_band(eastern_state(build_triangle(s)), f);

        ModSequence joined = s;
        for (residue_t c : f) joined.push_back(c);
        auto whole = triangle_multiplicities(joined);
        auto base = triangle_multiplicities(s);
        base += band;
        EXPECT_EQ(base.counts, whole.counts);
        EXPECT_EQ(next.diagonal, build_triangle(joined).eastern_diagonal());
    }
}

TEST(Properties, StrongBalanceIsHereditary) {
    std::mt19937 rng(107);
    // guaranteed positives from the catalog
    for (const auto& e : sequence_catalog()) {
        unsigned stride = 2 * e.modulus().value();
        unsigned k = 2 + rng() % 6;
        auto s = prefix(e.sequence, std::size_t(stride) * k + e.checkpoint_offset);
        ASSERT_TRUE(is_strongly_balanced(s)) << e.name;
        EXPECT_TRUE(is_strongly_balanced(prefix(s, s.size() - stride))) << e.name;
    }
    // random sequences: heredity as an implication
    for (int i = 0; i < 60; ++i) {
        unsigned m = 2 + 2 * (rng() % 2);
        auto s = random_sequence(rng, m, 2 * m + rng() % 20);
        if (is_strongly_balanced(s))
            EXPECT_TRUE(is_strongly_balanced(prefix(s, s.size() - 2 * m)));
    }
}

TEST(Properties, BalancedImpliesAdmissibleLength) {
    std::mt19937 rng(109);
    for (int i = 0; i < 400; ++i) {
        unsigned m = 2 + rng() % 8;
        auto s = random_sequence(rng, m, rng() % 20);
        if (is_balanced(s))
            EXPECT_TRUE(admissible_length(s.size(), s.modulus()));
    }
    // positives with content: every balanced row found by the census
    for (const auto& s : sample_balanced(Modulus(4), 7, 100)) {
        EXPECT_TRUE(is_balanced(s));
        EXPECT_TRUE(admissible_length(7, Modulus(4)));
    }
}

TEST(Properties, SymmetryClosure) {
    std::mt19937 rng(113);
    for (int i = 0; i < 60; ++i) {
        unsigned m = 2 + rng() % 8;
        auto s = random_sequence(rng, m, rng() % 24);
        auto t = build_triangle(s);
        bool bal = is_balanced(s);

        // reversal mirrors the triangle left-right
        auto tr = build_triangle(s.reversed());
        ASSERT_EQ(tr.row_count(), t.row_count());
        for (std::size_t r = 0; r < t.row_count(); ++r) {
            auto mirrored = t.row(r);
            std::reverse(mirrored.begin(), mirrored.end());
            EXPECT_EQ(tr.row(r), mirrored);
        }
        EXPECT_EQ(is_balanced(s.reversed()), bal);

        // unit scaling acts cellwise
        for (residue_t u : s.modulus().units()) {
            auto tu = build_triangle(s.scaled(u));
            for (std::size_t r = 0; r < t.row_count(); ++r)
                for (std::size_t j = 0; j < t.row(r).size(); ++j)
                    EXPECT_EQ(tu.row(r)[j], residue_t(unsigned(u) * t.row(r)[j] % m));
            EXPECT_EQ(is_balanced(s.scaled(u)), bal);
        }
    }
}

TEST(Properties, LiftCountsAreEvenFromLengthOne) {
    LiftOptions opt;
    opt.horizon = 80;
    for (const char* name : {"Q1", "R3", "R11"}) {
        GenFunction g = count_lifts(catalog_entry(name).sequence, opt);
        for (const auto& [n, a] : g.coefficients)
            if (n >= 1) EXPECT_EQ(a % 2, 0u) << name << " a_" << n;
    }
}

TEST(Properties, NegationPairsUpLifts) {
    auto lifts = enumerate_lifts(catalog_entry("Q1").sequence, 8);
    for (const auto& l : lifts) {
        EXPECT_NE(l.scaled(3), l);  // negation is fixed-point free here
        EXPECT_NE(std::find(lifts.begin(), lifts.end(), l.scaled(3)), lifts.end());
    }
}

TEST(Properties, EnumeratedLiftsPrefixClosed) {
    const auto& r3 = catalog_entry("R3").sequence;
    auto outer = enumerate_lifts(r3, 23);
    auto inner = enumerate_lifts(r3, 15);
    EXPECT_EQ(outer.size(), 70u);
    for (const auto& l : outer)
        EXPECT_NE(std::find(inner.begin(), inner.end(), prefix(l, 15)), inner.end());
}

TEST(Properties, CensusPartitionIndependence) {
    std::uint64_t reference = 0;
    for (unsigned parts : {1u, 4u, 16u}) {
        CensusOptions opt;
        opt.partitions = parts;
        auto r = count_balanced(Modulus(2), 12, opt);
        if (parts == 1)
            reference = r.balanced_count;
        else
            EXPECT_EQ(r.balanced_count, reference);
    }
    EXPECT_GT(reference, 0u);
}
