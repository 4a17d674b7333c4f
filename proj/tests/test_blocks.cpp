#include <gtest/gtest.h>

#include <random>

#include "steintri/blocks.hpp"

using namespace steintri;

namespace {

Block tri(std::initializer_list<std::string> rows) {
    std::vector<std::string> r(rows);
    return detail::block_from_strings(BlockKind::triangle, r);
}

Block loz(std::initializer_list<std::string> rows) {
    std::vector<std::string> r(rows);
    return detail::block_from_strings(BlockKind::lozenge, r);
}

} // namespace

TEST(Star, WorkedProducts) {
    // two side-2 triangles
    EXPECT_EQ(star(tri({"01", "1"}), tri({"23", "1"})), loz({"3", "00", "0"}));
    // two side-2 lozenges
    EXPECT_EQ(star(loz({"2", "23", "1"}), loz({"3", "02", "2"})), loz({"3", "01", "1"}));
}

TEST(Star, ZeroBlocks) {
    auto z = tri({"000", "00", "0"});
    EXPECT_EQ(star(z, z), loz({"0", "00", "000", "00", "0"}));
}

TEST(Star, ShapeAndModulusChecks) {
    EXPECT_THROW(star(tri({"01", "1"}), tri({"012", "01", "1"})), std::invalid_argument);
    auto a = tri({"01", "1"});
    auto b = Block(Modulus(5), BlockKind::triangle, {{2, 3}, {1}});
    EXPECT_THROW(star(a, b), std::invalid_argument);
}

TEST(Star, DependsOnlyOnLowerEdges) {
    auto lib = build_library();
    const Block& b1 = lib.at("B1");
    const Block& b2 = lib.at("B2");
    Block expected = star(b1, b2);

    // scramble cells off the lower edges of both operands
    std::mt19937 rng(41);
    auto scramble = [&](const Block& blk) {
        auto rows = blk.rows();
        std::size_t s = blk.side();
        for (std::size_t i = 0; i + 1 < s; ++i)  // strictly above the widest row
            for (auto& v : rows[i]) v = residue_t(rng() % 4);
        for (std::size_t i = s; i < rows.size(); ++i)  // interior below it
            for (std::size_t j = 1; j + 1 < rows[i].size(); ++j)
                rows[i][j] = residue_t(rng() % 4);
        return Block(blk.modulus(), blk.kind(), rows);
    };
    for (int i = 0; i < 10; ++i)
        EXPECT_EQ(star(scramble(b1), scramble(b2)), expected);
}

TEST(Library, MatchesReferenceListings) {
    auto lib = build_library();
    ASSERT_EQ(lib.blocks.size(), 14u);
    const auto& ref = reference_blocks();
    for (std::size_t i = 0; i < 14; ++i)
        EXPECT_TRUE(lib.blocks[i] == ref.blocks[i]) << block_names()[i];

    EXPECT_EQ(lib.at("A1").rows()[0],
              (std::vector<residue_t>{2, 1, 2, 1, 1, 3, 2, 2}));
    EXPECT_EQ(lib.at("E0").rows().back(), (std::vector<residue_t>{2}));
    EXPECT_EQ(star(lib.at("A0"), lib.at("A1")), lib.at("B0"));
}

TEST(Library, MultiplicityTable) {
    auto lib = build_library();
    auto mv = block_multiplicities(lib);
    const auto& expect = reference_multiplicities();
    for (std::size_t i = 0; i < 14; ++i)
        for (unsigned j = 0; j < 4; ++j)
            EXPECT_EQ(mv[i].counts[j], expect[i][j]) << block_names()[i] << " residue " << j;

    EXPECT_EQ(mv[0].counts, (std::vector<std::uint64_t>{9, 9, 9, 9}));
    EXPECT_EQ(mv[1].counts, (std::vector<std::uint64_t>{5, 10, 11, 10}));
    for (std::size_t i = 0; i < 14; ++i)
        EXPECT_EQ(mv[i].total(), i < 4 ? 36u : 64u);
    for (unsigned j = 0; j < 4; ++j)
        EXPECT_EQ(mv[9].counts[j] + mv[10].counts[j] + mv[11].counts[j], 48u);
}

TEST(Library, EdgeCoincidences) {
    auto lib = build_library();
    EXPECT_TRUE(verify_edge_coincidences(lib));
    EXPECT_EQ(star(lib.at("C3"), lib.at("C1")), lib.at("C2"));

    // negative control: perturb one lower-edge cell of E0
    BlockLibrary broken = lib;
    auto rows = broken.at("E0").rows();
    rows.back()[0] = residue_t((rows.back()[0] + 1) % 4);
    broken.blocks[13] = Block(Modulus(4), BlockKind::lozenge, rows);
    EXPECT_FALSE(verify_edge_coincidences(broken));
}

TEST(Assembly, LabelGridForEightBlocks) {
    auto grid = assembly_labels(8);
    ASSERT_EQ(grid.size(), 8u);
    auto names = [&](const std::vector<int>& row) {
        std::string s;
        for (int v : row) s += block_names()[std::size_t(v)] + " ";
        return s;
    };
    EXPECT_EQ(names(grid[0]), "A0 A1 A2 A3 A1 A2 A3 A1 ");
    EXPECT_EQ(names(grid[1]), "B0 B1 B2 B3 B1 B2 B3 ");
    EXPECT_EQ(names(grid[2]), "C0 C1 C2 C3 C1 C2 ");
    EXPECT_EQ(names(grid[3]), "D0 C3 C1 C2 C3 ");
    EXPECT_EQ(names(grid[4]), "E0 C2 C3 C1 ");
    EXPECT_EQ(names(grid[5]), "C0 C1 C2 ");
    EXPECT_EQ(names(grid[6]), "D0 C3 ");
    EXPECT_EQ(names(grid[7]), "E0 ");
}

TEST(Assembly, MatchesDirectConstruction) {
    const auto& s1 = catalog_entry("S1").sequence;
    for (unsigned k : {0u, 1u, 2u, 3u, 8u, 12u}) {
        SteinhausTriangle tiled = assemble(k);
        EXPECT_TRUE(tiled == build_triangle(prefix(s1, 8 * std::size_t(k)))) << "k=" << k;
        EXPECT_TRUE(tiled.satisfies_pascal());
    }
}

TEST(Assembly, EmbeddingReproducesStar) {
    // build the 16-wide triangle over two adjacent top blocks and check the
    // lozenge between them against the star product
    auto lib = build_library();
    const auto& s1 = catalog_entry("S1").sequence;
    struct Case { std::size_t left_at; const char* product; };
    for (auto [left_at, product] : {Case{0, "B0"}, Case{8, "B1"}, Case{16, "B2"}}) {
        ModSequence first(Modulus(4));
        for (std::size_t i = left_at; i < left_at + 16; ++i) first.push_back(s1.at(i));
        auto t = build_triangle(first);
        const Block& expect = lib.at(product);
        // upper half of the lozenge: rows 1..8, right-aligned at column 7
        for (std::size_t r = 1; r <= 8; ++r)
            for (std::size_t j = 0; j < r; ++j)
                EXPECT_EQ(t.row(r)[8 - r + j], expect.rows()[r - 1][j]);
        // lower half: rows 9..15, left-aligned
        for (std::size_t r = 9; r < 16; ++r)
            for (std::size_t j = 0; j < 16 - r; ++j)
                EXPECT_EQ(t.row(r)[j], expect.rows()[r - 1][j]);
    }
}

TEST(Bands, CaseFormulas) {
    EXPECT_EQ(band_case_formula(3).counts, (std::vector<std::uint64_t>{41, 41, 41, 41}));
    EXPECT_EQ(band_case_formula(4).counts, (std::vector<std::uint64_t>{57, 57, 57, 57}));
    EXPECT_EQ(band_case_formula(5).counts, (std::vector<std::uint64_t>{73, 73, 73, 73}));
    EXPECT_THROW(band_case_formula(2), std::invalid_argument);
    for (unsigned k = 3; k <= 12; ++k)
        EXPECT_EQ(4 * band_case_formula(k).counts[0], std::uint64_t(64) * k - 28);
}

TEST(Render, BlockLayout) {
    auto lib = build_library();
    EXPECT_EQ(render(lib.at("A0")).substr(0, 16), "0 1 2 2 0 2 3 2\n");
    std::string e0 = render(lib.at("E0"));
    EXPECT_EQ(e0.substr(0, 9), "       2\n");
    auto csv = multiplicity_table_csv(lib);
    EXPECT_NE(csv.find("residue,A0,A1"), std::string::npos);
    EXPECT_NE(csv.find("\n0,9,5,8,7,20"), std::string::npos);
}
