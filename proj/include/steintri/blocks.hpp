#pragma once

// Block algebra over Z/4: triangular and lozenge sub-arrays, the star
// product, and the fourteen building blocks that tile the triangle of
// every length-8k prefix of S1.
//
// The star product a*b of two side-s blocks is the lozenge the pair would
// generate by Pascal's rule if they sat next to each other inside a larger
// triangle.  It depends only on a's lower-right edge and b's lower-left
// edge; both edges are read top to bottom, a convention that reproduces
// the worked products and the block library below.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steintri/catalog.hpp"
#include "steintri/triangle.hpp"

namespace steintri {

enum class BlockKind { triangle, lozenge };

// A triangular block has rows of lengths s, s-1, ..., 1 (s(s+1)/2 cells);
// a lozenge has rows 1, 2, ..., s, ..., 2, 1 (s^2 cells).
class Block {
public:
    Block(Modulus m, BlockKind kind, std::vector<std::vector<residue_t>> rows)
        : mod_(m), kind_(kind), rows_(std::move(rows)) {
        side_ = kind_ == BlockKind::triangle ? rows_.size() : (rows_.size() + 1) / 2;
        validate_shape();
    }

    Modulus modulus() const { return mod_; }
    BlockKind kind() const { return kind_; }
    std::size_t side() const { return side_; }
    const std::vector<std::vector<residue_t>>& rows() const { return rows_; }

    std::size_t cell_count() const {
        return kind_ == BlockKind::triangle ? side_ * (side_ + 1) / 2 : side_ * side_;
    }

    // Lower edges, read top to bottom, each of length side().  For a
    // triangle these run over all rows; for a lozenge over the widest row
    // and everything below it.
    std::vector<residue_t> lower_left_edge() const {
        std::vector<residue_t> e;
        for (std::size_t i = first_lower_row(); i < rows_.size(); ++i)
            e.push_back(rows_[i].front());
        return e;
    }

    std::vector<residue_t> lower_right_edge() const {
        std::vector<residue_t> e;
        for (std::size_t i = first_lower_row(); i < rows_.size(); ++i)
            e.push_back(rows_[i].back());
        return e;
    }

    friend bool operator==(const Block& a, const Block& b) {
        return a.mod_ == b.mod_ && a.kind_ == b.kind_ && a.rows_ == b.rows_;
    }

private:
    std::size_t first_lower_row() const {
        return kind_ == BlockKind::triangle ? 0 : side_ - 1;
    }

    void validate_shape() const {
        if (side_ == 0)
            throw std::invalid_argument("block must be nonempty");
        std::size_t expect = kind_ == BlockKind::triangle ? side_ : 2 * side_ - 1;
        if (rows_.size() != expect)
            throw std::invalid_argument("block has wrong number of rows");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t len = kind_ == BlockKind::triangle
                                  ? side_ - i
                                  : (i < side_ ? i + 1 : 2 * side_ - 1 - i);
            if (rows_[i].size() != len)
                throw std::invalid_argument("block row has wrong length");
            for (residue_t v : rows_[i])
                if (v >= mod_.value())
                    throw std::invalid_argument("block cell not reduced mod m");
        }
    }

    Modulus mod_;
    BlockKind kind_;
    std::size_t side_;
    std::vector<std::vector<residue_t>> rows_;
};

inline Block block_from_triangle(const SteinhausTriangle& t) {
    return Block(t.modulus(), BlockKind::triangle, t.rows());
}

inline MultiplicityVector multiplicities(const Block& b) {
    MultiplicityVector mv(b.modulus());
    for (const auto& r : b.rows())
        for (residue_t x : r) ++mv.counts[x];
    return mv;
}

// The star product.  Operands must share modulus and side length.
inline Block star(const Block& a, const Block& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("star operands disagree on modulus");
    if (a.side() != b.side())
        throw std::invalid_argument("star operands disagree on side length");
    unsigned m = a.modulus().value();
    auto mod = [m](unsigned v) { return static_cast<residue_t>(v >= m ? v - m : v); };
    std::vector<residue_t> ae = a.lower_right_edge();
    std::vector<residue_t> be = b.lower_left_edge();
    std::size_t s = a.side();

    std::vector<std::vector<residue_t>> rows;
    rows.reserve(2 * s - 1);
    rows.push_back({mod(ae[0] + be[0])});
    // widening half: row r cell t = row r-1 cells t-1 + t, with the
    // missing outer parents supplied by the operand edges
    for (std::size_t r = 1; r < s; ++r) {
        const auto& prev = rows.back();
        std::vector<residue_t> row(r + 1);
        row[0] = mod(ae[r] + prev[0]);
        for (std::size_t t = 1; t < r; ++t)
            row[t] = mod(prev[t - 1] + prev[t]);
        row[r] = mod(prev[r - 1] + be[r]);
        rows.push_back(std::move(row));
    }
    // narrowing half: plain Pascal
    for (std::size_t r = 1; r < s; ++r) {
        const auto& prev = rows.back();
        std::vector<residue_t> row(prev.size() - 1);
        for (std::size_t t = 0; t + 1 < prev.size(); ++t)
            row[t] = mod(prev[t] + prev[t + 1]);
        rows.push_back(std::move(row));
    }
    return Block(a.modulus(), BlockKind::lozenge, std::move(rows));
}

// Fixed ordering of the fourteen building blocks.
inline const std::array<std::string, 14>& block_names() {
    static const std::array<std::string, 14> names = {
        "A0", "A1", "A2", "A3", "B0", "B1", "B2", "B3",
        "C0", "C1", "C2", "C3", "D0", "E0"};
    return names;
}

struct BlockLibrary {
    std::vector<Block> blocks;  // indexed per block_names()

    const Block& at(std::string_view name) const {
        const auto& names = block_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return blocks[i];
        throw std::invalid_argument("unknown block: " + std::string(name));
    }
};

// Builds the library from S1 itself: the A blocks are the triangles of
// the initial segment and the three period thirds, the rest are star
// products of earlier blocks.
inline BlockLibrary build_library() {
    const EventuallyPeriodicSequence& s1 = catalog_entry("S1").sequence;
    auto tri = [&](std::size_t from) {
        std::vector<residue_t> part;
        for (std::size_t i = from; i < from + 8; ++i) part.push_back(s1.at(i));
        return block_from_triangle(build_triangle(ModSequence(s1.modulus(), part)));
    };
    std::vector<Block> b;
    b.reserve(14);
    b.push_back(tri(0));   // A0
    b.push_back(tri(8));   // A1
    b.push_back(tri(16));  // A2
    b.push_back(tri(24));  // A3
    b.push_back(star(b[0], b[1]));  // B0
    b.push_back(star(b[1], b[2]));  // B1
    b.push_back(star(b[2], b[3]));  // B2
    b.push_back(star(b[3], b[1]));  // B3
    b.push_back(star(b[4], b[5]));  // C0
    b.push_back(star(b[5], b[6]));  // C1
    b.push_back(star(b[6], b[7]));  // C2
    b.push_back(star(b[7], b[5]));  // C3
    b.push_back(star(b[8], b[9]));   // D0
    b.push_back(star(b[12], b[11])); // E0
    return BlockLibrary{std::move(b)};
}

namespace detail {

inline Block block_from_strings(BlockKind kind, const std::vector<std::string>& rows) {
    Modulus m4(4);
    std::vector<std::vector<residue_t>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows)
        cells.push_back(parse_symbols(r, m4));
    return Block(m4, kind, std::move(cells));
}

} // namespace detail

// Golden transcription of the fourteen block listings; build_library()
// recomputes the same blocks so any transcription drift is caught by a
// direct diff rather than trusted.
inline const BlockLibrary& reference_blocks() {
    static const BlockLibrary lib = [] {
        using detail::block_from_strings;
        auto T = BlockKind::triangle;
        auto L = BlockKind::lozenge;
        std::vector<Block> b;
        b.reserve(14);
        b.push_back(block_from_strings(T, {"01220232", "1302211", "032032", "31231",
                                           "0310", "301", "31", "0"}));
        b.push_back(block_from_strings(T, {"21211322", "3332010", "221211", "03332",
                                           "3221", "103", "13", "0"}));
        b.push_back(block_from_strings(T, {"00302323", "0332111", "321322", "13010",
                                           "0311", "302", "32", "1"}));
        b.push_back(block_from_strings(T, {"11200232", "2320211", "112232", "23011",
                                           "1312", "003", "03", "3"}));
        b.push_back(block_from_strings(L, {"0", "13", "301", "0311", "03020", "133221",
                                           "2021032", "22231312", "0010003", "011003",
                                           "12103", "3313", "200", "20", "2"}));
        b.push_back(block_from_strings(L, {"2", "22", "301", "1312", "20032", "120311",
                                           "0323020", "03113221", "3020103", "322113",
                                           "10320", "1312", "003", "03", "3"}));
        b.push_back(block_from_strings(L, {"0", "12", "333", "3221", "01032", "211312",
                                           "0320032", "13120311", "0032302", "031132",
                                           "30201", "3221", "103", "13", "0"}));
        b.push_back(block_from_strings(L, {"0", "13", "301", "0311", "23020", "113221",
                                           "0201032", "32211312", "1032003", "131203",
                                           "00323", "0311", "302", "32", "1"}));
        b.push_back(block_from_strings(L, {"2", "11", "020", "3221", "21032", "231312",
                                           "2100032", "03100311", "3010302", "311332",
                                           "02021", "2223", "001", "01", "1"}));
        b.push_back(block_from_strings(L, {"2", "12", "032", "0311", "23020", "113221",
                                           "0201032", "32211312", "1032003", "131203",
                                           "00323", "0311", "302", "32", "1"}));
        b.push_back(block_from_strings(L, {"0", "21", "032", "1312", "20032", "120311",
                                           "0323020", "03113221", "3020103", "322113",
                                           "10320", "1312", "003", "03", "3"}));
        b.push_back(block_from_strings(L, {"2", "11", "020", "3221", "01032", "211312",
                                           "0320032", "13120311", "0032302", "031132",
                                           "30201", "3221", "103", "13", "0"}));
        b.push_back(block_from_strings(L, {"0", "21", "032", "1312", "00032", "100311",
                                           "2103020", "33133221", "2002103", "202313",
                                           "22100", "0310", "301", "31", "0"}));
        b.push_back(block_from_strings(L, {"2", "12", "032", "0311", "03020", "133221",
                                           "2021032", "22231312", "0010003", "011003",
                                           "12103", "3313", "200", "20", "2"}));
        return BlockLibrary{std::move(b)};
    }();
    return lib;
}

// Golden multiplicity table, one column per block in block_names() order,
// rows indexed by residue 0..3.
inline const std::array<std::array<std::uint64_t, 4>, 14>& reference_multiplicities() {
    static const std::array<std::array<std::uint64_t, 4>, 14> table = {{
        {9, 9, 9, 9},     // A0
        {5, 10, 11, 10},  // A1
        {8, 9, 8, 11},    // A2
        {7, 10, 11, 8},   // A3
        {20, 15, 14, 15}, // B0
        {16, 15, 16, 17}, // B1
        {15, 16, 15, 18}, // B2
        {16, 17, 14, 17}, // B3
        {17, 17, 17, 13}, // C0
        {15, 16, 17, 16}, // C1
        {17, 15, 15, 17}, // C2
        {16, 17, 16, 15}, // C3
        {20, 15, 14, 15}, // D0
        {19, 14, 17, 14}, // E0
    }};
    return table;
}

inline std::vector<MultiplicityVector> block_multiplicities(const BlockLibrary& lib) {
    std::vector<MultiplicityVector> out;
    out.reserve(lib.blocks.size());
    for (const Block& b : lib.blocks)
        out.push_back(multiplicities(b));
    return out;
}

namespace detail {

// Star products of library blocks stay inside the library; this is the
// multiplication table on block labels (indices per block_names()).
inline int label_product(int a, int b) {
    static const std::map<std::pair<int, int>, int> table = {
        {{0, 1}, 4},  {{1, 2}, 5},  {{2, 3}, 6},  {{3, 1}, 7},    // A* -> B*
        {{4, 5}, 8},  {{5, 6}, 9},  {{6, 7}, 10}, {{7, 5}, 11},   // B* -> C*
        {{8, 9}, 12}, {{9, 10}, 11}, {{10, 11}, 9}, {{11, 9}, 10},// C* closure, D0
        {{12, 11}, 13}, {{13, 10}, 8},                            // E0, wraparound
    };
    auto it = table.find({a, b});
    if (it == table.end())
        throw std::logic_error("block label product is not defined for this pair");
    return it->second;
}

} // namespace detail

// Label grid of the tiling of the triangle of S1[8k]: grid row 0 holds k
// triangles (A0 then the cycle A1,A2,A3); each later row is the row of
// star products of adjacent blocks above it.
inline std::vector<std::vector<int>> assembly_labels(unsigned k) {
    std::vector<std::vector<int>> grid;
    if (k == 0) return grid;
    std::vector<int> row;
    row.push_back(0);
    for (unsigned p = 1; p < k; ++p) row.push_back(1 + int((p - 1) % 3));
    grid.push_back(row);
    while (grid.back().size() > 1) {
        const auto& prev = grid.back();
        std::vector<int> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i)
            next[i] = detail::label_product(prev[i], prev[i + 1]);
        grid.push_back(std::move(next));
    }
    return grid;
}

// Rebuilds the triangle of S1[8k] by tiling library blocks, without
// running Pascal's rule on the first row.
inline SteinhausTriangle assemble(unsigned k) {
    const BlockLibrary lib = build_library();
    const std::size_t s = 8;
    const std::size_t n = std::size_t(8) * k;
    Modulus m4(4);
    if (k == 0) return SteinhausTriangle(m4);

    constexpr residue_t unset = 0xff;
    std::vector<std::vector<residue_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i].assign(n - i, unset);

    auto paint = [&](std::size_t r, std::size_t c, residue_t v) {
        if (rows[r][c] != unset)
            throw std::logic_error("assembly painted a cell twice");
        rows[r][c] = v;
    };

    const auto grid = assembly_labels(k);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (std::size_t p = 0; p < grid[g].size(); ++p) {
            const Block& blk = lib.blocks[std::size_t(grid[g][p])];
            const std::size_t c0 = s * p;
            if (g == 0) {
                for (std::size_t r = 0; r < s; ++r)
                    for (std::size_t t = 0; t + r < s; ++t)
                        paint(r, c0 + t, blk.rows()[r][t]);
            } else {
                // widening half: rows (g-1)s+1 .. gs, right-aligned at c0+s-1
                for (std::size_t r = 1; r <= s; ++r)
                    for (std::size_t t = 0; t < r; ++t)
                        paint((g - 1) * s + r, c0 + s - r + t, blk.rows()[r - 1][t]);
                // narrowing half: rows gs+1 .. gs+s-1, left-aligned at c0
                for (std::size_t r = 1; r < s; ++r)
                    for (std::size_t t = 0; t < s - r; ++t)
                        paint(g * s + r, c0 + t, blk.rows()[s - 1 + r][t]);
            }
        }
    }
    for (const auto& row : rows)
        for (residue_t v : row)
            if (v == unset)
                throw std::logic_error("assembly left a cell unpainted");
    return SteinhausTriangle(m4, std::move(rows));
}

// The structural facts the tiling rests on: four pairs of blocks share
// both lower edges, and the induced star identities close the C cycle.
inline bool verify_edge_coincidences(const BlockLibrary& lib) {
    auto same_edges = [&](std::string_view x, std::string_view y) {
        const Block& bx = lib.at(x);
        const Block& by = lib.at(y);
        return bx.lower_left_edge() == by.lower_left_edge() &&
               bx.lower_right_edge() == by.lower_right_edge();
    };
    if (!same_edges("C1", "B3") || !same_edges("C2", "B1") ||
        !same_edges("C3", "B2") || !same_edges("E0", "B0"))
        return false;
    return star(lib.at("C1"), lib.at("C2")) == lib.at("C3") &&
           star(lib.at("C2"), lib.at("C3")) == lib.at("C1") &&
           star(lib.at("C3"), lib.at("C1")) == lib.at("C2") &&
           star(lib.at("E0"), lib.at("C2")) == lib.at("C0");
}

// Per-residue count of the width-8 eastern band of the S1 triangle at
// step k, predicted from the tiling: 41, 57 or 73 plus 48(q-1) according
// to k = 3q, 3q+1, 3q+2.  Cross-checked against the incremental band.
inline MultiplicityVector band_case_formula(unsigned k) {
    if (k < 3)
        throw std::invalid_argument("band case formulas need k >= 3");
    unsigned q = k / 3;
    unsigned base = k % 3 == 0 ? 41 : k % 3 == 1 ? 57 : 73;
    std::uint64_t value = base + std::uint64_t(48) * (q - 1);

    MultiplicityVector predicted{Modulus(4)};
    predicted.counts.assign(4, value);

    const EventuallyPeriodicSequence& s1 = catalog_entry("S1").sequence;
    EasternState st = eastern_state(build_triangle(prefix(s1, 8 * (std::size_t(k) - 1))));
    ModSequence fresh(Modulus(4));
    for (std::size_t i = 8 * (std::size_t(k) - 1); i < 8 * std::size_t(k); ++i)
        fresh.push_back(s1.at(i));
    auto [band, next] = extend_band(st, fresh);
    if (!(band == predicted))
        throw std::runtime_error("band case formula disagrees with the measured band");
    return predicted;
}

// Centered text rendering of a block, matching the triangle layout.
inline std::string render(const Block& b) {
    std::string out;
    std::size_t s = b.side();
    for (const auto& row : b.rows()) {
        out.append(s - row.size(), ' ');
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += char('0' + row[j]);
        }
        out += '\n';
    }
    return out;
}

// Multiplicity table as CSV, blocks as columns.
inline std::string multiplicity_table_csv(const BlockLibrary& lib) {
    std::string out = "residue";
    for (const auto& name : block_names()) out += "," + name;
    out += '\n';
    auto mv = block_multiplicities(lib);
    for (unsigned j = 0; j < 4; ++j) {
        out += std::to_string(j);
        for (const auto& m : mv) out += "," + std::to_string(m.counts[j]);
        out += '\n';
    }
    return out;
}

} // namespace steintri
