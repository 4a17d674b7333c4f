#pragma once

// Steinhaus triangles over Z/m.  A triangle is generated from its first
// row by Pascal's rule: every cell below the first row is the sum of the
// two cells above it, reduced mod m.
//
// Balance checks stream rows (or the eastern diagonal) without storing
// the whole triangle; triangles are materialized only on demand.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steintri/residues.hpp"

namespace steintri {

// Occurrence counts per residue of Z/m.  Counters are 64-bit so they can
// aggregate census-scale multisets.
struct MultiplicityVector {
    Modulus modulus;
    std::vector<std::uint64_t> counts;

    explicit MultiplicityVector(Modulus m) : modulus(m), counts(m.value(), 0) {}

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }

    bool uniform() const {
        for (auto c : counts)
            if (c != counts[0]) return false;
        return true;
    }

    MultiplicityVector& operator+=(const MultiplicityVector& o) {
        if (modulus != o.modulus)
            throw std::invalid_argument("multiplicity vectors disagree on modulus");
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
        return *this;
    }

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
        return a.modulus == b.modulus && a.counts == b.counts;
    }
};

class SteinhausTriangle {
public:
    explicit SteinhausTriangle(Modulus m) : mod_(m) {}

    SteinhausTriangle(Modulus m, std::vector<std::vector<residue_t>> rows)
        : mod_(m), rows_(std::move(rows)) {}

    Modulus modulus() const { return mod_; }
    std::size_t side() const { return rows_.empty() ? 0 : rows_.front().size(); }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<residue_t>& row(std::size_t i) const { return rows_[i]; }
    const std::vector<std::vector<residue_t>>& rows() const { return rows_; }

    std::uint64_t cell_count() const {
        std::uint64_t n = side();
        return n * (n + 1) / 2;
    }

    ModSequence first_row() const {
        if (rows_.empty()) return ModSequence(mod_);
        return ModSequence(mod_, rows_.front());
    }

    // Rightmost entry of each row, top to bottom.
    std::vector<residue_t> eastern_diagonal() const {
        std::vector<residue_t> d;
        d.reserve(rows_.size());
        for (const auto& r : rows_) d.push_back(r.back());
        return d;
    }

    // True iff the shape is complete (rows n, n-1, ..., 1) and every cell
    // below the first row obeys Pascal's rule.
    bool satisfies_pascal() const {
        if (rows_.empty()) return true;
        if (rows_.size() != side()) return false;
        unsigned m = mod_.value();
        for (std::size_t i = 1; i < rows_.size(); ++i) {
            if (rows_[i].size() + 1 != rows_[i - 1].size()) return false;
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                unsigned v = rows_[i - 1][j] + rows_[i - 1][j + 1];
                if (v >= m) v -= m;
                if (rows_[i][j] != v) return false;
            }
        }
        return true;
    }

    friend bool operator==(const SteinhausTriangle& a, const SteinhausTriangle& b) {
        return a.mod_ == b.mod_ && a.rows_ == b.rows_;
    }

private:
    Modulus mod_;
    std::vector<std::vector<residue_t>> rows_;
};

inline SteinhausTriangle build_triangle(const ModSequence& s) {
    unsigned m = s.modulus().value();
    std::vector<std::vector<residue_t>> rows;
    if (!s.empty()) {
        rows.reserve(s.size());
        rows.push_back(s.entries());
        while (rows.back().size() > 1) {
            const auto& prev = rows.back();
            std::vector<residue_t> next(prev.size() - 1);
            for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
                unsigned v = prev[j] + prev[j + 1];
                next[j] = static_cast<residue_t>(v >= m ? v - m : v);
            }
            rows.push_back(std::move(next));
        }
    }
    return SteinhausTriangle(s.modulus(), std::move(rows));
}

inline MultiplicityVector multiplicities(const SteinhausTriangle& t) {
    MultiplicityVector mv(t.modulus());
    for (const auto& r : t.rows())
        for (residue_t x : r) ++mv.counts[x];
    return mv;
}

// Multiplicities of the triangle generated by s, streaming rows without
// materializing the triangle.
inline MultiplicityVector triangle_multiplicities(const ModSequence& s) {
    MultiplicityVector mv(s.modulus());
    unsigned m = s.modulus().value();
    std::vector<residue_t> row = s.entries(), next;
    while (!row.empty()) {
        for (residue_t x : row) ++mv.counts[x];
        if (row.size() == 1) break;
        next.resize(row.size() - 1);
        for (std::size_t j = 0; j + 1 < row.size(); ++j) {
            unsigned v = row[j] + row[j + 1];
            next[j] = static_cast<residue_t>(v >= m ? v - m : v);
        }
        row.swap(next);
    }
    return mv;
}

inline MultiplicityVector multiplicities(const ModSequence& multiset) {
    MultiplicityVector mv(multiset.modulus());
    for (residue_t x : multiset) ++mv.counts[x];
    return mv;
}

// Necessary length condition: m divides the triangle cell count n(n+1)/2.
inline bool admissible_length(std::uint64_t n, Modulus m) {
    using u128 = unsigned __int128;
    return (u128(n) * (n + 1) / 2) % m.value() == 0;
}

inline bool is_balanced(const ModSequence& s) {
    return triangle_multiplicities(s).uniform();
}

// Strong balance (even m only): the triangle of every prefix whose length
// differs from n by a multiple of 2m is balanced.
inline bool is_strongly_balanced(const ModSequence& s) {
    if (!s.modulus().even())
        throw std::domain_error("strong balance is defined for even moduli only");
    std::size_t n = s.size();
    std::size_t stride = 2 * s.modulus().value();
    for (std::size_t t = 0; t * stride <= n; ++t)
        if (!is_balanced(prefix(s, n - t * stride)))
            return false;
    return true;
}

// Eastern diagonal of a growing triangle: the rightmost entry of each row.
// Appending one first-row symbol creates exactly one new diagonal, which
// is computable from the previous one in O(n); that makes the diagonal
// sufficient state for incremental band accounting.
struct EasternState {
    Modulus modulus;
    std::vector<residue_t> diagonal;

    explicit EasternState(Modulus m) : modulus(m) {}
    EasternState(Modulus m, std::vector<residue_t> d) : modulus(m), diagonal(std::move(d)) {}

    std::size_t length() const { return diagonal.size(); }

    friend bool operator==(const EasternState& a, const EasternState& b) {
        return a.modulus == b.modulus && a.diagonal == b.diagonal;
    }
};

inline EasternState eastern_state(const SteinhausTriangle& t) {
    return EasternState(t.modulus(), t.eastern_diagonal());
}

namespace detail {

// Appends one symbol to the first row: writes the new eastern diagonal of
// length len+1 into out and bumps counts for every new cell.  diag and out
// may not alias.
inline void extend_diagonal(const residue_t* diag, std::size_t len, residue_t symbol,
                            unsigned m, residue_t* out, std::uint64_t* counts) {
    residue_t prev = symbol;
    out[0] = prev;
    ++counts[prev];
    for (std::size_t i = 0; i < len; ++i) {
        unsigned v = diag[i] + prev;
        prev = static_cast<residue_t>(v >= m ? v - m : v);
        out[i + 1] = prev;
        ++counts[prev];
    }
}

} // namespace detail

// Appends one first-row symbol in place; the cells the append introduces
// are counted into `added`.
inline void append_symbol(EasternState& state, residue_t symbol, MultiplicityVector& added) {
    if (symbol >= state.modulus.value())
        throw std::invalid_argument("symbol not reduced mod m");
    std::vector<residue_t> next(state.diagonal.size() + 1);
    detail::extend_diagonal(state.diagonal.data(), state.diagonal.size(), symbol,
                            state.modulus.value(), next.data(), added.counts.data());
    state.diagonal.swap(next);
}

// Extends a triangle of side n by the fresh symbols and returns the
// multiset difference (the width-w band bordering the eastern side)
// together with the eastern state of the extended triangle.  Runs in
// O((n+w)*w) without rebuilding the triangle.
inline std::pair<MultiplicityVector, EasternState>
extend_band(const EasternState& state, const ModSequence& fresh) {
    if (state.modulus != fresh.modulus())
        throw std::invalid_argument("band extension disagrees on modulus");
    EasternState next = state;
    MultiplicityVector band(state.modulus);
    for (residue_t c : fresh)
        append_symbol(next, c, band);
    return {std::move(band), std::move(next)};
}

// balanced(s[l]) for every prefix length l = 0..n, computed in one O(n^2)
// diagonal sweep.  Index l of the result answers for the length-l prefix.
inline std::vector<bool> balance_profile(const ModSequence& s) {
    std::vector<bool> out;
    out.reserve(s.size() + 1);
    out.push_back(true);  // empty triangle
    EasternState st(s.modulus());
    MultiplicityVector mv(s.modulus());
    for (std::size_t l = 0; l < s.size(); ++l) {
        append_symbol(st, s[l], mv);
        out.push_back(mv.uniform());
    }
    return out;
}

// Centered text rendering, one triangle row per line.
inline std::string render(const SteinhausTriangle& t) {
    unsigned digits = 1;
    for (unsigned v = t.modulus().value() - 1; v >= 10; v /= 10) ++digits;
    std::string out;
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        out.append(i * (digits + 1) / 2, ' ');
        const auto& row = t.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            std::string cell = std::to_string(unsigned(row[j]));
            out.append(digits - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace steintri
