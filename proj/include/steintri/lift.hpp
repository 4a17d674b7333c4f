#pragma once

// Lift search: counting and enumerating the sequences over Z/2m that
// project entrywise onto a given sequence over Z/m and generate strongly
// balanced triangles, together with the generating function of those
// counts.
//
// Strong balance over the target Z/2m constrains only prefix lengths in a
// fixed class mod w = 4m, so the search advances a full stride between
// checks.  Each surviving candidate carries only its entries and the
// eastern diagonal of its triangle; the width-w band a stride adds is
// accumulated incrementally and a candidate is abandoned as soon as one
// residue exceeds the equal share the band must reach.  Survivors of the
// band test are exactly the strongly balanced lifts, because a uniform
// band on top of a balanced triangle keeps it balanced and the first
// checkpoint's band is the whole triangle.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "steintri/residues.hpp"
#include "steintri/triangle.hpp"

namespace steintri {

struct TailInfo {
    std::uint64_t start;     // first exponent of the constant run
    std::uint64_t stride;    // checkpoint stride
    std::uint64_t constant;  // the repeated coefficient

    friend bool operator==(const TailInfo& a, const TailInfo& b) {
        return a.start == b.start && a.stride == b.stride && a.constant == b.constant;
    }
};

// Coefficient list of the lift-count generating function, at every
// admissible exponent up to the horizon.  A detected constant tail is a
// heuristic annotation, never a proof.
struct GenFunction {
    std::string sequence;
    unsigned source_modulus = 0;
    unsigned target_modulus = 0;
    unsigned stride = 0;  // checkpoint stride 2 * target_modulus
    std::uint64_t horizon = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> coefficients;  // (n, a_n), n ascending
    std::optional<TailInfo> tail;

    std::uint64_t coefficient(std::uint64_t n) const {
        for (const auto& [e, a] : coefficients)
            if (e == n) return a;
        return 0;
    }
};

namespace detail {

struct LiftCandidate {
    std::vector<residue_t> entries;   // the lift prefix, mod 2m
    std::vector<residue_t> diagonal;  // eastern diagonal of its triangle
};

// Extends a diagonal by one symbol while accumulating band counts;
// abandons the extension as soon as a count passes `limit`.
inline bool extend_diagonal_limited(const residue_t* diag, std::size_t len, residue_t symbol,
                                    unsigned m, residue_t* out, std::uint32_t* counts,
                                    std::uint32_t limit) {
    residue_t prev = symbol;
    out[0] = prev;
    if (++counts[prev] > limit) return false;
    for (std::size_t i = 0; i < len; ++i) {
        unsigned v = diag[i] + prev;
        prev = static_cast<residue_t>(v >= m ? v - m : v);
        out[i + 1] = prev;
        if (++counts[prev] > limit) return false;
    }
    return true;
}

struct StrideScratch {
    std::vector<std::vector<residue_t>> diag;    // per-depth diagonals
    std::vector<std::vector<std::uint32_t>> cnt; // per-depth band counts

    StrideScratch(std::size_t width, std::size_t max_len, unsigned M)
        : diag(width + 1), cnt(width + 1, std::vector<std::uint32_t>(M, 0)) {
        for (auto& d : diag) d.resize(max_len + width + 1);
    }
};

// All surviving one-stride extensions of a candidate, in lexicographic
// order of the appended entries.  `base` holds the source symbols of the
// stride; each has the two preimages base[j] and base[j] + m.
inline void extend_candidate(const LiftCandidate& cand, const std::vector<residue_t>& base,
                             unsigned m, unsigned M, std::uint32_t target,
                             StrideScratch& scratch, std::vector<LiftCandidate>& out) {
    const std::size_t width = base.size();
    scratch.diag[0].assign(cand.diagonal.begin(), cand.diagonal.end());
    std::fill(scratch.cnt[0].begin(), scratch.cnt[0].end(), 0u);
    std::vector<residue_t> picked(width, 0);

    auto dfs = [&](auto&& self, std::size_t j, std::size_t len) -> void {
        if (j == width) {
            LiftCandidate next;
            next.entries = cand.entries;
            next.entries.insert(next.entries.end(), picked.begin(), picked.end());
            next.diagonal.assign(scratch.diag[width].begin(), scratch.diag[width].begin() + long(len));
            out.push_back(std::move(next));
            return;
        }
        for (unsigned lifted : {unsigned(base[j]), unsigned(base[j]) + m}) {
            scratch.cnt[j + 1] = scratch.cnt[j];
            if (!extend_diagonal_limited(scratch.diag[j].data(), len,
                                         static_cast<residue_t>(lifted), M,
                                         scratch.diag[j + 1].data(),
                                         scratch.cnt[j + 1].data(), target))
                continue;
            picked[j] = static_cast<residue_t>(lifted);
            self(self, j + 1, len + 1);
        }
    };
    dfs(dfs, 0, cand.diagonal.size());
}

// One checkpoint step of the frontier.  Candidate extension is
// independent per candidate, so work may be split across threads; the
// per-candidate survivor lists are concatenated in candidate order, which
// preserves global lexicographic order.
inline std::vector<LiftCandidate> advance_frontier(const std::vector<LiftCandidate>& frontier,
                                                   const std::vector<residue_t>& base,
                                                   unsigned m, unsigned M,
                                                   std::uint32_t target, unsigned threads) {
    const std::size_t count = frontier.size();
    std::vector<std::vector<LiftCandidate>> results(count);
    const std::size_t max_len = count ? frontier.front().entries.size() : 0;

    auto work = [&](std::atomic<std::size_t>& next) {
        StrideScratch scratch(base.size(), max_len, M);
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            extend_candidate(frontier[i], base, m, M, target, scratch, results[i]);
    };

    std::atomic<std::size_t> cursor{0};
    if (threads <= 1 || count <= 1) {
        work(cursor);
    } else {
        std::vector<std::thread> pool;
        unsigned use = std::min<unsigned>(threads, unsigned(count));
        pool.reserve(use);
        for (unsigned t = 0; t < use; ++t)
            pool.emplace_back([&] { work(cursor); });
        for (auto& t : pool) t.join();
    }

    std::vector<LiftCandidate> merged;
    for (auto& r : results)
        merged.insert(merged.end(), std::make_move_iterator(r.begin()),
                      std::make_move_iterator(r.end()));
    return merged;
}

inline void require_liftable(Modulus m) {
    if (!m.even())
        throw std::domain_error("lift search needs an even source modulus");
}

// Checkpoint classes mod w that admissible lengths can occupy; {0, w-1}
// when the target modulus is a power of two.
inline std::vector<unsigned> checkpoint_offsets(unsigned target, unsigned stride) {
    std::vector<unsigned> offsets;
    for (unsigned r = 0; r < stride; ++r)
        if (admissible_length(r, Modulus(target)))
            offsets.push_back(r);
    return offsets;
}

} // namespace detail

inline std::uint64_t default_lift_horizon(Modulus source) {
    return source.value() == 2 ? 256 : 128;
}

struct LiftOptions {
    std::uint64_t horizon = 0;          // 0: default per source modulus
    unsigned threads = 1;
    std::uint64_t frontier_cap = 1u << 20;
};

// The number a_n of strongly balanced lifts of each admissible prefix
// length n <= horizon, as a generating-function coefficient list.
// a_0 is 1 for every sequence: the empty lift is vacuously strongly
// balanced.
inline GenFunction count_lifts(const EventuallyPeriodicSequence& S,
                               const LiftOptions& opt = {}) {
    detail::require_liftable(S.modulus());
    const unsigned m = S.modulus().value();
    const unsigned M = 2 * m;
    const unsigned w = 2 * M;
    const std::uint64_t horizon = opt.horizon ? opt.horizon : default_lift_horizon(S.modulus());

    GenFunction g;
    g.source_modulus = m;
    g.target_modulus = M;
    g.stride = w;
    g.horizon = horizon;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> coeffs;
    for (unsigned offset : detail::checkpoint_offsets(M, w)) {
        std::vector<detail::LiftCandidate> frontier{detail::LiftCandidate{}};
        std::uint64_t prev = 0;
        if (offset == 0)
            coeffs.emplace_back(0, 1);
        std::uint64_t next = offset == 0 ? w : offset;
        while (next <= horizon) {
            if (!frontier.empty()) {
                std::vector<residue_t> base;
                base.reserve(std::size_t(next - prev));
                for (std::uint64_t i = prev; i < next; ++i)
                    base.push_back(S.at(std::size_t(i)));
                std::uint64_t cells = next * (next + 1) / 2 - prev * (prev + 1) / 2;
                frontier = detail::advance_frontier(frontier, base, m, M,
                                                    std::uint32_t(cells / M), opt.threads);
                if (frontier.size() > opt.frontier_cap)
                    throw std::runtime_error("lift frontier exceeded its cap");
            }
            coeffs.emplace_back(next, frontier.size());
            prev = next;
            next += w;
        }
    }
    std::sort(coeffs.begin(), coeffs.end());
    g.coefficients = std::move(coeffs);
    return g;
}

// The surviving lift prefixes of length n, lexicographically sorted.
// Empty whenever a_n = 0; the single empty sequence for n = 0.
inline std::vector<ModSequence> enumerate_lifts(const EventuallyPeriodicSequence& S,
                                                std::uint64_t n, const LiftOptions& opt = {}) {
    detail::require_liftable(S.modulus());
    const unsigned m = S.modulus().value();
    const unsigned M = 2 * m;
    const unsigned w = 2 * M;
    Modulus target(M);

    if (n == 0) return {ModSequence(target)};
    if (!admissible_length(n, target)) return {};

    const unsigned offset = unsigned(n % w);
    std::vector<detail::LiftCandidate> frontier{detail::LiftCandidate{}};
    std::uint64_t prev = 0;
    std::uint64_t next = offset == 0 ? w : offset;
    while (next <= n && !frontier.empty()) {
        std::vector<residue_t> base;
        for (std::uint64_t i = prev; i < next; ++i)
            base.push_back(S.at(std::size_t(i)));
        std::uint64_t cells = next * (next + 1) / 2 - prev * (prev + 1) / 2;
        frontier = detail::advance_frontier(frontier, base, m, M,
                                            std::uint32_t(cells / M), opt.threads);
        if (frontier.size() > opt.frontier_cap)
            throw std::runtime_error("lift frontier exceeded its cap");
        prev = next;
        next += w;
    }
    std::vector<ModSequence> out;
    out.reserve(frontier.size());
    for (const auto& c : frontier)
        out.emplace_back(target, c.entries);
    return out;
}

// Independent oracle: counts lifts by enumerating all 2^n entrywise
// preimages and testing strong balance directly, with none of the
// incremental machinery.
inline std::uint64_t brute_force_lifts(const EventuallyPeriodicSequence& S, unsigned n) {
    detail::require_liftable(S.modulus());
    if (n > 24)
        throw std::invalid_argument("brute-force lift count is capped at n = 24");
    const unsigned m = S.modulus().value();
    Modulus target(2 * m);
    ModSequence base = prefix(S, n);

    std::uint64_t found = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<residue_t> entries(n);
        for (unsigned i = 0; i < n; ++i)
            entries[i] = static_cast<residue_t>(base[i] + ((mask >> i) & 1 ? m : 0));
        if (is_strongly_balanced(ModSequence(target, std::move(entries))))
            ++found;
    }
    return found;
}

// Annotates g with a conjectural constant tail: within one checkpoint
// class, the trailing run of a constant positive coefficient must cover
// at least `window` checkpoints ending at the horizon.  Reports the
// longest such run.
inline GenFunction detect_tail(GenFunction g, unsigned window = 8) {
    if (window < 2)
        throw std::invalid_argument("tail detection window must be at least 2");
    g.tail.reset();
    std::size_t best_run = 0;
    for (unsigned offset = 0; offset < g.stride; ++offset) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> family;
        for (const auto& c : g.coefficients)
            if (c.first % g.stride == offset)
                family.push_back(c);
        if (family.size() < window) continue;
        const std::uint64_t value = family.back().second;
        if (value == 0) continue;
        std::size_t run = 0;
        while (run < family.size() && family[family.size() - 1 - run].second == value)
            ++run;
        if (run >= window && run > best_run) {
            best_run = run;
            g.tail = TailInfo{family[family.size() - run].first, g.stride, value};
        }
    }
    return g;
}

} // namespace steintri
