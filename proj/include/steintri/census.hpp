#pragma once

// Exhaustive census of balanced first rows over Z/m at a given length,
// with orbit counting under row reversal and unit multiplication.
//
// The enumeration walks the m^n first rows as a tree, carrying the
// eastern diagonal and the running multiset counts of the partial
// triangle down each path.  A branch dies as soon as one residue exceeds
// the equal share n(n+1)/(2m), so a full triangle is never built; a leaf
// that survives to depth n is balanced automatically because the counts
// sum to exactly m times the share.  Subtrees below a fixed prefix are
// independent, which gives the prefix-partitioned parallel mode.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "steintri/residues.hpp"
#include "steintri/triangle.hpp"

namespace steintri {

struct CensusGroup {
    bool reversal = true;
    std::vector<residue_t> units;  // must contain 1; empty means all units of Z/m

    std::vector<residue_t> resolved_units(Modulus m) const {
        if (units.empty()) return m.units();
        return units;
    }

    std::string describe(Modulus m) const {
        std::string s = reversal ? "reversal x units{" : "units{";
        auto us = resolved_units(m);
        for (std::size_t i = 0; i < us.size(); ++i)
            s += (i ? "," : "") + std::to_string(unsigned(us[i]));
        return s + "}";
    }

    std::size_t order(Modulus m) const {
        return (reversal ? 2 : 1) * resolved_units(m).size();
    }
};

struct CensusOptions {
    unsigned partitions = 1;
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t budget = std::uint64_t(1) << 34;
    bool force = false;    // run even when m^n exceeds the budget
    bool want_orbits = false;
    CensusGroup group{};
    std::uint64_t sample_limit = 0;
    bool shortcircuit_inadmissible = true;
    std::function<void(std::uint64_t /*done*/, std::uint64_t /*total*/)> progress;
};

struct CensusReport {
    unsigned modulus = 0;
    unsigned length = 0;
    std::uint64_t total_sequences = 0;
    std::uint64_t balanced_count = 0;
    std::optional<std::uint64_t> orbit_count;
    std::string group;
    double elapsed_seconds = 0.0;
    std::uint64_t nodes_visited = 0;
    unsigned partitions_used = 1;
    bool shortcircuited = false;
    std::vector<ModSequence> samples;
};

namespace detail {

struct CensusTally {
    std::uint64_t balanced = 0;
    std::uint64_t canonical = 0;
    std::uint64_t nodes = 0;
    std::vector<std::vector<residue_t>> samples;
};

// True iff the path is the lexicographic minimum of its orbit under the
// chosen units and (optionally) reversal.
inline bool is_canonical(const residue_t* path, std::size_t n, unsigned m,
                         const std::vector<residue_t>& units, bool reversal) {
    for (residue_t u : units) {
        for (std::size_t i = 0; i < n; ++i) {
            residue_t v = static_cast<residue_t>((unsigned(u) * path[i]) % m);
            if (v < path[i]) return false;
            if (v > path[i]) break;
        }
        if (reversal) {
            for (std::size_t i = 0; i < n; ++i) {
                residue_t v = static_cast<residue_t>((unsigned(u) * path[n - 1 - i]) % m);
                if (v < path[i]) return false;
                if (v > path[i]) break;
            }
        }
    }
    return true;
}

struct CensusJob {
    unsigned m;
    unsigned n;
    std::uint32_t target;
    bool want_orbits;
    std::vector<residue_t> units;
    bool reversal;
    std::uint64_t sample_limit;
};

// Enumerates the subtree below `prefix`, accumulating into `tally`.
inline void census_walk(const CensusJob& job, const std::vector<residue_t>& prefix,
                        CensusTally& tally) {
    const unsigned m = job.m;
    const unsigned n = job.n;
    std::vector<std::vector<residue_t>> diag(n + 1);
    std::vector<std::vector<std::uint32_t>> cnt(n + 1, std::vector<std::uint32_t>(m, 0));
    for (auto& d : diag) d.resize(n);
    std::vector<residue_t> path(n, 0);

    // carry the fixed prefix down first
    std::size_t depth = 0;
    for (residue_t c : prefix) {
        cnt[depth + 1] = cnt[depth];
        bool ok = true;
        residue_t prev = c;
        diag[depth + 1][0] = prev;
        if (++cnt[depth + 1][prev] > job.target) ok = false;
        for (std::size_t i = 0; ok && i < depth; ++i) {
            unsigned v = diag[depth][i] + prev;
            prev = static_cast<residue_t>(v >= m ? v - m : v);
            diag[depth + 1][i + 1] = prev;
            if (++cnt[depth + 1][prev] > job.target) ok = false;
        }
        if (!ok) return;  // the whole subtree is pruned
        path[depth] = c;
        ++depth;
        ++tally.nodes;
    }

    auto dfs = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            ++tally.balanced;
            if (job.want_orbits &&
                is_canonical(path.data(), n, m, job.units, job.reversal))
                ++tally.canonical;
            if (tally.samples.size() < job.sample_limit)
                tally.samples.push_back(path);
            return;
        }
        const residue_t* d = diag[j].data();
        residue_t* nd = diag[j + 1].data();
        for (unsigned c = 0; c < m; ++c) {
            cnt[j + 1] = cnt[j];
            std::uint32_t* k = cnt[j + 1].data();
            residue_t prev = static_cast<residue_t>(c);
            nd[0] = prev;
            bool ok = ++k[prev] <= job.target;
            for (std::size_t i = 0; ok && i < j; ++i) {
                unsigned v = d[i] + prev;
                prev = static_cast<residue_t>(v >= m ? v - m : v);
                nd[i + 1] = prev;
                ok = ++k[prev] <= job.target;
            }
            if (!ok) continue;
            ++tally.nodes;
            path[j] = static_cast<residue_t>(c);
            self(self, j + 1);
        }
    };
    dfs(dfs, depth);
}

inline std::uint64_t checked_pow(unsigned m, unsigned n) {
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < n; ++i) {
        v *= m;
        if (v > (unsigned __int128)UINT64_MAX)
            throw std::runtime_error("m^n does not fit in 64 bits");
    }
    return std::uint64_t(v);
}

} // namespace detail

// Exact count of length-n first rows whose triangle is balanced, plus
// optional orbit counting and lexicographic samples.
inline CensusReport count_balanced(Modulus m, unsigned n, const CensusOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    CensusReport rep;
    rep.modulus = m.value();
    rep.length = n;
    rep.group = opt.group.describe(m);
    rep.total_sequences = detail::checked_pow(m.value(), n);

    auto finish = [&](CensusReport& r) -> CensusReport& {
        r.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };

    if (n == 0) {
        rep.balanced_count = 1;  // the empty triangle is balanced
        if (opt.want_orbits) rep.orbit_count = 1;
        if (opt.sample_limit > 0) rep.samples.push_back(ModSequence(m));
        return finish(rep);
    }
    if (opt.shortcircuit_inadmissible && !admissible_length(n, m)) {
        rep.shortcircuited = true;
        rep.balanced_count = 0;
        if (opt.want_orbits) rep.orbit_count = 0;
        return finish(rep);
    }
    if (rep.total_sequences > opt.budget && !opt.force)
        throw std::runtime_error("census budget exceeded: " + std::to_string(m.value()) + "^" +
                                 std::to_string(n) + " = " + std::to_string(rep.total_sequences) +
                                 " leaves > budget " + std::to_string(opt.budget));

    detail::CensusJob job;
    job.m = m.value();
    job.n = n;
    std::uint64_t cells = std::uint64_t(n) * (n + 1) / 2;
    job.target = std::uint32_t(cells / m.value());  // admissible => exact
    job.want_orbits = opt.want_orbits;
    job.units = opt.group.resolved_units(m);
    job.reversal = opt.group.reversal;
    job.sample_limit = opt.sample_limit;

    // prefix depth giving at least the requested number of partitions
    unsigned depth = 0;
    std::uint64_t buckets = 1;
    while (buckets < opt.partitions && depth < n) {
        buckets *= m.value();
        ++depth;
    }
    std::vector<std::vector<residue_t>> prefixes;
    prefixes.reserve(buckets);
    {
        std::vector<residue_t> p(depth, 0);
        for (std::uint64_t i = 0; i < buckets; ++i) {
            std::uint64_t v = i;
            for (unsigned d = depth; d-- > 0;) {
                p[d] = static_cast<residue_t>(v % m.value());
                v /= m.value();
            }
            prefixes.push_back(p);
        }
    }
    rep.partitions_used = unsigned(buckets);

    std::vector<detail::CensusTally> tallies(prefixes.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> done{0};
    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, unsigned(prefixes.size()));

    auto work = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < prefixes.size(); i = cursor.fetch_add(1)) {
            detail::census_walk(job, prefixes[i], tallies[i]);
            std::uint64_t d = done.fetch_add(1) + 1;
            if (opt.progress) opt.progress(d, prefixes.size());
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::uint64_t canonical = 0;
    for (auto& t : tallies) {
        rep.balanced_count += t.balanced;
        canonical += t.canonical;
        rep.nodes_visited += t.nodes;
        for (auto& s : t.samples)
            if (rep.samples.size() < opt.sample_limit)
                rep.samples.emplace_back(m, std::move(s));
    }
    if (opt.want_orbits) rep.orbit_count = canonical;
    return finish(rep);
}

// Orbit count of the balanced set under the given symmetry group, by
// counting lexicographically minimal representatives.
inline std::uint64_t orbit_count(Modulus m, unsigned n, const CensusGroup& group,
                                 CensusOptions opt = {}) {
    opt.want_orbits = true;
    opt.group = group;
    return *count_balanced(m, n, opt).orbit_count;
}

// First `limit` balanced sequences in lexicographic order.
inline std::vector<ModSequence> sample_balanced(Modulus m, unsigned n, std::uint64_t limit,
                                                CensusOptions opt = {}) {
    opt.sample_limit = limit;
    return count_balanced(m, n, opt).samples;
}

} // namespace steintri
