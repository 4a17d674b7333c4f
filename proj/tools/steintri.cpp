// Command-line front end: triangles, balance checks, the block library,
// lift searches, censuses and the bundled verification claims.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "steintri/blocks.hpp"
#include "steintri/catalog.hpp"
#include "steintri/census.hpp"
#include "steintri/claims.hpp"
#include "steintri/jsonio.hpp"
#include "steintri/lift.hpp"
#include "steintri/triangle.hpp"

namespace {

using namespace steintri;

// Resolves a sequence argument: a catalog name or a literal `INIT(PERIOD)`.
ParsedSequence resolve_sequence(const std::string& text, unsigned modulus) {
    if (is_catalog_name(text))
        return catalog_entry(text).sequence;
    if (modulus == 0)
        throw CLI::ValidationError("--modulus is required for literal sequences");
    return parse_sequence(text, Modulus(modulus));
}

ModSequence resolve_finite(const std::string& text, unsigned modulus, std::uint64_t len,
                           bool has_len) {
    ParsedSequence s = resolve_sequence(text, modulus);
    if (std::holds_alternative<ModSequence>(s)) {
        const auto& fin = std::get<ModSequence>(s);
        return has_len ? prefix(fin, std::size_t(len)) : fin;
    }
    if (!has_len)
        throw CLI::ValidationError("--prefix is required for eventually periodic sequences");
    return prefix(std::get<EventuallyPeriodicSequence>(s), std::size_t(len));
}

// `0..50` or a single integer.
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        unsigned v = unsigned(std::stoul(text));
        return {v, v};
    }
    return {unsigned(std::stoul(text.substr(0, dots))),
            unsigned(std::stoul(text.substr(dots + 2)))};
}

int cmd_triangle(const std::string& seq, unsigned modulus, std::uint64_t len, bool has_len,
                 const std::string& format, bool no_render) {
    ModSequence row = resolve_finite(seq, modulus, len, has_len);
    SteinhausTriangle t = build_triangle(row);
    MultiplicityVector mv = multiplicities(t);
    if (format == "json") {
        std::cout << to_json(t).dump(2) << "\n";
    } else {
        if (!no_render) std::cout << render(t);
        std::cout << "cells: " << t.cell_count() << "\n";
        std::cout << "multiplicities:";
        for (auto c : mv.counts) std::cout << ' ' << c;
        std::cout << "\nbalanced: " << (mv.uniform() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_check(const std::string& seq, unsigned modulus, const std::string& krange,
              std::vector<std::uint64_t> lengths, const std::string& format) {
    ParsedSequence parsed = resolve_sequence(seq, modulus);
    Modulus m = std::visit([](const auto& v) { return v.modulus(); }, parsed);

    // expand --k ranges into native checkpoint lengths for catalog entries
    if (!krange.empty()) {
        if (!is_catalog_name(seq))
            throw CLI::ValidationError("--k ranges need a named catalog sequence");
        const CatalogEntry& e = catalog_entry(seq);
        auto [lo, hi] = parse_range(krange);
        for (unsigned k = lo; k <= hi; ++k)
            lengths.push_back(std::uint64_t(2 * m.value()) * k + e.checkpoint_offset);
    }
    if (lengths.empty()) {
        if (!std::holds_alternative<ModSequence>(parsed))
            throw CLI::ValidationError("give --k or --length for an infinite sequence");
        lengths.push_back(std::get<ModSequence>(parsed).size());
    }

    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t l : lengths) {
        ModSequence s = prefix(parsed, std::size_t(l));
        bool adm = admissible_length(l, m);
        bool bal = is_balanced(s);
        bool strong = m.even() ? is_strongly_balanced(s) : false;
        bool ok = m.even() ? strong : bal;
        all_ok &= ok;
        if (format == "json") {
            rows.push_back({{"length", l},
                            {"admissible", adm},
                            {"balanced", bal},
                            {"strongly_balanced", m.even() ? nlohmann::json(strong)
                                                           : nlohmann::json(nullptr)}});
        } else {
            std::cout << "n = " << l << ": admissible " << (adm ? "yes" : "no ")
                      << "  balanced " << (bal ? "yes" : "no ");
            if (m.even()) std::cout << "  strongly balanced " << (strong ? "yes" : "no ");
            std::cout << "\n";
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_blocks(bool list, const std::string& render_name, bool table, const std::string& format) {
    BlockLibrary lib = build_library();
    if (list) {
        for (const auto& n : block_names()) std::cout << n << "\n";
        return 0;
    }
    if (!render_name.empty()) {
        std::cout << render(lib.at(render_name));
        return 0;
    }
    if (table) {
        if (format == "csv") {
            std::cout << multiplicity_table_csv(lib);
        } else if (format == "json") {
            nlohmann::json j;
            auto mv = block_multiplicities(lib);
            for (std::size_t i = 0; i < block_names().size(); ++i)
                j[block_names()[i]] = to_json(mv[i]);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << multiplicity_table_csv(lib);
        }
        return 0;
    }
    for (const auto& n : block_names()) {
        std::cout << n << ":\n" << render(lib.at(n)) << "\n";
    }
    return 0;
}

int cmd_lift(const std::string& seq, unsigned modulus, std::uint64_t horizon, unsigned window,
             unsigned threads, std::uint64_t enumerate_n, bool do_enumerate,
             const std::string& format) {
    ParsedSequence parsed = resolve_sequence(seq, modulus);
    if (!std::holds_alternative<EventuallyPeriodicSequence>(parsed))
        throw CLI::ValidationError("lift search needs an eventually periodic sequence");
    const auto& s = std::get<EventuallyPeriodicSequence>(parsed);

    LiftOptions opt;
    opt.horizon = horizon;
    opt.threads = threads;

    if (do_enumerate) {
        auto lifts = enumerate_lifts(s, enumerate_n, opt);
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& l : lifts) j.push_back(to_string(l));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& l : lifts) std::cout << to_string(l) << "\n";
            std::cout << "count: " << lifts.size() << "\n";
        }
        return 0;
    }

    GenFunction g = detect_tail(count_lifts(s, opt), window);
    g.sequence = is_catalog_name(seq) ? seq : to_string(parsed);
    if (format == "json") {
        std::cout << to_json(g).dump(2) << "\n";
    } else {
        std::cout << "lift counts for " << g.sequence << " into Z/" << g.target_modulus
                  << ", horizon " << g.horizon << "\n";
        for (const auto& [n, a] : g.coefficients)
            if (a != 0) std::cout << "  a_" << n << " = " << a << "\n";
        if (g.tail)
            std::cout << "conjectured tail: " << g.tail->constant << " from n = "
                      << g.tail->start << " with stride " << g.tail->stride << "\n";
        else
            std::cout << "no constant tail detected\n";
    }
    return 0;
}

int cmd_census(unsigned modulus, unsigned length, bool orbits, std::uint64_t samples,
               unsigned partitions, unsigned threads, std::uint64_t budget, bool force,
               bool quiet, const std::string& format) {
    CensusOptions opt;
    opt.partitions = partitions;
    opt.threads = threads;
    opt.budget = budget;
    opt.force = force;
    opt.want_orbits = orbits;
    opt.sample_limit = samples;
    if (!quiet && length >= 10)
        opt.progress = [](std::uint64_t done, std::uint64_t total) {
            if (done % 8 == 0 || done == total)
                std::cerr << "\rsubtrees " << done << "/" << total << std::flush;
            if (done == total) std::cerr << "\n";
        };
    CensusReport rep = count_balanced(Modulus(modulus), length, opt);
    if (format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "modulus " << rep.modulus << ", length " << rep.length << "\n"
                  << "candidates " << rep.total_sequences << "\n"
                  << "balanced   " << rep.balanced_count << "\n";
        if (rep.orbit_count)
            std::cout << "orbits     " << *rep.orbit_count << " under " << rep.group << "\n";
        for (const auto& s : rep.samples) std::cout << "  " << to_string(s) << "\n";
        std::cout << "elapsed    " << rep.elapsed_seconds << " s ("
                  << rep.nodes_visited << " nodes, " << rep.partitions_used
                  << " partitions)\n";
    }
    return 0;
}

int cmd_reproduce(std::vector<std::string> ids, bool all, bool full, bool list,
                  unsigned threads, std::uint64_t budget) {
    if (list) {
        for (const Claim& c : claim_registry())
            std::cout << c.id << (c.expensive ? "  [on demand]" : "") << "  -  " << c.summary
                      << "\n";
        return 0;
    }
    ClaimContext ctx;
    ctx.threads = threads;
    ctx.census_budget = budget;
    ctx.progress = true;
    if (all) {
        ids.clear();
        for (const Claim& c : claim_registry())
            if (!c.expensive || full) ids.push_back(c.id);
    }
    if (ids.empty())
        throw CLI::ValidationError("give claim ids, --all, or --list");
    bool ok = true;
    for (const auto& id : ids) {
        ClaimResult r = run_claim(id, ctx);
        ok &= r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  (" << r.seconds
                  << " s)  " << r.detail << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steinhaus triangle toolkit: balanced-triangle checks, block algebra, "
                 "lift searches and censuses over Z/m"};
    app.require_subcommand(1);
    std::string format = "text";

    // triangle
    auto* tri = app.add_subcommand("triangle", "build and render a Steinhaus triangle");
    std::string tri_seq;
    unsigned tri_m = 0;
    std::uint64_t tri_prefix = 0;
    bool tri_no_render = false;
    tri->add_option("sequence", tri_seq, "sequence literal or catalog name")->required();
    tri->add_option("-m,--modulus", tri_m, "modulus for literals");
    auto* tri_prefix_opt = tri->add_option("--prefix", tri_prefix, "prefix length");
    tri->add_flag("--counts-only", tri_no_render, "omit the rendering");
    tri->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // check
    auto* chk = app.add_subcommand("check", "balance / strong balance / admissibility checks");
    std::string chk_seq, chk_k;
    unsigned chk_m = 0;
    std::vector<std::uint64_t> chk_lengths;
    chk->add_option("sequence", chk_seq, "sequence literal or catalog name")->required();
    chk->add_option("-m,--modulus", chk_m, "modulus for literals");
    chk->add_option("--k", chk_k, "checkpoint index range, e.g. 0..50");
    chk->add_option("--length", chk_lengths, "explicit prefix lengths");
    chk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // blocks
    auto* blk = app.add_subcommand("blocks", "the fourteen building blocks of the S1 tiling");
    bool blk_list = false, blk_table = false;
    std::string blk_render;
    blk->add_flag("--list", blk_list, "list block names");
    blk->add_option("--render", blk_render, "render one block");
    blk->add_flag("--table1", blk_table, "emit the multiplicity table");
    blk->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    // lift
    auto* lft = app.add_subcommand("lift", "count or enumerate strongly balanced lifts");
    std::string lft_seq;
    unsigned lft_m = 0, lft_window = 8, lft_threads = 1;
    std::uint64_t lft_horizon = 0, lft_enum_n = 0;
    lft->add_option("sequence", lft_seq, "catalog name or eventually periodic literal")
        ->required();
    lft->add_option("-m,--modulus", lft_m, "modulus for literals");
    lft->add_option("--horizon", lft_horizon, "largest length to search (0: default)");
    lft->add_option("--window", lft_window, "tail detection window")->default_val(8);
    lft->add_option("--threads", lft_threads)->default_val(1);
    auto* lft_enum = lft->add_option("--enumerate", lft_enum_n, "list the lifts of this length");
    lft->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // census
    auto* cen = app.add_subcommand("census", "count balanced first rows exhaustively");
    unsigned cen_m = 0, cen_n = 0, cen_partitions = 1, cen_threads = 0;
    bool cen_orbits = false, cen_force = false, cen_quiet = false;
    std::uint64_t cen_samples = 0, cen_budget = std::uint64_t(1) << 34;
    cen->add_option("-m,--modulus", cen_m)->required();
    cen->add_option("-n,--length", cen_n)->required();
    cen->add_flag("--orbits", cen_orbits, "also count orbits under reversal x units");
    cen->add_option("--limit", cen_samples, "collect the first K balanced rows");
    cen->add_option("--partitions", cen_partitions)->default_val(1);
    cen->add_option("--threads", cen_threads, "0 = hardware");
    cen->add_option("--budget", cen_budget, "leaf budget guard");
    cen->add_flag("--force", cen_force, "override the budget guard");
    cen->add_flag("--quiet", cen_quiet, "suppress progress output");
    cen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run bundled verification claims");
    std::vector<std::string> rep_ids;
    bool rep_all = false, rep_full = false, rep_list = false;
    unsigned rep_threads = 0;
    std::uint64_t rep_budget = std::uint64_t(1) << 34;
    rep->add_option("claims", rep_ids, "claim ids (see --list)");
    rep->add_flag("--all", rep_all, "run every claim not marked on-demand");
    rep->add_flag("--full", rep_full, "with --all, include on-demand claims");
    rep->add_flag("--list", rep_list, "list available claims");
    rep->add_option("--threads", rep_threads, "0 = hardware");
    rep->add_option("--budget", rep_budget, "census leaf budget");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("STEINTRI_CENSUS_BUDGET")) {
        cen_budget = std::strtoull(env, nullptr, 10);
        rep_budget = cen_budget;
    }

    try {
        if (tri->parsed())
            return cmd_triangle(tri_seq, tri_m, tri_prefix, tri_prefix_opt->count() > 0, format,
                                tri_no_render);
        if (chk->parsed())
            return cmd_check(chk_seq, chk_m, chk_k, chk_lengths, format);
        if (blk->parsed())
            return cmd_blocks(blk_list, blk_render, blk_table, format);
        if (lft->parsed())
            return cmd_lift(lft_seq, lft_m, lft_horizon, lft_window, lft_threads, lft_enum_n,
                            lft_enum->count() > 0, format);
        if (cen->parsed())
            return cmd_census(cen_m, cen_n, cen_orbits, cen_samples, cen_partitions, cen_threads,
                              cen_budget, cen_force, cen_quiet, format);
        if (rep->parsed()) {
            unsigned threads = rep_threads ? rep_threads : std::thread::hardware_concurrency();
            return cmd_reproduce(rep_ids, rep_all, rep_full, rep_list,
                                 threads ? threads : 1, rep_budget);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
