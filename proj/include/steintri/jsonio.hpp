#pragma once

// JSON views of the public value types.  Multiplicity vectors are emitted
// as plain arrays indexed by residue.

#include "json.hpp"

#include "steintri/census.hpp"
#include "steintri/lift.hpp"
#include "steintri/triangle.hpp"

namespace steintri {

inline nlohmann::json to_json(const MultiplicityVector& mv) {
    return nlohmann::json(mv.counts);
}

inline nlohmann::json to_json(const SteinhausTriangle& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows())
        rows.push_back(std::vector<unsigned>(r.begin(), r.end()));
    return {{"modulus", t.modulus().value()},
            {"n", t.side()},
            {"rows", rows},
            {"multiplicities", to_json(multiplicities(t))},
            {"balanced", multiplicities(t).uniform()}};
}

inline nlohmann::json to_json(const GenFunction& g) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [n, a] : g.coefficients)
        coeffs.push_back({n, a});
    nlohmann::json tail;
    if (g.tail)
        tail = {{"n0", g.tail->start}, {"stride", g.tail->stride}, {"c", g.tail->constant}};
    return {{"sequence", g.sequence},
            {"modulus", g.source_modulus},
            {"target", g.target_modulus},
            {"horizon", g.horizon},
            {"coefficients", coeffs},
            {"tail", tail}};
}

inline nlohmann::json to_json(const CensusReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples)
        samples.push_back(to_string(s));
    nlohmann::json j{{"modulus", r.modulus},
                     {"length", r.length},
                     {"total_sequences", r.total_sequences},
                     {"balanced_count", r.balanced_count},
                     {"orbit_count", nullptr},
                     {"group", r.group},
                     {"elapsed_seconds", r.elapsed_seconds},
                     {"nodes_visited", r.nodes_visited},
                     {"partitions", r.partitions_used},
                     {"shortcircuited", r.shortcircuited}};
    if (r.orbit_count) j["orbit_count"] = *r.orbit_count;
    if (!samples.empty()) j["samples"] = samples;
    return j;
}

} // namespace steintri
