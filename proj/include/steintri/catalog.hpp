#pragma once

// The catalog of named residue sequences: S1, S2, T1..T4 over Z/4 and
// Q1..Q4, R1..R12 over Z/2.  Entries are embedded as literal constants so
// tests can detect transcription drift; they are parsed through the
// ordinary literal grammar.
//
// Every sequence has a native family of checkpoint lengths n with
// n == offset (mod 2m): offset 0 for S/Q entries, 2m-1 for T/R entries.

#include <algorithm>
#include <vector>

#include "steintri/residues.hpp"

namespace steintri {

struct CatalogEntry {
    std::string name;
    EventuallyPeriodicSequence sequence;
    unsigned checkpoint_offset;  // 0 or 2m-1, native checkpoint class mod 2m
    std::string projects_to;     // name of the entrywise image mod m/..2, "" if none

    Modulus modulus() const { return sequence.modulus(); }
};

inline const std::vector<CatalogEntry>& sequence_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        Modulus m4(4), m2(2);
        auto eps = [](std::string_view text, Modulus m) {
            return std::get<EventuallyPeriodicSequence>(parse_sequence(text, m));
        };
        std::vector<CatalogEntry> out;
        out.push_back({"S1", eps("01220232(212113220030232311200232)", m4), 0, "Q1"});
        out.push_back({"S2", eps("21210130(200132022112002110220130)", m4), 0, "Q3"});
        out.push_back({"T1", eps("0120021(212202102023032200322021)", m4), 7, "R3"});
        out.push_back({"T2", eps("1000212(312223301210312003103232)", m4), 7, "R10"});
        out.push_back({"T3", eps("1200210(220101222032222103000210)", m4), 7, "R9"});
        out.push_back({"T4", eps("2102203(232002102021230022302203)", m4), 7, "R3"});
        out.push_back({"Q1", eps("0100(001001011100)", m2), 0, ""});
        out.push_back({"Q2", eps("(010010000111)", m2), 0, ""});
        out.push_back({"Q3", eps("0101(011000011000)", m2), 0, ""});
        out.push_back({"Q4", eps("0101(101000101000)", m2), 0, ""});
        out.push_back({"R1", eps("001(010000100001)", m2), 3, ""});
        out.push_back({"R2", eps("0011110(001101010110)", m2), 3, ""});
        out.push_back({"R3", eps("010(000101000010)", m2), 3, ""});
        out.push_back({"R4", eps("0100001(010010111100001010111111)", m2), 3, ""});
        out.push_back({"R5", eps("0100001(100100001001)", m2), 3, ""});
        out.push_back({"R6", eps("0101011(010101100011)", m2), 3, ""});
        out.push_back({"R7", eps("0101011(010111111101011010011101)", m2), 3, ""});
        out.push_back({"R8", eps("010(101110110010)", m2), 3, ""});
        out.push_back({"R9", eps("100(001000010100)", m2), 3, ""});
        out.push_back({"R10", eps("1000010(110001101010)", m2), 3, ""});
        out.push_back({"R11", eps("1111101(011000110101)", m2), 3, ""});
        out.push_back({"R12", eps("111(110110000111)", m2), 3, ""});
        return out;
    }();
    return entries;
}

inline bool is_catalog_name(std::string_view name) {
    const auto& cat = sequence_catalog();
    return std::any_of(cat.begin(), cat.end(),
                       [&](const CatalogEntry& e) { return e.name == name; });
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
    for (const CatalogEntry& e : sequence_catalog())
        if (e.name == name)
            return e;
    throw std::invalid_argument("unknown catalog sequence: " + std::string(name));
}

} // namespace steintri
