#pragma once

// Residue sequences over Z/m: finite sequences, eventually periodic
// sequences, the textual literal grammar, prefix extraction and the
// canonical projection Z/2m -> Z/m.
//
// Sequence literals are written `INIT` or `INIT(PERIOD)`, where a
// trailing parenthesised period repeats forever.  Symbols are single
// digits when m <= 10 and comma-separated integers otherwise.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steintri {

using residue_t = std::uint8_t;

class Modulus {
public:
    explicit Modulus(unsigned value) : value_(value) {
        if (value < 2)
            throw std::invalid_argument("modulus must be at least 2");
        if (value > 255)
            throw std::invalid_argument("modulus above 255 is not supported");
    }

    unsigned value() const { return value_; }
    bool even() const { return value_ % 2 == 0; }

    // Multiplicative units of Z/m in increasing order.
    std::vector<residue_t> units() const {
        std::vector<residue_t> out;
        for (unsigned u = 1; u < value_; ++u)
            if (std::gcd(u, value_) == 1)
                out.push_back(static_cast<residue_t>(u));
        return out;
    }

    friend bool operator==(Modulus a, Modulus b) { return a.value_ == b.value_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.value_ != b.value_; }

private:
    unsigned value_;
};

// A finite sequence of residues mod m.  Entries are always stored as the
// least nonnegative representative.
class ModSequence {
public:
    explicit ModSequence(Modulus m) : mod_(m) {}

    ModSequence(Modulus m, std::vector<residue_t> entries)
        : mod_(m), entries_(std::move(entries)) {
        for (residue_t e : entries_)
            if (e >= mod_.value())
                throw std::invalid_argument("sequence entry not reduced mod m");
    }

    Modulus modulus() const { return mod_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    residue_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<residue_t>& entries() const { return entries_; }

    void push_back(unsigned v) {
        if (v >= mod_.value())
            throw std::invalid_argument("sequence entry not reduced mod m");
        entries_.push_back(static_cast<residue_t>(v));
    }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    ModSequence reversed() const {
        return ModSequence(mod_, {entries_.rbegin(), entries_.rend()});
    }

    // Entrywise multiplication by a unit of Z/m.
    ModSequence scaled(residue_t unit) const {
        std::vector<residue_t> out;
        out.reserve(entries_.size());
        for (residue_t e : entries_)
            out.push_back(static_cast<residue_t>((unsigned(unit) * e) % mod_.value()));
        return ModSequence(mod_, std::move(out));
    }

    friend bool operator==(const ModSequence& a, const ModSequence& b) {
        return a.mod_ == b.mod_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const ModSequence& a, const ModSequence& b) {
        return a.entries_ < b.entries_;
    }

private:
    Modulus mod_;
    std::vector<residue_t> entries_;
};

// Infinite sequence given by a finite initial part followed by a period
// repeated forever.
class EventuallyPeriodicSequence {
public:
    EventuallyPeriodicSequence(ModSequence initial, ModSequence period)
        : initial_(std::move(initial)), period_(std::move(period)) {
        if (initial_.modulus() != period_.modulus())
            throw std::invalid_argument("initial part and period disagree on modulus");
        if (period_.empty())
            throw std::invalid_argument("period must be nonempty");
    }

    Modulus modulus() const { return initial_.modulus(); }
    const ModSequence& initial() const { return initial_; }
    const ModSequence& period() const { return period_; }

    residue_t at(std::size_t i) const {
        if (i < initial_.size())
            return initial_[i];
        return period_[(i - initial_.size()) % period_.size()];
    }

    friend bool operator==(const EventuallyPeriodicSequence& a,
                           const EventuallyPeriodicSequence& b) {
        return a.initial_ == b.initial_ && a.period_ == b.period_;
    }

private:
    ModSequence initial_;
    ModSequence period_;
};

using ParsedSequence = std::variant<ModSequence, EventuallyPeriodicSequence>;

namespace detail {

inline std::vector<residue_t> parse_symbols(std::string_view text, Modulus m) {
    std::vector<residue_t> out;
    if (m.value() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in sequence literal");
            unsigned v = unsigned(c - '0');
            if (v >= m.value())
                throw std::invalid_argument("symbol " + std::to_string(v) +
                                            " is not a residue mod " + std::to_string(m.value()));
            out.push_back(static_cast<residue_t>(v));
        }
        return out;
    }
    // comma-separated integers for m > 10
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("empty symbol in comma-separated literal");
        unsigned v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in sequence literal");
            v = v * 10 + unsigned(c - '0');
            if (v > 100000)
                throw std::invalid_argument("symbol out of range");
        }
        if (v >= m.value())
            throw std::invalid_argument("symbol " + std::to_string(v) +
                                        " is not a residue mod " + std::to_string(m.value()));
        out.push_back(static_cast<residue_t>(v));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma in sequence literal");
    }
    return out;
}

inline std::string format_symbols(const ModSequence& s) {
    std::string out;
    if (s.modulus().value() <= 10) {
        for (residue_t e : s)
            out += char('0' + e);
    } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(unsigned(s[i]));
        }
    }
    return out;
}

} // namespace detail

// Parses `INIT` or `INIT(PERIOD)`; a period means infinite repetition.
inline ParsedSequence parse_sequence(std::string_view text, Modulus m) {
    std::size_t open = text.find('(');
    if (open == std::string_view::npos) {
        if (text.find(')') != std::string_view::npos)
            throw std::invalid_argument("unmatched ')' in sequence literal");
        return ModSequence(m, detail::parse_symbols(text, m));
    }
    if (text.back() != ')' || text.find(')') != text.size() - 1)
        throw std::invalid_argument("malformed period in sequence literal");
    std::string_view init = text.substr(0, open);
    std::string_view per = text.substr(open + 1, text.size() - open - 2);
    if (per.empty())
        throw std::invalid_argument("period must be nonempty");
    return EventuallyPeriodicSequence(ModSequence(m, detail::parse_symbols(init, m)),
                                      ModSequence(m, detail::parse_symbols(per, m)));
}

inline std::string to_string(const ModSequence& s) { return detail::format_symbols(s); }

inline std::string to_string(const EventuallyPeriodicSequence& s) {
    return detail::format_symbols(s.initial()) + "(" + detail::format_symbols(s.period()) + ")";
}

inline std::string to_string(const ParsedSequence& s) {
    return std::visit([](const auto& v) { return to_string(v); }, s);
}

// Initial segment of length l.
inline ModSequence prefix(const EventuallyPeriodicSequence& s, std::size_t l) {
    std::vector<residue_t> out;
    out.reserve(l);
    for (std::size_t i = 0; i < l; ++i)
        out.push_back(s.at(i));
    return ModSequence(s.modulus(), std::move(out));
}

inline ModSequence prefix(const ModSequence& s, std::size_t l) {
    if (l > s.size())
        throw std::out_of_range("prefix length exceeds sequence length");
    return ModSequence(s.modulus(), {s.begin(), s.begin() + long(l)});
}

inline ModSequence prefix(const ParsedSequence& s, std::size_t l) {
    return std::visit([l](const auto& v) { return prefix(v, l); }, s);
}

// Canonical projection Z/2m -> Z/m, entrywise; the source modulus must be
// even and at least 4.
inline ModSequence project(const ModSequence& t) {
    unsigned src = t.modulus().value();
    if (src % 2 != 0 || src < 4)
        throw std::invalid_argument("projection needs an even source modulus 2m with m >= 2");
    Modulus target(src / 2);
    std::vector<residue_t> out;
    out.reserve(t.size());
    for (residue_t e : t)
        out.push_back(static_cast<residue_t>(e % target.value()));
    return ModSequence(target, std::move(out));
}

} // namespace steintri
