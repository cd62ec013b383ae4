#include "zrel/setlit.hpp"

#include <cctype>

namespace zrel {
namespace {

int base36_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

char base36_digit(int v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

} // namespace

PcSet parse_set(std::string_view text, int modulus) {
    if (text.empty())
        throw precondition_error("parse_set: empty set literal");
    std::vector<int> members;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            if (tok.empty()) {
                // A single trailing comma disambiguates one-element decimals
                // ("12," = {12}); empty tokens elsewhere are malformed.
                if (comma == std::string_view::npos && !members.empty()) break;
                throw precondition_error("parse_set: empty token in comma list");
            }
            int value = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw precondition_error("parse_set: mixed formats; comma lists are decimal");
                value = value * 10 + (c - '0');
                if (value >= PcSet::max_modulus * 10)
                    throw precondition_error("parse_set: element out of range");
            }
            members.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            int v = base36_value(c);
            if (v < 0)
                throw precondition_error(std::string("parse_set: bad compact digit '") + c + "'");
            members.push_back(v);
        }
    }
    for (int m : members)
        if (m >= modulus)
            throw precondition_error("parse_set: element " + std::to_string(m) +
                                     " not in Z_" + std::to_string(modulus));
    return PcSet::from_members(modulus, members);
}

std::string format_set(const PcSet& a) {
    std::string out;
    for (int m : a.members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(m);
    }
    return out;
}

std::string format_set_compact(const PcSet& a) {
    std::string out;
    for (int m : a.members()) {
        if (m > 35)
            throw precondition_error("format_set_compact: element > 35 has no base-36 digit");
        out += base36_digit(m);
    }
    return out;
}

std::string format_counts(std::span<const int> counts) {
    std::string out = "(";
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts[i]);
    }
    return out + ")";
}

std::string format_ic(const IntervalContent& ic) { return format_counts(ic.digits); }

std::string format_ic_compact(const IntervalContent& ic) {
    std::string out;
    for (int d : ic.digits) {
        if (d > 35) return "";
        out += base36_digit(d);
    }
    return out;
}

} // namespace zrel
