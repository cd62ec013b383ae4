#include "zrel/table1.hpp"

#include <algorithm>

#include "zrel/homometry.hpp"
#include "zrel/setlit.hpp"

namespace zrel {

const std::array<std::string_view, 48>& table1_chords() {
    static const std::array<std::string_view, 48> chords = {
        "15ab", "57ab", "457b", "145b", //
        "059b", "569b", "356b", "035b", //
        "068b", "0568", "0256", "026b", //
        "067a", "0467", "0146", "016a", //
        "1679", "1367", "0137", "0179", //
        "1578", "1257", "127b", "178b", //
        "2478", "1248", "128a", "278a", //
        "2368", "0238", "0289", "2689", //
        "2359", "239b", "389b", "3589", //
        "1349", "139a", "379a", "3479", //
        "034a", "049a", "469a", "346a", //
        "24ab", "48ab", "458a", "245a", //
    };
    return chords;
}

Table1Report verify_table1() {
    std::vector<std::string> entries;
    for (std::string_view c : table1_chords()) entries.emplace_back(c);
    return verify_table1(entries);
}

Table1Report verify_table1(const std::vector<std::string>& entries) {
    Table1Report report;
    std::vector<PcSet> parsed;
    for (const std::string& e : entries) parsed.push_back(parse_set(e, 12));
    report.parsed = static_cast<int>(parsed.size());
    std::sort(parsed.begin(), parsed.end());
    parsed.erase(std::unique(parsed.begin(), parsed.end()), parsed.end());
    report.distinct = static_cast<int>(parsed.size());

    std::vector<PcSet> closure;
    for (const PcSet& seed :
         {PcSet::from_members(12, {0, 1, 3, 7}), PcSet::from_members(12, {0, 1, 4, 6})})
        for (const PcSet& img : dihedral_orbit(seed)) closure.push_back(img);
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());

    std::set_difference(closure.begin(), closure.end(), parsed.begin(), parsed.end(),
                        std::back_inserter(report.missing));
    std::set_difference(parsed.begin(), parsed.end(), closure.begin(), closure.end(),
                        std::back_inserter(report.extra));
    report.match = report.missing.empty() && report.extra.empty();
    return report;
}

std::string to_string(const Table1Report& r) {
    std::string out;
    out += "entries parsed:   " + std::to_string(r.parsed) + "\n";
    out += "distinct chords:  " + std::to_string(r.distinct) + "\n";
    out += "closure of {0,1,3,7}/{0,1,4,6}: 48 sets\n";
    if (r.match) {
        out += "membership:       exact match, symmetric difference empty\n";
    } else {
        out += "membership:       MISMATCH\n";
        for (const PcSet& s : r.missing) out += "  missing from entries: {" + format_set(s) + "}\n";
        for (const PcSet& s : r.extra) out += "  not in closure:       {" + format_set(s) + "}\n";
    }
    return out;
}

} // namespace zrel
