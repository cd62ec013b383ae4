#include "zrel/homometry.hpp"

#include <algorithm>
#include <map>

namespace zrel {

bool is_z_related(const PcSet& a, const PcSet& b) {
    if (a.modulus() != b.modulus())
        throw precondition_error("is_z_related: modulus mismatch");
    if (a.size() != b.size()) return false;
    return interval_content(a) == interval_content(b);
}

HomometryVerdict classify(const PcSet& a, const PcSet& b) {
    if (!is_z_related(a, b))
        return {false, HomometryKind::not_related, false};
    if (a.canonical() == b.canonical())
        return {true, HomometryKind::trivial, false};
    return {true, HomometryKind::strict, true};
}

std::vector<PcSet> dihedral_orbit(const PcSet& a) {
    std::vector<PcSet> orbit;
    const int n = a.modulus();
    for (const PcSet& base : {a, a.inverted(0)})
        for (int t = 0; t < n; ++t)
            orbit.push_back(base.transposed(t));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<HomometryTuple> group_by_content(const std::vector<PcSet>& canonical_sets) {
    std::vector<HomometryTuple> out;
    if (canonical_sets.empty()) return out;
    const int n = canonical_sets.front().modulus();
    const int k = canonical_sets.front().size();
    for (const PcSet& s : canonical_sets) {
        if (s.modulus() != n || s.size() != k)
            throw precondition_error("group_by_content: mixed modulus or cardinality");
        if (!s.is_canonical())
            throw precondition_error("group_by_content: input set is not a canonical form");
    }
    std::map<IntervalContent, std::vector<PcSet>> cells;
    for (const PcSet& s : canonical_sets) cells[interval_content(s)].push_back(s);
    for (auto& [content, classes] : cells) {
        if (classes.size() < 2) continue;
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        if (classes.size() < 2) continue;
        out.push_back(HomometryTuple{n, k, content, std::move(classes)});
    }
    return out; // std::map iteration is already content-lex order
}

} // namespace zrel
