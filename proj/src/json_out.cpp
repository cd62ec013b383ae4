#include "zrel/json_out.hpp"

#include "zrel/homometry.hpp"
#include "zrel/setlit.hpp"

namespace zrel {

using nlohmann::json;

namespace {

json set_json(const PcSet& a) { return json(a.members()); }

const char* kind_name(HomometryKind k) {
    switch (k) {
    case HomometryKind::not_related: return "not-related";
    case HomometryKind::trivial: return "trivial";
    case HomometryKind::strict: return "strict";
    }
    return "?";
}

} // namespace

json ivec_json(const PcSet& a) {
    json j;
    j["modulus"] = a.modulus();
    j["set"] = set_json(a);
    j["interval_vector"] = interval_vector(a).counts;
    if (a.modulus() >= 2) {
        const IntervalContent ic = interval_content(a);
        j["interval_content"] = ic.digits;
        const std::string compact = format_ic_compact(ic);
        if (!compact.empty()) j["interval_content_compact"] = compact;
    }
    j["patterson"] = patterson(a).coefficients;
    j["patterson_poly"] = to_string(patterson(a));
    j["canonical_form"] = set_json(a.canonical());
    return j;
}

json zcheck_json(const PcSet& a, const PcSet& b) {
    const HomometryVerdict v = classify(a, b);
    json j;
    j["modulus"] = a.modulus();
    j["a"] = set_json(a);
    j["b"] = set_json(b);
    j["related"] = v.related;
    j["kind"] = kind_name(v.kind);
    j["z_related_strict_reading"] = v.strictly_related;
    if (v.related) {
        const IntervalContent ic = interval_content(a);
        j["interval_content"] = ic.digits;
        const std::string compact = format_ic_compact(ic);
        if (!compact.empty()) j["interval_content_compact"] = compact;
    }
    return j;
}

json pair_json(const ZPair& p) {
    json params = json::object();
    for (const auto& [key, value] : p.provenance().params) params[key] = value;
    json j;
    j["modulus"] = p.modulus();
    j["first"] = set_json(p.first());
    j["second"] = set_json(p.second());
    j["interval_content"] = interval_content(p.first()).digits;
    j["kind"] = kind_name(classify(p.first(), p.second()).kind);
    j["provenance"] = json{{"rule", p.provenance().rule}, {"params", params}};
    return j;
}

json tuple_json(const HomometryTuple& t) {
    json classes = json::array();
    for (const PcSet& c : t.classes) classes.push_back(set_json(c));
    json j;
    j["modulus"] = t.modulus;
    j["cardinality"] = t.cardinality;
    j["interval_content"] = t.content.digits;
    j["multiplicity"] = t.multiplicity();
    j["classes"] = classes;
    return j;
}

json census_json(const TupleCensus& c) {
    json spectrum = json::object();
    for (const auto& [t, count] : c.spectrum) spectrum[std::to_string(t)] = count;
    json tuples = json::array();
    for (const HomometryTuple& t : c.tuples) tuples.push_back(tuple_json(t));
    json j;
    j["modulus"] = c.modulus;
    j["cardinality"] = c.cardinality;
    j["vectors_with_tuples"] = c.vectors_with_tuples;
    j["spectrum"] = spectrum;
    j["tuples"] = tuples;
    return j;
}

json table_json(const CensusTable& t) {
    json cells = json::array();
    for (const auto& [key, cell] : t.cells) {
        cells.push_back(json{{"modulus", key.first},
                             {"cardinality", key.second},
                             {"vectors_with_tuples", cell.vectors_with_tuples},
                             {"has_higher_tuples", cell.has_higher_tuples}});
    }
    json j;
    j["moduli"] = t.moduli;
    j["cardinalities"] = t.cardinalities;
    j["cells"] = cells;
    return j;
}

json permgroup_json(const PermGroup& g) {
    json gens = json::array();
    for (const Permutation& p : g.generators()) gens.push_back(p.cycles());
    json j;
    j["degree"] = g.degree();
    j["generators"] = gens;
    j["order"] = g.order();
    j["orbits"] = g.orbits();
    return j;
}

json autgrp_json(const AutResult& r) {
    json blocks = json::array();
    for (const PcSet& b : r.blocks) blocks.push_back(set_json(b));
    json point_gens = json::array();
    for (const Permutation& p : r.point_generators) point_gens.push_back(p.cycles());
    json j;
    j["points"] = r.points;
    j["block_count"] = r.blocks.size();
    j["blocks"] = blocks;
    j["point_generators"] = point_gens;
    j["point_group"] = permgroup_json(r.point_group);
    j["point_orbits"] = r.point_orbits;
    j["block_orbits"] = r.block_orbits;
    return j;
}

} // namespace zrel
