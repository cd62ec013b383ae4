#pragma once

// JSON serialization of every result the CLI can emit. Shapes are pinned by
// the schema files under schemas/.

#include <json.hpp>

#include "zrel/constructors.hpp"
#include "zrel/enumeration.hpp"
#include "zrel/levi.hpp"

namespace zrel {

nlohmann::json ivec_json(const PcSet& a);
nlohmann::json zcheck_json(const PcSet& a, const PcSet& b);
nlohmann::json pair_json(const ZPair& p);
nlohmann::json tuple_json(const HomometryTuple& t);
nlohmann::json census_json(const TupleCensus& c);
nlohmann::json table_json(const CensusTable& t);
nlohmann::json autgrp_json(const AutResult& r);
nlohmann::json permgroup_json(const PermGroup& g);

} // namespace zrel
