#pragma once

// The bundled network of the 48 homometric four-note chords of Z_12 and
// its membership verification: the 48 entries must equal, as a set family,
// the dihedral closure of the pair {0,1,3,7} / {0,1,4,6}.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zrel/pcset.hpp"

namespace zrel {

// Row-major, 12 rows x 4 columns, compact base-36 notation.
const std::array<std::string_view, 48>& table1_chords();

struct Table1Report {
    bool match = false;
    int parsed = 0;
    int distinct = 0;
    std::vector<PcSet> missing; // in the closure, not among the entries
    std::vector<PcSet> extra;   // among the entries, not in the closure
};

Table1Report verify_table1();
Table1Report verify_table1(const std::vector<std::string>& entries);

std::string to_string(const Table1Report& r);

} // namespace zrel
