#include <doctest.h>

#include "zrel/setlit.hpp"
#include "zrel/table1.hpp"

using namespace zrel;

TEST_CASE("Table 1: 48 distinct chords matching the dihedral closure") {
    const Table1Report r = verify_table1();
    CHECK(r.parsed == 48);
    CHECK(r.distinct == 48);
    CHECK(r.match);
    CHECK(r.missing.empty());
    CHECK(r.extra.empty());
    CHECK(to_string(r).find("exact match") != std::string::npos);
}

TEST_CASE("Table 1 with an injected fault: symmetric difference of size 2") {
    std::vector<std::string> entries;
    for (std::string_view c : table1_chords()) entries.emplace_back(c);
    entries[0] = "0123"; // corrupt one chord
    const Table1Report r = verify_table1(entries);
    CHECK(!r.match);
    CHECK(r.missing.size() == 1);
    CHECK(r.extra.size() == 1);
    CHECK(r.missing[0] == parse_set("15ab", 12));
    CHECK(r.extra[0] == parse_set("0123", 12));
}
