#pragma once

// Set-literal syntax shared by the CLI and file formats: either a comma list
// "0,1,3,4" or a compact base-36 digit string "15ab" (a=10, b=11, ...).

#include <span>
#include <string>
#include <string_view>

#include "zrel/pcset.hpp"

namespace zrel {

// Comma list or compact digits; anything without a comma is compact, so
// "12" denotes {1,2} and {12} is written "c" or "12,".
PcSet parse_set(std::string_view text, int modulus);

std::string format_set(const PcSet& a);          // "0,1,3,4"; "" for the empty set
std::string format_set_compact(const PcSet& a);  // "0134"; requires members < 36

std::string format_counts(std::span<const int> counts);   // "(4,1,2,...)"
std::string format_ic(const IntervalContent& ic);         // "(2,1,2,1)"

// "2121" in base-36 digits; "" when some digit exceeds 35.
std::string format_ic_compact(const IntervalContent& ic);

} // namespace zrel
