#pragma once

// Exhaustive enumeration of dihedral set classes of Z_N and their grouping
// into homometric tuples. Strategy: walk all C(N,k) bitmasks (restricted to
// those containing 0), keep the ones equal to their canonical form, group by
// interval content. Work is split into contiguous combination-rank ranges so
// results are byte-identical for any worker count.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zrel/homometry.hpp"

namespace zrel {

inline constexpr int max_enumeration_modulus = 32;

// One canonical representative per dihedral class of k-subsets of Z_N,
// ascending by bitmask.
std::vector<PcSet> enum_classes(int modulus, int cardinality, int workers = 1);

// Which derived key the census groups by. Both must produce identical
// censuses (Proposition 1); keeping the Patterson route separate gives the
// tables an internal oracle.
enum class CensusKey { interval_content, patterson };

struct TupleCensus {
    int modulus = 0;
    int cardinality = 0;
    std::vector<HomometryTuple> tuples;  // sorted by content
    std::map<int, long> spectrum;        // multiplicity t -> number of tuples
    long vectors_with_tuples = 0;        // = |tuples|

    friend bool operator==(const TupleCensus&, const TupleCensus&) = default;
};

TupleCensus census(int modulus, int cardinality, int workers = 1,
                   CensusKey key = CensusKey::interval_content);

// First tuple of multiplicity exactly t, ordering tuples by their
// lexicographically least class. Requires t >= 3.
std::optional<HomometryTuple> first_tuple_of_multiplicity(int modulus, int cardinality,
                                                          int multiplicity, int workers = 1);

struct CensusTable {
    struct Cell {
        long vectors_with_tuples = 0;
        bool has_higher_tuples = false; // some tuple with t > 2 (the italic marker)
    };

    std::vector<int> moduli;        // column order
    std::vector<int> cardinalities; // row order
    std::map<std::pair<int, int>, Cell> cells; // key (modulus, cardinality); absent = not computed

    std::optional<Cell> cell(int modulus, int cardinality) const;
};

// Censuses for every (N, k) in the given inclusive ranges with k <= N.
CensusTable build_table(int n_lo, int n_hi, int k_lo, int k_hi, int workers = 1);

// Header row of N values, one row per k; italic cells suffixed "*",
// not-computed cells "-".
std::string to_csv(const CensusTable& table);

} // namespace zrel
