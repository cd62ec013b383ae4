#pragma once

// The Z-relation and its classification: two sets are Z-related when they
// share an interval content; trivially homometric when a dihedral transform
// maps one to the other, strictly homometric otherwise.

#include <vector>

#include "zrel/pcset.hpp"

namespace zrel {

enum class HomometryKind { not_related, trivial, strict };

struct HomometryVerdict {
    bool related;       // same interval content (and cardinality)
    HomometryKind kind;
    // The strict-only reading of "Z-related": homometric but in distinct
    // dihedral classes.
    bool strictly_related;
};

// Same interval content. Cardinality is compared first; moduli must match.
bool is_z_related(const PcSet& a, const PcSet& b);

HomometryVerdict classify(const PcSet& a, const PcSet& b);

// All distinct images under the 2N dihedral transforms, ascending by bitmask.
std::vector<PcSet> dihedral_orbit(const PcSet& a);

// A maximal family of >= 2 dihedral classes sharing one interval content.
struct HomometryTuple {
    int modulus;
    int cardinality;
    IntervalContent content;
    std::vector<PcSet> classes; // canonical forms, ascending by bitmask

    int multiplicity() const { return static_cast<int>(classes.size()); }

    friend bool operator==(const HomometryTuple&, const HomometryTuple&) = default;
};

// Partition canonical sets (one modulus, one cardinality) by interval
// content; cells of size >= 2 come back as tuples sorted by content.
std::vector<HomometryTuple> group_by_content(const std::vector<PcSet>& canonical_sets);

} // namespace zrel
