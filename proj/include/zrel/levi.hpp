#pragma once

// The Levi (incidence) graph of a block family over Z_N and the automorphism
// group of the family: points 0..N-1 carry one color, blocks another, with an
// edge (i, B_j) iff i is in B_j. Distinct blocks have distinct neighborhoods,
// so restricting graph automorphisms to the point vertices is faithful; that
// restriction is the group acting on Z_N that stabilizes the family.

#include <string>
#include <vector>

#include "zrel/graph.hpp"
#include "zrel/pcset.hpp"
#include "zrel/permgroup.hpp"

namespace zrel {

struct LeviGraph {
    int points = 0;             // N
    std::vector<PcSet> blocks;  // ascending by bitmask
    ColoredGraph graph;         // vertices 0..N-1 points, N..N+u-1 blocks
};

// Blocks must be distinct, nonempty, and share modulus N.
LeviGraph build_levi(int modulus, std::vector<PcSet> blocks);

// True iff p maps the family onto itself as a set of sets.
bool verify_stabilizes(const Permutation& p, const std::vector<PcSet>& blocks);

struct AutResult {
    int points = 0;
    std::vector<PcSet> blocks;                   // the closed family actually used
    std::vector<Permutation> graph_generators;   // degree N + u
    std::vector<Permutation> point_generators;   // degree N
    PermGroup point_group;
    std::vector<std::vector<int>> point_orbits;
    std::vector<std::vector<int>> block_orbits;  // indices into blocks
};

// Expands the family to its full dihedral closure, builds the Levi graph,
// and computes the automorphism group with both orbit partitions.
AutResult z_automorphism_group(int modulus, const std::vector<PcSet>& blocks);

std::string to_dot(const LeviGraph& levi);

} // namespace zrel
