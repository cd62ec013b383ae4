#pragma once

// Vertex-colored simple undirected graphs and their automorphism groups.
// The search is individualization-refinement: refine the coloring to an
// equitable partition, individualize one vertex of the first smallest
// non-singleton cell, recurse; discrete leaves are compared against the
// first leaf and matches are recorded as generators. Orbits of the already
// discovered automorphisms prune sibling branches.

#include <vector>

#include "zrel/perm.hpp"

namespace zrel {

class ColoredGraph {
public:
    explicit ColoredGraph(int n, std::vector<int> colors = {});

    void add_edge(int u, int v); // rejects self-loops; duplicate edges collapse

    int vertex_count() const { return n_; }
    long edge_count() const;
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const; // ascending

    bool is_automorphism(const Permutation& p) const; // preserves colors + adjacency

private:
    int words() const { return (n_ + 63) / 64; }
    int n_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> adj_; // row-major bitset, n_ x words()
};

// Stable equitable coloring refining `colors`: vertices get equal classes
// iff they had equal colors and equal neighbor counts in every class, to a
// fixpoint. Class ids are assigned in signature order, so the result is
// isomorphism-invariant.
std::vector<int> equitable_refinement(const ColoredGraph& g, std::vector<int> colors);

// Generators of the full color- and adjacency-preserving automorphism group.
// Every returned permutation is re-verified against the graph.
std::vector<Permutation> automorphism_generators(const ColoredGraph& g);

} // namespace zrel
