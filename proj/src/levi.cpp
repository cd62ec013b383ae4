#include "zrel/levi.hpp"

#include <algorithm>
#include <numeric>

#include "zrel/homometry.hpp"
#include "zrel/setlit.hpp"

namespace zrel {

LeviGraph build_levi(int modulus, std::vector<PcSet> blocks) {
    if (blocks.empty())
        throw precondition_error("build_levi: no blocks");
    for (const PcSet& b : blocks) {
        if (b.modulus() != modulus)
            throw precondition_error("build_levi: block modulus mismatch");
        if (b.empty())
            throw precondition_error("build_levi: empty block");
    }
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
        throw precondition_error("build_levi: duplicate block");

    const int u = static_cast<int>(blocks.size());
    std::vector<int> colors(modulus + u, 0);
    for (int j = 0; j < u; ++j) colors[modulus + j] = 1;
    ColoredGraph g(modulus + u, std::move(colors));
    for (int j = 0; j < u; ++j)
        for (int i : blocks[j].members()) g.add_edge(i, modulus + j);
    return LeviGraph{modulus, std::move(blocks), std::move(g)};
}

bool verify_stabilizes(const Permutation& p, const std::vector<PcSet>& blocks) {
    if (blocks.empty()) return true;
    if (p.degree() != blocks.front().modulus())
        throw precondition_error("verify_stabilizes: degree != block modulus");
    std::vector<PcSet> family = blocks;
    std::sort(family.begin(), family.end());
    std::vector<PcSet> image;
    image.reserve(family.size());
    for (const PcSet& b : family) image.push_back(p.apply_to_set(b));
    std::sort(image.begin(), image.end());
    return image == family;
}

namespace {

std::vector<std::vector<int>> orbit_partition(int count,
                                              const std::vector<std::vector<int>>& maps) {
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& m : maps)
        for (int i = 0; i < count; ++i) {
            const int a = find(i), b = find(m[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> by_root(count);
    for (int i = 0; i < count; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& cell : by_root)
        if (!cell.empty()) out.push_back(std::move(cell));
    return out;
}

} // namespace

AutResult z_automorphism_group(int modulus, const std::vector<PcSet>& blocks) {
    // Close under all transpositions and inversions first; block families
    // are always analyzed dihedrally closed.
    std::vector<PcSet> closed;
    for (const PcSet& b : blocks)
        for (const PcSet& img : dihedral_orbit(b)) closed.push_back(img);
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

    LeviGraph levi = build_levi(modulus, std::move(closed));
    const int u = static_cast<int>(levi.blocks.size());

    AutResult out{modulus, levi.blocks, automorphism_generators(levi.graph),
                  {},       PermGroup(modulus, {}),
                  {},       {}};

    std::vector<std::vector<int>> block_maps;
    for (const Permutation& g : out.graph_generators) {
        std::vector<int> points(modulus);
        for (int i = 0; i < modulus; ++i) {
            points[i] = g(i);
            if (points[i] >= modulus)
                throw invariant_error("z_automorphism_group: point mapped to a block vertex");
        }
        out.point_generators.push_back(Permutation::from_images(std::move(points)));
        std::vector<int> bm(u);
        for (int j = 0; j < u; ++j) bm[j] = g(modulus + j) - modulus;
        block_maps.push_back(std::move(bm));
    }

    for (const Permutation& p : out.point_generators)
        if (!verify_stabilizes(p, out.blocks))
            throw invariant_error("z_automorphism_group: generator does not stabilize the family");

    out.point_group = PermGroup(modulus, out.point_generators);
    out.point_orbits = out.point_group.orbits();
    out.block_orbits = orbit_partition(u, block_maps);
    return out;
}

std::string to_dot(const LeviGraph& levi) {
    std::string out = "graph levi {\n  node [style=filled];\n";
    for (int i = 0; i < levi.points; ++i)
        out += "  p" + std::to_string(i) + " [label=\"" + std::to_string(i) +
               "\", shape=circle, fillcolor=lightblue];\n";
    for (size_t j = 0; j < levi.blocks.size(); ++j)
        out += "  b" + std::to_string(j) + " [label=\"{" + format_set(levi.blocks[j]) +
               "}\", shape=box, fillcolor=lightyellow];\n";
    for (size_t j = 0; j < levi.blocks.size(); ++j)
        for (int i : levi.blocks[j].members())
            out += "  p" + std::to_string(i) + " -- b" + std::to_string(j) + ";\n";
    return out + "}\n";
}

} // namespace zrel
