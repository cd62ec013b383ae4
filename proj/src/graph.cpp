#include "zrel/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace zrel {

ColoredGraph::ColoredGraph(int n, std::vector<int> colors) : n_(n), colors_(std::move(colors)) {
    if (n < 1)
        throw precondition_error("ColoredGraph: need at least one vertex");
    if (colors_.empty()) colors_.assign(n, 0);
    if (static_cast<int>(colors_.size()) != n)
        throw precondition_error("ColoredGraph: color table size != vertex count");
    for (int c : colors_)
        if (c < 0) throw precondition_error("ColoredGraph: colors must be non-negative");
    adj_.assign(static_cast<size_t>(n) * words(), 0);
}

void ColoredGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw precondition_error("ColoredGraph::add_edge: vertex out of range");
    if (u == v)
        throw precondition_error("ColoredGraph::add_edge: self-loop");
    adj_[static_cast<size_t>(u) * words() + v / 64] |= 1ull << (v % 64);
    adj_[static_cast<size_t>(v) * words() + u / 64] |= 1ull << (u % 64);
}

bool ColoredGraph::adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words() + v / 64] >> (v % 64)) & 1;
}

int ColoredGraph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words(); ++w)
        d += std::popcount(adj_[static_cast<size_t>(v) * words() + w]);
    return d;
}

long ColoredGraph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> ColoredGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words(); ++w) {
        std::uint64_t bits = adj_[static_cast<size_t>(v) * words() + w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool ColoredGraph::is_automorphism(const Permutation& p) const {
    if (p.degree() != n_) return false;
    for (int v = 0; v < n_; ++v)
        if (colors_[v] != colors_[p(v)]) return false;
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v))
            if (!adjacent(p(v), p(u))) return false;
    return true;
}

std::vector<int> equitable_refinement(const ColoredGraph& g, std::vector<int> colors) {
    const int n = g.vertex_count();
    if (static_cast<int>(colors.size()) != n)
        throw precondition_error("equitable_refinement: color table size != vertex count");

    int classes = 0;
    {
        // normalize incoming ids to 0..c-1 preserving order
        std::map<int, int> remap;
        for (int c : colors) remap.emplace(c, 0);
        for (auto& [c, id] : remap) id = classes++;
        for (int& c : colors) c = remap[c];
    }

    // signature of v = (color, count of neighbors per class); split classes
    // by signature until stable
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> counts(classes, 0);
            for (int u : g.neighbors(v)) ++counts[colors[u]];
            sig[v].reserve(classes + 1);
            sig[v].push_back(colors[v]);
            sig[v].insert(sig[v].end(), counts.begin(), counts.end());
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order.emplace(sig[v], 0);
        int next = 0;
        for (auto& [s, id] : order) id = next++;
        bool changed = next != classes;
        for (int v = 0; v < n; ++v) {
            const int c = order[sig[v]];
            if (c != colors[v]) changed = true;
            colors[v] = c;
        }
        classes = next;
        if (!changed) return colors;
    }
}

namespace {

int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

struct AutSearch {
    const ColoredGraph& g;
    const int n;
    bool have_first = false;
    std::vector<int> first_leaf;        // position -> vertex
    std::vector<Permutation> gens;
    std::vector<int> path;              // individualized vertices, root first

    explicit AutSearch(const ColoredGraph& graph) : g(graph), n(graph.vertex_count()) {}

    void leaf(const std::vector<int>& colors) {
        std::vector<int> lab(n);
        for (int v = 0; v < n; ++v) lab[colors[v]] = v;
        if (!have_first) {
            first_leaf = lab;
            have_first = true;
            return;
        }
        std::vector<int> images(n);
        for (int pos = 0; pos < n; ++pos) images[first_leaf[pos]] = lab[pos];
        Permutation p = Permutation::from_images(std::move(images));
        if (!p.is_identity() && g.is_automorphism(p)) gens.push_back(std::move(p));
    }

    // Orbit roots of all points under generators fixing `path` pointwise:
    // siblings in one orbit have isomorphic subtrees, so one suffices.
    std::vector<int> orbit_roots() {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Permutation& p : gens) {
            bool fixes = true;
            for (int v : path)
                if (p(v) != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int i = 0; i < n; ++i) {
                const int a = find(i), b = find(p(i));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> roots(n);
        for (int i = 0; i < n; ++i) roots[i] = find(i);
        return roots;
    }

    void run(std::vector<int> colors) {
        colors = equitable_refinement(g, colors);
        const int classes = color_count(colors);
        if (classes == n) {
            leaf(colors);
            return;
        }
        // target cell: smallest non-singleton class, lowest id on ties
        std::vector<int> size_of(classes, 0);
        for (int c : colors) ++size_of[c];
        int target = -1;
        for (int c = 0; c < classes; ++c)
            if (size_of[c] >= 2 && (target < 0 || size_of[c] < size_of[target])) target = c;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::vector<int> explored;
        for (const int v : cell) {
            if (!explored.empty()) {
                const std::vector<int> roots = orbit_roots();
                bool seen = false;
                for (const int w : explored)
                    if (roots[w] == roots[v]) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
            }
            std::vector<int> child = colors;
            child[v] = classes; // fresh color, identical choice for every sibling
            path.push_back(v);
            run(std::move(child));
            path.pop_back();
            explored.push_back(v);
        }
    }
};

} // namespace

std::vector<Permutation> automorphism_generators(const ColoredGraph& g) {
    AutSearch search(g);
    search.run(g.colors());
    for (const Permutation& p : search.gens)
        if (!g.is_automorphism(p))
            throw invariant_error("automorphism_generators: produced a non-automorphism");
    return search.gens;
}

} // namespace zrel
