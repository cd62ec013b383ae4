#include "zrel/permgroup.hpp"

#include <algorithm>
#include <numeric>

namespace zrel {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1)
        throw precondition_error("PermGroup: degree must be >= 1");
    for (const Permutation& g : gens_)
        if (g.degree() != degree)
            throw precondition_error("PermGroup: generator degree mismatch");
}

PermGroup& PermGroup::operator=(const PermGroup& other) {
    if (this == &other) return *this;
    std::lock_guard<std::mutex> lock(mutex_);
    degree_ = other.degree_;
    gens_ = other.gens_;
    built_ = false;
    chain_.clear();
    return *this;
}

PermGroup& PermGroup::operator=(PermGroup&& other) noexcept {
    if (this == &other) return *this;
    std::lock_guard<std::mutex> lock(mutex_);
    degree_ = other.degree_;
    gens_ = std::move(other.gens_);
    built_ = false;
    chain_.clear();
    return *this;
}

void PermGroup::rebuild_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.transversal.clear();
    lv.where.assign(degree_, -1);
    lv.orbit.push_back(lv.base);
    lv.transversal.push_back(Permutation(degree_));
    lv.where[lv.base] = 0;
    for (size_t i = 0; i < lv.orbit.size(); ++i) {
        for (const Permutation& s : lv.gens) {
            const int q = s(lv.orbit[i]);
            if (lv.where[q] < 0) {
                lv.where[q] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.transversal.push_back(s * lv.transversal[i]); // maps base -> q
            }
        }
    }
}

Permutation PermGroup::sift(Permutation g, size_t from) const {
    for (size_t j = from; j < chain_.size(); ++j) {
        const Level& lv = chain_[j];
        const int gamma = g(lv.base);
        const int idx = lv.where[gamma];
        if (idx < 0) return g;
        g = lv.transversal[idx].inverse() * g;
    }
    return g;
}

// Re-establish, at level i and below, that every Schreier generator
// u_{s(p)}^{-1} s u_p sifts to the identity through the deeper levels
// (Schreier's lemma closure). Any non-trivial residue becomes a strong
// generator one level down and forces a restart, since deeper transversals
// change what sifts.
void PermGroup::complete(size_t i) const {
    bool restart = true;
    while (restart) {
        restart = false;
        rebuild_orbit(chain_[i]);
        for (size_t pi = 0; pi < chain_[i].orbit.size() && !restart; ++pi) {
            for (size_t si = 0; si < chain_[i].gens.size() && !restart; ++si) {
                const Level& lv = chain_[i];
                const Permutation s = lv.gens[si];
                const Permutation u_p = lv.transversal[pi];
                const int q = s(lv.orbit[pi]);
                const Permutation u_q = lv.transversal[lv.where[q]];
                Permutation h = sift(u_q.inverse() * (s * u_p), i + 1);
                if (h.is_identity()) continue;
                if (i + 1 == chain_.size()) {
                    Level next;
                    for (int p = 0; p < degree_; ++p)
                        if (h(p) != p) {
                            next.base = p;
                            break;
                        }
                    chain_.push_back(std::move(next));
                }
                chain_[i + 1].gens.push_back(std::move(h));
                rebuild_orbit(chain_[i + 1]);
                complete(i + 1);
                restart = true;
            }
        }
    }
}

void PermGroup::ensure_chain() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (built_) return;
    chain_.clear();
    std::vector<Permutation> start;
    for (const Permutation& g : gens_)
        if (!g.is_identity()) start.push_back(g);
    if (!start.empty()) {
        Level top;
        for (int p = 0; p < degree_ && top.base < 0; ++p)
            for (const Permutation& g : start)
                if (g(p) != p) {
                    top.base = p;
                    break;
                }
        top.gens = std::move(start);
        chain_.push_back(std::move(top));
        complete(0);
    }
    built_ = true;
}

unsigned long long PermGroup::order() const {
    ensure_chain();
    unsigned __int128 n = 1;
    for (const Level& lv : chain_) {
        n *= lv.orbit.size();
        if (n > static_cast<unsigned __int128>(~0ull))
            throw precondition_error("PermGroup::order: order exceeds 2^64");
    }
    return static_cast<unsigned long long>(n);
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_)
        throw precondition_error("PermGroup::contains: degree mismatch");
    ensure_chain();
    return sift(p, 0).is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Permutation& g : gens_)
        for (int i = 0; i < degree_; ++i) {
            const int a = find(i), b = find(g(i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> by_root(degree_);
    for (int i = 0; i < degree_; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& orbit : by_root)
        if (!orbit.empty()) out.push_back(std::move(orbit));
    return out;
}

} // namespace zrel
