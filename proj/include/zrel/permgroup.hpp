#pragma once

// A permutation group given by generators, with exact order, membership, and
// orbit services through a deterministic Schreier-Sims stabilizer chain.
// The chain is built lazily under a mutex; a built group is safe to query
// from any number of threads.

#include <mutex>
#include <vector>

#include "zrel/perm.hpp"

namespace zrel {

class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    // Copies and moves transfer degree and generators; the chain is a cache
    // and is rebuilt on demand.
    PermGroup(const PermGroup& other) : degree_(other.degree_), gens_(other.gens_) {}
    PermGroup(PermGroup&& other) noexcept
        : degree_(other.degree_), gens_(std::move(other.gens_)) {}
    PermGroup& operator=(const PermGroup& other);
    PermGroup& operator=(PermGroup&& other) noexcept;

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    unsigned long long order() const;
    bool contains(const Permutation& p) const;

    // Orbits of the point set, each ascending, ordered by smallest member.
    std::vector<std::vector<int>> orbits() const;

private:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;                  // discovery order, orbit[0] == base
        std::vector<Permutation> transversal;    // transversal[i](base) == orbit[i]
        std::vector<int> where;                  // point -> index into orbit, or -1
    };

    void ensure_chain() const;
    void complete(size_t level) const;
    void rebuild_orbit(Level& lv) const;
    // Sift g through levels [from, end); returns the residue.
    Permutation sift(Permutation g, size_t from) const;

    int degree_;
    std::vector<Permutation> gens_;

    mutable std::mutex mutex_;
    mutable bool built_ = false;
    mutable std::vector<Level> chain_;
};

} // namespace zrel
