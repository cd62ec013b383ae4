#pragma once

// Point bijections of {0..N-1} with disjoint-cycle-notation I/O, matching the
// paper's typography: "(1,3)(2,6)(5,7)". Fixed points are omitted.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "zrel/pcset.hpp"

namespace zrel {

class Permutation {
public:
    explicit Permutation(int degree); // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation parse_cycles(std::string_view text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    // (p * q)(x) = p(q(x)): q acts first.
    friend Permutation operator*(const Permutation& p, const Permutation& q);

    // Pointwise image of a set; degree must equal the set's modulus.
    PcSet apply_to_set(const PcSet& a) const;

    std::string cycles() const; // "()" for the identity

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

} // namespace zrel
