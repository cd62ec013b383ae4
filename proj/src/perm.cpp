#include "zrel/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace zrel {

Permutation::Permutation(int degree) {
    if (degree < 1)
        throw precondition_error("Permutation: degree must be >= 1");
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    if (images.empty())
        throw precondition_error("Permutation: degree must be >= 1");
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
            throw precondition_error("Permutation: image table is not a bijection");
        seen[v] = true;
    }
    Permutation p(static_cast<int>(images.size()));
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw precondition_error("parse_cycles: expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!cycle.empty()) {
                if (text[i] != ',')
                    throw precondition_error("parse_cycles: expected ',' inside cycle");
                ++i;
                skip_ws();
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw precondition_error("parse_cycles: expected a point");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > degree)
                    throw precondition_error("parse_cycles: point " + std::to_string(v) +
                                             " >= degree " + std::to_string(degree));
                ++i;
            }
            if (v >= degree)
                throw precondition_error("parse_cycles: point " + std::to_string(v) +
                                         " >= degree " + std::to_string(degree));
            if (used[v])
                throw precondition_error("parse_cycles: repeated point " + std::to_string(v));
            used[v] = true;
            cycle.push_back(v);
            skip_ws();
        }
        if (i >= text.size())
            throw precondition_error("parse_cycles: unterminated cycle");
        ++i; // ')'
        for (size_t j = 0; j < cycle.size(); ++j)
            p.images_[cycle[j]] = cycle[(j + 1) % cycle.size()];
        skip_ws();
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out(degree());
    for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw precondition_error("Permutation: degree mismatch in composition");
    Permutation out(p.degree());
    for (int i = 0; i < p.degree(); ++i) out.images_[i] = p.images_[q.images_[i]];
    return out;
}

PcSet Permutation::apply_to_set(const PcSet& a) const {
    if (degree() != a.modulus())
        throw precondition_error("apply_to_set: permutation degree " + std::to_string(degree()) +
                                 " != modulus " + std::to_string(a.modulus()));
    std::uint64_t bits = 0;
    for (int m : a.members()) bits |= 1ull << images_[m];
    return PcSet(a.modulus(), bits);
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        out += "(";
        int v = start;
        bool first = true;
        do {
            if (!first) out += ",";
            out += std::to_string(v);
            seen[v] = true;
            v = images_[v];
            first = false;
        } while (v != start);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace zrel
