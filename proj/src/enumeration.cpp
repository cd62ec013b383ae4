#include "zrel/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

namespace zrel {
namespace {

struct BinomialTable {
    std::array<std::array<unsigned long long, 65>, 65> c{};
    constexpr BinomialTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};
constexpr BinomialTable binom_table;

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binom_table.c[n][k];
}

// r-th (0-based) p-subset of {0..width-1} in ascending bitmask (colex) order.
std::uint64_t unrank_colex(unsigned long long r, int p, int width) {
    std::uint64_t mask = 0;
    int e = width;
    while (p > 0) {
        --e;
        while (binom(e, p) > r) --e;
        mask |= 1ull << e;
        r -= binom(e, p);
        --p;
    }
    return mask;
}

// Next bitmask with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::uint64_t rotl_bits(std::uint64_t bits, int r, int modulus) {
    if (r >= modulus) r -= modulus;
    if (r == 0) return bits;
    const std::uint64_t mask = modulus == 64 ? ~0ull : (1ull << modulus) - 1;
    return ((bits << r) | (bits >> (modulus - r))) & mask;
}

std::uint64_t reflect_bits(std::uint64_t bits, int modulus) {
    std::uint64_t out = 0;
    while (bits) {
        int i = std::countr_zero(bits);
        bits &= bits - 1;
        out |= 1ull << ((modulus - i) % modulus);
    }
    return out;
}

// Equal-popcount sorted-list lex order: the set owning the first differing
// element is the smaller one.
bool lex_less_eq_card(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    return d != 0 && (a & (d & (~d + 1)));
}

// mask contains 0; canonical iff no dihedral image is lex-smaller. Only the
// 2k images that move a member to 0 can compete.
bool is_canonical_mask(std::uint64_t mask, int modulus) {
    const std::uint64_t refl = reflect_bits(mask, modulus);
    for (std::uint64_t base : {mask, refl}) {
        std::uint64_t b = base;
        while (b) {
            const int a = std::countr_zero(b);
            b &= b - 1;
            if (lex_less_eq_card(rotl_bits(base, modulus - a, modulus), mask)) return false;
        }
    }
    return true;
}

// Canonical class representatives (as raw masks) of k-subsets of Z_N in
// ascending order. Workers scan disjoint contiguous rank ranges; chunks are
// concatenated in rank order, so the result is identical for any count.
std::vector<std::uint64_t> scan_canonical(int modulus, int cardinality, int workers) {
    if (modulus < 1 || modulus > max_enumeration_modulus)
        throw precondition_error("enumeration: modulus must be in [1, " +
                                 std::to_string(max_enumeration_modulus) + "]");
    if (cardinality < 0 || cardinality > modulus)
        throw precondition_error("enumeration: cardinality out of range");
    if (workers < 1)
        throw precondition_error("enumeration: worker count must be >= 1");

    if (cardinality == 0) return {0};

    // Nonempty canonical forms contain 0: fix bit 0, enumerate the rest.
    const int rest = cardinality - 1;
    const unsigned long long total = binom(modulus - 1, rest);
    const unsigned long long nworkers =
        std::min<unsigned long long>(workers, std::max<unsigned long long>(total, 1));

    std::vector<std::vector<std::uint64_t>> found(nworkers);
    auto run = [&](unsigned w) {
        const unsigned long long lo = total * w / nworkers;
        const unsigned long long hi = total * (w + 1) / nworkers;
        if (lo >= hi) return;
        std::uint64_t upper = unrank_colex(lo, rest, modulus - 1);
        for (unsigned long long r = lo; r < hi; ++r) {
            const std::uint64_t mask = 1ull | (upper << 1);
            if (is_canonical_mask(mask, modulus)) found[w].push_back(mask);
            if (r + 1 < hi) upper = rest == 0 ? upper : next_combination(upper);
        }
    };

    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    return all;
}

std::vector<int> census_key(std::uint64_t mask, int modulus, CensusKey key) {
    PcSet s(modulus, mask);
    if (key == CensusKey::interval_content) return interval_content(s).digits;
    return patterson(s).coefficients;
}

} // namespace

std::vector<PcSet> enum_classes(int modulus, int cardinality, int workers) {
    std::vector<PcSet> out;
    for (std::uint64_t mask : scan_canonical(modulus, cardinality, workers))
        out.push_back(PcSet(modulus, mask));
    return out;
}

TupleCensus census(int modulus, int cardinality, int workers, CensusKey key) {
    const std::vector<std::uint64_t> reps = scan_canonical(modulus, cardinality, workers);

    TupleCensus out;
    out.modulus = modulus;
    out.cardinality = cardinality;
    if (modulus < 2) return out;

    std::map<std::vector<int>, std::vector<std::uint64_t>> cells;
    for (std::uint64_t mask : reps) cells[census_key(mask, modulus, key)].push_back(mask);

    for (auto& [digits, masks] : cells) {
        if (masks.size() < 2) continue;
        HomometryTuple t;
        t.modulus = modulus;
        t.cardinality = cardinality;
        // Both key modes carry the same grouping; the reported content is
        // always the interval content.
        t.content = interval_content(PcSet(modulus, masks.front()));
        for (std::uint64_t m : masks) t.classes.push_back(PcSet(modulus, m));
        out.tuples.push_back(std::move(t));
    }
    std::sort(out.tuples.begin(), out.tuples.end(),
              [](const HomometryTuple& a, const HomometryTuple& b) {
                  return a.content < b.content;
              });
    for (const HomometryTuple& t : out.tuples) ++out.spectrum[t.multiplicity()];
    out.vectors_with_tuples = static_cast<long>(out.tuples.size());
    return out;
}

std::optional<HomometryTuple> first_tuple_of_multiplicity(int modulus, int cardinality,
                                                          int multiplicity, int workers) {
    if (multiplicity < 3)
        throw precondition_error("first_tuple_of_multiplicity: multiplicity must be >= 3");
    const TupleCensus c = census(modulus, cardinality, workers);
    auto lex_least_class = [](const HomometryTuple& t) {
        PcSet least = t.classes.front();
        for (const PcSet& cls : t.classes)
            if (lex_list_less(cls, least)) least = cls;
        return least;
    };
    const HomometryTuple* best = nullptr;
    PcSet best_key;
    for (const HomometryTuple& t : c.tuples) {
        if (t.multiplicity() != multiplicity) continue;
        const PcSet key = lex_least_class(t);
        if (!best || lex_list_less(key, best_key)) {
            best = &t;
            best_key = key;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

std::optional<CensusTable::Cell> CensusTable::cell(int modulus, int cardinality) const {
    auto it = cells.find({modulus, cardinality});
    if (it == cells.end()) return std::nullopt;
    return it->second;
}

CensusTable build_table(int n_lo, int n_hi, int k_lo, int k_hi, int workers) {
    if (n_lo > n_hi || k_lo > k_hi)
        throw precondition_error("build_table: empty range");
    CensusTable table;
    for (int n = n_lo; n <= n_hi; ++n) table.moduli.push_back(n);
    for (int k = k_lo; k <= k_hi; ++k) table.cardinalities.push_back(k);
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int k = k_lo; k <= k_hi; ++k) {
            if (k > n) continue;
            const TupleCensus c = census(n, k, workers);
            bool higher = false;
            for (const auto& [t, count] : c.spectrum)
                if (t > 2 && count > 0) higher = true;
            table.cells[{n, k}] = CensusTable::Cell{c.vectors_with_tuples, higher};
        }
    }
    return table;
}

std::string to_csv(const CensusTable& table) {
    std::string out = "k\\N";
    for (int n : table.moduli) out += "," + std::to_string(n);
    out += "\n";
    for (int k : table.cardinalities) {
        out += std::to_string(k);
        for (int n : table.moduli) {
            out += ",";
            const auto cell = table.cell(n, k);
            if (!cell) {
                out += "-";
            } else {
                out += std::to_string(cell->vectors_with_tuples);
                if (cell->has_higher_tuples) out += "*";
            }
        }
        out += "\n";
    }
    return out;
}

} // namespace zrel
