#pragma once

// Subsets of the cyclic group Z_N and their interval arithmetic:
// interval function/vector, interval content, Patterson (autocorrelation)
// polynomial, dihedral and multiplicative transforms, complement, and the
// canonical (lex-min) representative of a dihedral orbit.
//
// Everything here is an immutable value; all functions are pure.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "zrel/errors.hpp"

namespace zrel {

// A subset of Z_N held as a 64-bit membership bitmask (bit i <=> i in the set).
class PcSet {
public:
    static constexpr int max_modulus = 64;

    PcSet() = default; // empty set in Z_1
    PcSet(int modulus, std::uint64_t bits);

    static PcSet empty_set(int modulus);
    static PcSet full_set(int modulus);
    static PcSet from_members(int modulus, std::initializer_list<int> members);
    static PcSet from_members(int modulus, const std::vector<int>& members);

    int modulus() const { return modulus_; }
    std::uint64_t bits() const { return bits_; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int pc) const;
    std::vector<int> members() const; // ascending

    PcSet transposed(int n) const;          // T_n(x) = x + n mod N
    PcSet inverted(int n = 0) const;        // I_n(x) = -x + n mod N
    PcSet multiplied(long long m) const;    // M_m(x) = m*x mod N
    bool mul_bijective(long long m) const;  // gcd(m mod N, N) == 1
    PcSet complemented() const;

    // Lexicographic minimum, over sorted element lists, of the 2N dihedral
    // images {T_n(A), T_n(I_0(A))}. Idempotent, constant on each orbit.
    PcSet canonical() const;
    bool is_canonical() const;

    friend bool operator==(const PcSet&, const PcSet&) = default;
    // (modulus, bitmask) order; the "sorted by canonical bitmask" order used
    // throughout enumeration output.
    friend auto operator<=>(const PcSet&, const PcSet&) = default;

private:
    int modulus_ = 1;
    std::uint64_t bits_ = 0;
};

// Sorted-element-list lexicographic order (the canonical-form order).
// {0,1,2,5} precedes {0,1,3,4} here although its bitmask is larger.
bool lex_list_less(const PcSet& a, const PcSet& b);

// T_n / I_n / M_m as a value, for callers that select a transform at runtime.
struct Transform {
    enum class Kind { transpose, invert, multiply };
    Kind kind;
    long long amount;
};

struct TransformResult {
    PcSet image;
    bool bijective; // always true for T_n/I_n; gcd(m,N)==1 for M_m
};

TransformResult apply(const Transform& t, const PcSet& a);

// iv(A)(n) = #{(a,b) in A x A : b - a = n}, one count per n in Z_N.
struct IntervalVector {
    int modulus = 1;
    std::vector<int> counts;

    friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
};

// The folded key of the Z-relation: digits iv(1)..iv(floor(N/2)), the final
// digit halved when N is even so each unordered pair is counted once.
struct IntervalContent {
    int modulus = 2;
    std::vector<int> digits;

    friend bool operator==(const IntervalContent&, const IntervalContent&) = default;
    friend auto operator<=>(const IntervalContent&, const IntervalContent&) = default;
};

// Coefficients of A(x) * A(x^-1) mod (x^N - 1).
struct PattersonPoly {
    int modulus = 1;
    std::vector<int> coefficients;

    friend bool operator==(const PattersonPoly&, const PattersonPoly&) = default;
};

// ifunc(A,B)(n) = #{k in A : k + n in B}. Moduli must match.
std::vector<int> interval_function(const PcSet& a, const PcSet& b);

IntervalVector interval_vector(const PcSet& a);

// Requires modulus >= 2 (no interval digits exist below that).
IntervalContent interval_content(const PcSet& a);

// Computed as a literal cyclic polynomial product, deliberately not via
// interval counting; Proposition-1 equality of the two routes is a test.
PattersonPoly patterson(const PcSet& a);

// "4 + x + 2x^2 + ..." with zero terms omitted; "0" for the zero polynomial.
std::string to_string(const PattersonPoly& p);

} // namespace zrel
