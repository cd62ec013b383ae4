#include "zrel/pcset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace zrel {
namespace {

std::uint64_t mask_of(int modulus) {
    return modulus == 64 ? ~0ull : (1ull << modulus) - 1;
}

std::uint64_t rotl_bits(std::uint64_t bits, int r, int modulus) {
    r %= modulus;
    if (r < 0) r += modulus;
    if (r == 0) return bits;
    return ((bits << r) | (bits >> (modulus - r))) & mask_of(modulus);
}

// I_0: bit i -> bit (N - i) mod N
std::uint64_t reflect_bits(std::uint64_t bits, int modulus) {
    std::uint64_t out = 0;
    while (bits) {
        int i = std::countr_zero(bits);
        bits &= bits - 1;
        out |= 1ull << ((modulus - i) % modulus);
    }
    return out;
}

int norm_mod(long long v, int modulus) {
    long long r = v % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

} // namespace

PcSet::PcSet(int modulus, std::uint64_t bits) : modulus_(modulus), bits_(bits) {
    if (modulus < 1 || modulus > max_modulus)
        throw precondition_error("PcSet: modulus must be in [1, 64], got " +
                                 std::to_string(modulus));
    if ((bits & ~mask_of(modulus)) != 0)
        throw precondition_error("PcSet: bitmask has members >= modulus");
}

PcSet PcSet::empty_set(int modulus) { return PcSet(modulus, 0); }

PcSet PcSet::full_set(int modulus) { return PcSet(modulus, mask_of(modulus)); }

PcSet PcSet::from_members(int modulus, std::initializer_list<int> members) {
    return from_members(modulus, std::vector<int>(members));
}

PcSet PcSet::from_members(int modulus, const std::vector<int>& members) {
    PcSet s(modulus, 0);
    for (int m : members) {
        if (m < 0 || m >= modulus)
            throw precondition_error("PcSet: member " + std::to_string(m) +
                                     " outside Z_" + std::to_string(modulus));
        s.bits_ |= 1ull << m;
    }
    return s;
}

int PcSet::size() const { return std::popcount(bits_); }

bool PcSet::contains(int pc) const {
    return pc >= 0 && pc < modulus_ && ((bits_ >> pc) & 1);
}

std::vector<int> PcSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return out;
}

PcSet PcSet::transposed(int n) const {
    PcSet s = *this;
    s.bits_ = rotl_bits(bits_, norm_mod(n, modulus_), modulus_);
    return s;
}

PcSet PcSet::inverted(int n) const {
    PcSet s = *this;
    s.bits_ = rotl_bits(reflect_bits(bits_, modulus_), norm_mod(n, modulus_), modulus_);
    return s;
}

PcSet PcSet::multiplied(long long m) const {
    int mm = norm_mod(m, modulus_);
    PcSet s = *this;
    s.bits_ = 0;
    std::uint64_t b = bits_;
    while (b) {
        int i = std::countr_zero(b);
        b &= b - 1;
        s.bits_ |= 1ull << (static_cast<long long>(i) * mm % modulus_);
    }
    return s;
}

bool PcSet::mul_bijective(long long m) const {
    return std::gcd(static_cast<long long>(norm_mod(m, modulus_)),
                    static_cast<long long>(modulus_)) == 1;
}

PcSet PcSet::complemented() const {
    PcSet s = *this;
    s.bits_ = ~bits_ & mask_of(modulus_);
    return s;
}

bool lex_list_less(const PcSet& a, const PcSet& b) {
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    const std::uint64_t low = d & (~d + 1);      // first differing element
    const std::uint64_t above = ~(low | (low - 1));
    if (a.bits() & low) {
        // a's next element is the smaller one, unless b's list already
        // ended there (a proper prefix precedes its extensions).
        return (b.bits() & above) != 0;
    }
    return (a.bits() & above) == 0;
}

PcSet PcSet::canonical() const {
    if (bits_ == 0) return *this;
    // The lex-min image starts at 0, so only images translating some member
    // to 0 can win: 2k candidates instead of 2N.
    std::uint64_t best = ~0ull;
    bool have = false;
    const std::uint64_t refl = reflect_bits(bits_, modulus_);
    for (std::uint64_t base : {bits_, refl}) {
        std::uint64_t b = base;
        while (b) {
            int a = std::countr_zero(b);
            b &= b - 1;
            std::uint64_t img = rotl_bits(base, modulus_ - a, modulus_);
            if (!have) {
                best = img;
                have = true;
            } else {
                std::uint64_t d = img ^ best;
                if (d != 0 && (img & (d & (~d + 1)))) best = img; // equal popcount lex rule
            }
        }
    }
    PcSet s = *this;
    s.bits_ = best;
    return s;
}

bool PcSet::is_canonical() const { return canonical().bits_ == bits_; }

TransformResult apply(const Transform& t, const PcSet& a) {
    switch (t.kind) {
    case Transform::Kind::transpose:
        return {a.transposed(static_cast<int>(norm_mod(t.amount, a.modulus()))), true};
    case Transform::Kind::invert:
        return {a.inverted(static_cast<int>(norm_mod(t.amount, a.modulus()))), true};
    case Transform::Kind::multiply:
        return {a.multiplied(t.amount), a.mul_bijective(t.amount)};
    }
    throw invariant_error("apply: bad transform kind");
}

std::vector<int> interval_function(const PcSet& a, const PcSet& b) {
    if (a.modulus() != b.modulus())
        throw precondition_error("interval_function: sets live in different ambient groups (Z_" +
                                 std::to_string(a.modulus()) + " vs Z_" +
                                 std::to_string(b.modulus()) + ")");
    const int n = a.modulus();
    std::vector<int> out(n);
    for (int t = 0; t < n; ++t)
        out[t] = std::popcount(b.bits() & rotl_bits(a.bits(), t, n));
    return out;
}

IntervalVector interval_vector(const PcSet& a) {
    return IntervalVector{a.modulus(), interval_function(a, a)};
}

IntervalContent interval_content(const PcSet& a) {
    const int n = a.modulus();
    if (n < 2)
        throw precondition_error("interval_content: needs modulus >= 2");
    IntervalVector iv = interval_vector(a);
    IntervalContent ic;
    ic.modulus = n;
    ic.digits.resize(n / 2);
    for (int d = 1; d <= n / 2; ++d) ic.digits[d - 1] = iv.counts[d];
    if (n % 2 == 0) {
        if (ic.digits.back() % 2 != 0)
            throw invariant_error("interval_content: odd diameter count");
        ic.digits.back() /= 2;
    }
    return ic;
}

PattersonPoly patterson(const PcSet& a) {
    const int n = a.modulus();
    std::vector<int> pa(n, 0), pb(n, 0);
    for (int m : a.members()) pa[m] = 1;
    for (int m : a.inverted(0).members()) pb[m] = 1;
    PattersonPoly f;
    f.modulus = n;
    f.coefficients.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!pa[i]) continue;
        for (int j = 0; j < n; ++j)
            if (pb[j]) f.coefficients[(i + j) % n] += pa[i] * pb[j];
    }
    return f;
}

std::string to_string(const PattersonPoly& p) {
    std::string out;
    for (int e = 0; e < p.modulus; ++e) {
        int c = p.coefficients[e];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += "x";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

} // namespace zrel
