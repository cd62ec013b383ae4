#include "zrel/constructors.hpp"

#include <numeric>

#include "zrel/setlit.hpp"

namespace zrel {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error(what);
}

int checked_product_modulus(int n, int m) {
    long long nm = static_cast<long long>(n) * m;
    if (nm > PcSet::max_modulus)
        throw precondition_error("constructor output lands in Z_" + std::to_string(nm) +
                                 ", beyond the supported modulus " +
                                 std::to_string(PcSet::max_modulus));
    return static_cast<int>(nm);
}

} // namespace

ZPair constructed_pair(PcSet a, PcSet b, Provenance prov) {
    if (!is_z_related(a, b))
        throw invariant_error("constructor '" + prov.rule + "' produced a non-Z-related pair " +
                              format_set(a) + " / " + format_set(b) + " in Z_" +
                              std::to_string(a.modulus()));
    return ZPair(std::move(a), std::move(b), std::move(prov));
}

ZPair ZPair::checked(PcSet first, PcSet second, Provenance prov) {
    if (!is_z_related(first, second))
        throw precondition_error("pair " + format_set(first) + " / " + format_set(second) +
                                 " in Z_" + std::to_string(first.modulus()) +
                                 " is not Z-related");
    return ZPair(std::move(first), std::move(second), std::move(prov));
}

ZPair complement_pair(const ZPair& p) {
    return constructed_pair(p.first().complemented(), p.second().complemented(),
                            {"complement", {}});
}

ZPair multiply_pair(const ZPair& p, long long m) {
    const int n = p.modulus();
    require(std::gcd(((m % n) + n) % n, static_cast<long long>(n)) == 1,
            "multiply_pair: gcd(m, N) must be 1 (M_" + std::to_string(m) +
                " is not bijective on Z_" + std::to_string(n) + ")");
    return constructed_pair(p.first().multiplied(m), p.second().multiplied(m),
                            {"multiply", {{"m", m}}});
}

ZPair replicate(const ZPair& p, int m) {
    require(m >= 2, "replicate: m must be >= 2");
    const int n = p.modulus();
    const int nm = checked_product_modulus(n, m);
    auto lift = [&](const PcSet& s) {
        PcSet out = PcSet::empty_set(nm);
        for (int e : s.members())
            for (int i = 0; i < m; ++i)
                out = PcSet(nm, out.bits() | (1ull << (e + static_cast<long long>(n) * i)));
        return out;
    };
    return constructed_pair(lift(p.first()), lift(p.second()),
                            {"replicate", {{"m", m}}});
}

ZPair multiply_replicate(const ZPair& p, int m) {
    const int n = p.modulus();
    require(std::gcd(n, m) == 1, "multiply_replicate: gcd(N, m) must be 1");
    require(m != 1 && m != n - 1, "multiply_replicate: m = 1 and m = N-1 are excluded");
    require(m >= 2, "multiply_replicate: m must be >= 2");
    const int nm = checked_product_modulus(n, m);
    auto lift = [&](const PcSet& s) {
        PcSet out = PcSet::empty_set(nm);
        for (int e : s.members()) {
            const long long me = static_cast<long long>(e) * m; // M_m image inside Z_{Nm}
            for (int j = 0; j < m; ++j)
                out = PcSet(nm, out.bits() | (1ull << ((me + j) % nm)));
        }
        return out;
    };
    return constructed_pair(lift(p.first()), lift(p.second()),
                            {"multiply_replicate", {{"m", m}}});
}

ZPair rosenblatt(RosenblattType type, int n, int a) {
    if (type == RosenblattType::i) {
        require(n >= 2, "rosenblatt type i: n must be >= 2");
        require(a >= 1 && a <= n - 1, "rosenblatt type i: a must be in {1,...,n-1}");
        const int mod = checked_product_modulus(n, 4);
        return constructed_pair(PcSet::from_members(mod, {0, a, a + n, 2 * n}),
                                PcSet::from_members(mod, {0, a, n, 2 * n + a}),
                                {"rosenblatt_i", {{"n", n}, {"a", a}}});
    }
    require(n >= 1, "rosenblatt type ii: n must be >= 1");
    const int mod = checked_product_modulus(n, 13);
    return constructed_pair(PcSet::from_members(mod, {0, n, 4 * n, 6 * n}),
                            PcSet::from_members(mod, {0, 2 * n, 3 * n, 7 * n}),
                            {"rosenblatt_ii", {{"n", n}}});
}

ZPair interlaced_family(int k) {
    require(k >= 0, "interlaced_family: k must be >= 0");
    const int mod = 10 + 2 * k;
    if (mod > PcSet::max_modulus)
        throw precondition_error("interlaced_family: Z_" + std::to_string(mod) +
                                 " beyond supported modulus");
    return constructed_pair(PcSet::from_members(mod, {0, 1, 3 + k, 4 + k, 6 + k}),
                            PcSet::from_members(mod, {0, 1, 2, 4 + k, 7 + k}),
                            {"interlaced", {{"k", k}}});
}

ZPair empirical_family(int which, int n) {
    require(which == 1 || which == 2, "empirical_family: family must be 1 or 2");
    require(n >= 5, "empirical_family: n must be >= 5");
    const int mod = checked_product_modulus(n, 2);
    if (which == 1)
        return constructed_pair(PcSet::from_members(mod, {0, 1, n - 2, n - 1, n + 1}),
                                PcSet::from_members(mod, {0, 1, 2, n - 1, n + 2}),
                                {"empirical_1", {{"n", n}}});
    return constructed_pair(PcSet::from_members(mod, {0, 1, 2, n - 2, n + 1}),
                            PcSet::from_members(mod, {0, 1, 3, n - 1, n}),
                            {"empirical_2", {{"n", n}}});
}

} // namespace zrel
