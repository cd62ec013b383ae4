#pragma once

// Generative theorems for Z-related pairs: complementation, multiplication
// stability, replication to Z_{Nm} (union of translates), the combined
// multiply-and-translate construction, Rosenblatt's classification of
// length-4 pairs, the interlaced (diameter-insertion) family, and two
// empirically established length-5 families.
//
// Every constructor re-verifies the Z-relation of what it built and throws
// invariant_error on failure, so the theorems run as checks, not axioms.

#include <string>
#include <utility>
#include <vector>

#include "zrel/homometry.hpp"
#include "zrel/pcset.hpp"

namespace zrel {

struct Provenance {
    std::string rule;
    std::vector<std::pair<std::string, long long>> params;
};

// A verified Z-related pair plus the rule that produced it.
class ZPair {
public:
    // For user-supplied pairs; throws precondition_error when not Z-related.
    static ZPair checked(PcSet first, PcSet second, Provenance prov = {"input", {}});

    const PcSet& first() const { return first_; }
    const PcSet& second() const { return second_; }
    int modulus() const { return first_.modulus(); }
    const Provenance& provenance() const { return prov_; }

private:
    friend ZPair constructed_pair(PcSet, PcSet, Provenance);
    ZPair(PcSet f, PcSet s, Provenance p)
        : first_(std::move(f)), second_(std::move(s)), prov_(std::move(p)) {}

    PcSet first_, second_;
    Provenance prov_;
};

// Patterson result (1): complements of a Z-related pair are Z-related.
ZPair complement_pair(const ZPair& p);

// Multiplication stability: (M_m A, M_m B) for gcd(m, N) = 1.
ZPair multiply_pair(const ZPair& p, long long m);

// Union of translates A u T_N(A) u ... u T_{N(m-1)}(A) inside Z_{Nm}, m >= 2.
ZPair replicate(const ZPair& p, int m);

// (M_m A u T_1 M_m A u ... u T_{m-1} M_m A) inside Z_{Nm};
// requires gcd(N, m) = 1 and m not in {1, N-1}.
ZPair multiply_replicate(const ZPair& p, int m);

enum class RosenblattType { i, ii };

// The complete classification of strictly Z-related 4-sets.
// Type i  (Z_{4n}):  {0, a, a+n, 2n} / {0, a, n, 2n+a},  n >= 2, 1 <= a <= n-1.
// Type ii (Z_{13n}): {0, n, 4n, 6n} / {0, 2n, 3n, 7n},   n >= 1.
ZPair rosenblatt(RosenblattType type, int n, int a = 0);

// {0,1,3+k,4+k,6+k} / {0,1,2,4+k,7+k} in Z_{10+2k}, k >= 0.
ZPair interlaced_family(int k);

// For n >= 5:
//   family 1: {0,1,n-2,n-1,n+1} / {0,1,2,n-1,n+2} in Z_{2n}
//   family 2: {0,1,2,n-2,n+1} / {0,1,3,n-1,n}     in Z_{2n}
ZPair empirical_family(int which, int n);

} // namespace zrel
