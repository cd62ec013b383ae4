#include <doctest.h>

#include "zrel/constructors.hpp"
#include "zrel/enumeration.hpp"

using namespace zrel;

namespace {

ZPair z8_pair() {
    return ZPair::checked(PcSet::from_members(8, {0, 1, 3, 4}),
                          PcSet::from_members(8, {0, 1, 2, 5}));
}

ZPair hexachord_pair() {
    return ZPair::checked(PcSet::from_members(12, {0, 1, 2, 3, 5, 6}),
                          PcSet::from_members(12, {0, 1, 2, 3, 4, 7}));
}

} // namespace

TEST_CASE("ZPair::checked rejects non-related input") {
    CHECK_THROWS_AS(ZPair::checked(PcSet::from_members(12, {0, 1, 2}),
                                   PcSet::from_members(12, {0, 1, 3})),
                    precondition_error);
}

TEST_CASE("complement_pair") {
    // self-complementary Z_8 pair: ic(A) = (1,2,2,1) = ic(A^c)
    ZPair p = ZPair::checked(PcSet::from_members(8, {0, 1, 3, 5}),
                             PcSet::from_members(8, {2, 4, 6, 7}));
    CHECK(interval_content(p.first()).digits == std::vector<int>{1, 2, 2, 1});

    ZPair q = complement_pair(hexachord_pair());
    CHECK(q.first() == PcSet::from_members(12, {4, 7, 8, 9, 10, 11}));
    // complementary hexachords: complementing swaps the pair's classes
    CHECK(q.first().canonical() == hexachord_pair().second().canonical());
    CHECK(q.second().canonical() == hexachord_pair().first().canonical());

    ZPair back = complement_pair(complement_pair(z8_pair()));
    CHECK(back.first() == z8_pair().first());
    CHECK(back.second() == z8_pair().second());
}

TEST_CASE("multiply_pair: the M_5 hexachord example") {
    ZPair p = multiply_pair(hexachord_pair(), 5);
    CHECK(p.first() == PcSet::from_members(12, {0, 1, 3, 5, 6, 10}));
    CHECK(p.second() == PcSet::from_members(12, {0, 3, 5, 8, 10, 11}));
    // content changes: 433221 -> 233241 (halved diameter digit)
    CHECK(interval_content(hexachord_pair().first()).digits ==
          std::vector<int>{4, 3, 3, 2, 2, 1});
    CHECK(interval_content(p.first()).digits == std::vector<int>{2, 3, 3, 2, 4, 1});

    ZPair ident = multiply_pair(z8_pair(), 1);
    CHECK(ident.first() == z8_pair().first());

    // m = N-1 is inversion: classes unchanged
    ZPair inv = multiply_pair(z8_pair(), 7);
    CHECK(inv.first().canonical() == z8_pair().first().canonical());
    CHECK(inv.second().canonical() == z8_pair().second().canonical());

    CHECK_THROWS_AS(multiply_pair(z8_pair(), 2), precondition_error);
}

TEST_CASE("replicate") {
    ZPair d = replicate(z8_pair(), 2);
    CHECK(d.modulus() == 16);
    CHECK(d.first() == PcSet::from_members(16, {0, 1, 3, 4, 8, 9, 11, 12}));
    CHECK(d.second() == PcSet::from_members(16, {0, 1, 2, 5, 8, 9, 10, 13}));

    ZPair t = replicate(z8_pair(), 3);
    CHECK(t.modulus() == 24);
    CHECK(t.first().size() == 12);
    CHECK(is_z_related(t.first(), t.second()));

    // trivial input stays trivial
    PcSet a = PcSet::from_members(6, {0, 1, 3});
    ZPair same = replicate(ZPair::checked(a, a.transposed(2)), 2);
    CHECK(classify(same.first(), same.second()).kind == HomometryKind::trivial);

    CHECK_THROWS_AS(replicate(z8_pair(), 1), precondition_error);
    CHECK_THROWS_AS(replicate(z8_pair(), 9), precondition_error); // Z_72 unsupported
}

TEST_CASE("multiply_replicate: the Z_24 reference pair") {
    ZPair p = multiply_replicate(z8_pair(), 3);
    CHECK(p.modulus() == 24);
    // intermediate multiplication: M_3 A = {0,3,9,12} inside Z_24
    CHECK(p.first() == PcSet::from_members(24, {0, 1, 2, 3, 4, 5, 9, 10, 11, 12, 13, 14}));
    CHECK(p.second() == PcSet::from_members(24, {0, 1, 2, 3, 4, 5, 6, 7, 8, 15, 16, 17}));
    CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);

    CHECK_THROWS_AS(multiply_replicate(z8_pair(), 2), precondition_error); // gcd(8,2) != 1
    CHECK_THROWS_AS(multiply_replicate(z8_pair(), 1), precondition_error);
    CHECK_THROWS_AS(multiply_replicate(z8_pair(), 7), precondition_error); // m = N-1
}

TEST_CASE("rosenblatt classification instances") {
    ZPair i1 = rosenblatt(RosenblattType::i, 2, 1);
    CHECK(i1.modulus() == 8);
    CHECK(i1.first() == PcSet::from_members(8, {0, 1, 3, 4}));
    CHECK(i1.second() == PcSet::from_members(8, {0, 1, 2, 5}));
    CHECK(classify(i1.first(), i1.second()).kind == HomometryKind::strict);

    ZPair ii1 = rosenblatt(RosenblattType::ii, 1);
    CHECK(ii1.modulus() == 13);
    CHECK(ii1.first() == PcSet::from_members(13, {0, 1, 4, 6}));
    CHECK(ii1.second() == PcSet::from_members(13, {0, 2, 3, 7}));
    CHECK(classify(ii1.first(), ii1.second()).kind == HomometryKind::strict);

    CHECK_THROWS_AS(rosenblatt(RosenblattType::i, 2, 0), precondition_error);
    CHECK_THROWS_AS(rosenblatt(RosenblattType::i, 2, 2), precondition_error);
    CHECK_THROWS_AS(rosenblatt(RosenblattType::i, 1, 1), precondition_error);
    CHECK_THROWS_AS(rosenblatt(RosenblattType::ii, 0), precondition_error);
}

TEST_CASE("rosenblatt pairs are strict for every in-range parameter") {
    for (int n = 2; 4 * n <= 32; ++n)
        for (int a = 1; a < n; ++a) {
            ZPair p = rosenblatt(RosenblattType::i, n, a);
            CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);
        }
    for (int n = 1; 13 * n <= 32; ++n) {
        ZPair p = rosenblatt(RosenblattType::ii, n);
        CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);
    }
}

TEST_CASE("interlaced family") {
    ZPair k0 = interlaced_family(0);
    CHECK(k0.modulus() == 10);
    CHECK(k0.first() == PcSet::from_members(10, {0, 1, 3, 4, 6}));
    CHECK(k0.second() == PcSet::from_members(10, {0, 1, 2, 4, 7}));

    ZPair k1 = interlaced_family(1);
    CHECK(k1.modulus() == 12);
    CHECK(k1.first() == PcSet::from_members(12, {0, 1, 4, 5, 7}));
    CHECK(k1.second() == PcSet::from_members(12, {0, 1, 2, 5, 8}));

    ZPair k2 = interlaced_family(2);
    CHECK(k2.modulus() == 14);
    CHECK(k2.first() == PcSet::from_members(14, {0, 1, 5, 6, 8}));
    CHECK(k2.second() == PcSet::from_members(14, {0, 1, 2, 6, 9}));

    for (int k = 0; k <= 11; ++k) {
        ZPair p = interlaced_family(k);
        CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);
    }
    CHECK_THROWS_AS(interlaced_family(-1), precondition_error);
}

TEST_CASE("empirical families") {
    ZPair f1 = empirical_family(1, 5);
    CHECK(f1.modulus() == 10);
    CHECK(f1.first() == PcSet::from_members(10, {0, 1, 3, 4, 6}));
    CHECK(f1.second() == PcSet::from_members(10, {0, 1, 2, 4, 7}));

    ZPair f2 = empirical_family(2, 5);
    CHECK(f2.first() == PcSet::from_members(10, {0, 1, 2, 3, 6}));
    CHECK(f2.second() == PcSet::from_members(10, {0, 1, 3, 4, 5}));

    for (int which : {1, 2})
        for (int n = 5; 2 * n <= 32; ++n) {
            ZPair p = empirical_family(which, n);
            CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);
        }

    CHECK_THROWS_AS(empirical_family(1, 4), precondition_error);
    CHECK_THROWS_AS(empirical_family(3, 6), precondition_error);
}

TEST_CASE("theorem 1 closure: every strict pair with N <= 14 replicates into "
          "the doubled census") {
    for (int n = 8; n <= 14; ++n) {
        for (int k = 4; k <= n - 4; ++k) {
            const TupleCensus base = census(n, k);
            if (base.tuples.empty()) continue;
            const TupleCensus doubled = census(2 * n, 2 * k, 4);
            auto joint = [&](const PcSet& ca, const PcSet& cb) {
                for (const HomometryTuple& u : doubled.tuples) {
                    bool has_a = false, has_b = false;
                    for (const PcSet& c : u.classes) {
                        has_a |= c == ca;
                        has_b |= c == cb;
                    }
                    if (has_a && has_b) return true;
                }
                return false;
            };
            for (const HomometryTuple& t : base.tuples)
                for (size_t i = 0; i < t.classes.size(); ++i)
                    for (size_t j = i + 1; j < t.classes.size(); ++j) {
                        ZPair p = replicate(ZPair::checked(t.classes[i], t.classes[j]), 2);
                        CHECK(joint(p.first().canonical(), p.second().canonical()));
                    }
        }
    }
}

TEST_CASE("complementation preserves strictness over enumerated pairs") {
    for (int n = 8; n <= 13; ++n)
        for (int k = 4; k <= n - 4; ++k)
            for (const HomometryTuple& t : census(n, k).tuples)
                for (size_t i = 0; i < t.classes.size(); ++i)
                    for (size_t j = i + 1; j < t.classes.size(); ++j) {
                        ZPair p = complement_pair(ZPair::checked(t.classes[i], t.classes[j]));
                        CHECK(classify(p.first(), p.second()).kind == HomometryKind::strict);
                    }
}
