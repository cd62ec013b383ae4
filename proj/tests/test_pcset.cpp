#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zrel/pcset.hpp"
#include "zrel/setlit.hpp"

using namespace zrel;

namespace {

PcSet random_set(std::mt19937& rng, int min_modulus = 2, int max_modulus = 32) {
    const int n = std::uniform_int_distribution<int>(min_modulus, max_modulus)(rng);
    const std::uint64_t mask = n == 64 ? ~0ull : (1ull << n) - 1;
    return PcSet(n, std::uniform_int_distribution<std::uint64_t>(0, mask)(rng));
}

} // namespace

TEST_CASE("PcSet construction and validation") {
    PcSet s = PcSet::from_members(12, {0, 2, 3, 5});
    CHECK(s.size() == 4);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    CHECK(s.members() == std::vector<int>{0, 2, 3, 5});

    CHECK_THROWS_AS(PcSet(0, 0), precondition_error);
    CHECK_THROWS_AS(PcSet(65, 0), precondition_error);
    CHECK_THROWS_AS(PcSet(4, 0b10000), precondition_error); // member >= N
    CHECK_THROWS_AS(PcSet::from_members(8, {8}), precondition_error);
    CHECK_THROWS_AS(PcSet::from_members(8, {-1}), precondition_error);

    CHECK(PcSet::full_set(5).size() == 5);
    CHECK(PcSet::empty_set(5).empty());
    CHECK(PcSet::full_set(64).size() == 64);
}

TEST_CASE("interval function: the Z_12 reference example") {
    PcSet a = PcSet::from_members(12, {0, 2, 3, 5});
    CHECK(interval_function(a, a) ==
          std::vector<int>{4, 1, 2, 2, 0, 1, 0, 1, 0, 2, 2, 1});
}

TEST_CASE("interval function edge cases") {
    // empty set: all-zero counts
    PcSet e = PcSet::empty_set(7);
    CHECK(interval_function(e, PcSet::full_set(7)) == std::vector<int>(7, 0));

    // {0,1} in Z_5, counted by hand over the four ordered pairs
    PcSet s = PcSet::from_members(5, {0, 1});
    CHECK(interval_function(s, s) == std::vector<int>{2, 1, 0, 0, 1});

    CHECK_THROWS_AS(interval_function(PcSet::empty_set(5), PcSet::empty_set(6)),
                    precondition_error);
}

TEST_CASE("interval function against the double-loop oracle") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        PcSet a = random_set(rng, 2, 64); // full supported modulus range
        PcSet b = PcSet(a.modulus(),
                        random_set(rng, a.modulus(), a.modulus()).bits());
        CHECK(interval_function(a, b) == oracle::interval_function(a, b));
    }
}

TEST_CASE("ifunc(A,B)[n] == ifunc(B,A)[N-n]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        PcSet a = random_set(rng);
        PcSet b = PcSet(a.modulus(), random_set(rng, a.modulus(), a.modulus()).bits());
        const std::vector<int> ab = interval_function(a, b);
        const std::vector<int> ba = interval_function(b, a);
        const int n = a.modulus();
        for (int t = 0; t < n; ++t) CHECK(ab[t] == ba[(n - t) % n]);
    }
}

TEST_CASE("interval vector examples and invariants") {
    CHECK(interval_vector(PcSet::from_members(12, {0, 1, 3, 4, 7, 9})).counts ==
          std::vector<int>{6, 2, 2, 4, 3, 2, 4, 2, 3, 4, 2, 2});
    CHECK(interval_vector(PcSet::from_members(5, {0})).counts ==
          std::vector<int>{1, 0, 0, 0, 0});
    CHECK(interval_vector(PcSet::from_members(8, {0, 3, 4, 5})).counts ==
          std::vector<int>{4, 2, 1, 2, 2, 2, 1, 2});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        PcSet a = random_set(rng);
        const IntervalVector iv = interval_vector(a);
        const int n = a.modulus();
        CHECK(iv.counts[0] == a.size());
        long sum = 0;
        for (int t = 0; t < n; ++t) {
            CHECK(iv.counts[t] == iv.counts[(n - t) % n]);
            sum += iv.counts[t];
        }
        CHECK(sum == static_cast<long>(a.size()) * a.size());
        if (n % 2 == 0) CHECK(iv.counts[n / 2] % 2 == 0);
    }
}

TEST_CASE("interval vector is a dihedral invariant") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        PcSet a = random_set(rng);
        const int t = std::uniform_int_distribution<int>(0, a.modulus() - 1)(rng);
        CHECK(interval_vector(a.transposed(t)) == interval_vector(a));
        CHECK(interval_vector(a.inverted(t)) == interval_vector(a));
    }
}

TEST_CASE("interval content examples") {
    CHECK(interval_content(PcSet::from_members(12, {0, 1, 3, 4, 7, 9})).digits ==
          std::vector<int>{2, 2, 4, 3, 2, 2});
    CHECK(interval_content(PcSet::from_members(8, {0, 3, 4, 5})).digits ==
          std::vector<int>{2, 1, 2, 1});
    CHECK(interval_content(PcSet::from_members(8, {0, 1, 3, 5})).digits ==
          std::vector<int>{1, 2, 2, 1});
    CHECK(interval_content(PcSet::from_members(3, {0, 1})).digits == std::vector<int>{1});
    CHECK_THROWS_AS(interval_content(PcSet::empty_set(1)), precondition_error);
}

TEST_CASE("Patterson polynomial equals the interval vector (Proposition 1)") {
    PcSet a = PcSet::from_members(12, {0, 2, 3, 5});
    // 4 + x + 2x^2 + 2x^3 + x^5 + x^7 + 2x^9 + 2x^10 + x^11
    CHECK(patterson(a).coefficients ==
          std::vector<int>{4, 1, 2, 2, 0, 1, 0, 1, 0, 2, 2, 1});
    CHECK(to_string(patterson(a)) ==
          "4 + x + 2x^2 + 2x^3 + x^5 + x^7 + 2x^9 + 2x^10 + x^11");
    CHECK(to_string(patterson(PcSet::empty_set(6))) == "0");

    std::mt19937 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        PcSet s = random_set(rng);
        CHECK(patterson(s).coefficients == interval_vector(s).counts);
    }
}

TEST_CASE("transforms") {
    PcSet a = PcSet::from_members(12, {0, 1, 2, 3, 5, 6});
    CHECK(a.multiplied(5) == PcSet::from_members(12, {0, 1, 3, 5, 6, 10}));
    CHECK(a.transposed(0) == a);
    CHECK(PcSet::from_members(8, {0, 3, 4, 5}).inverted(0) ==
          PcSet::from_members(8, {0, 3, 4, 5})); // inversionally symmetric

    CHECK(a.mul_bijective(5));
    CHECK(!a.mul_bijective(4));
    // non-coprime multiplication collapses members but is allowed
    CHECK(PcSet::from_members(12, {0, 6}).multiplied(2) == PcSet::from_members(12, {0}));

    const TransformResult tr = apply({Transform::Kind::multiply, 4}, a);
    CHECK(!tr.bijective);
    const TransformResult ti = apply({Transform::Kind::invert, 0}, a);
    CHECK(ti.bijective);
    CHECK(ti.image == a.inverted(0));
    CHECK(apply({Transform::Kind::transpose, 5}, a).image == a.transposed(5));
}

TEST_CASE("complement") {
    CHECK(PcSet::from_members(8, {0, 1, 3, 5}).complemented() ==
          PcSet::from_members(8, {2, 4, 6, 7}));
    CHECK(PcSet::empty_set(9).complemented() == PcSet::full_set(9));

    std::mt19937 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        PcSet a = random_set(rng);
        CHECK(a.complemented().complemented() == a);
        CHECK(a.complemented().size() == a.modulus() - a.size());
    }
}

TEST_CASE("canonical form: frozen examples") {
    CHECK(PcSet::from_members(8, {0, 3, 4, 5}).canonical() ==
          PcSet::from_members(8, {0, 1, 2, 5}));
    CHECK(PcSet::from_members(8, {0, 4, 5, 7}).canonical() ==
          PcSet::from_members(8, {0, 1, 3, 4}));
    CHECK(PcSet::empty_set(6).canonical() == PcSet::empty_set(6));
    CHECK(PcSet::full_set(6).canonical() == PcSet::full_set(6));
}

TEST_CASE("canonical form against the member-list oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        PcSet a = random_set(rng, 2, 64);
        CHECK(a.canonical().members() == oracle::canonical_members(a));
    }
}

TEST_CASE("canonical form is idempotent and dihedrally invariant") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        PcSet a = random_set(rng);
        PcSet c = a.canonical();
        CHECK(c.canonical() == c);
        const int t = std::uniform_int_distribution<int>(0, a.modulus() - 1)(rng);
        CHECK(a.transposed(t).canonical() == c);
        CHECK(a.inverted(t).canonical() == c);
    }
}

TEST_CASE("lex_list_less orders sorted member lists") {
    PcSet a = PcSet::from_members(8, {0, 1, 2, 5});
    PcSet b = PcSet::from_members(8, {0, 1, 3, 4});
    CHECK(lex_list_less(a, b)); // (0,1,2,5) < (0,1,3,4) though bitmask order disagrees
    CHECK(!lex_list_less(b, a));
    CHECK(a.bits() > b.bits());
    CHECK(!lex_list_less(a, a));
    // a proper prefix precedes its extensions
    CHECK(lex_list_less(PcSet::from_members(8, {0, 1}), PcSet::from_members(8, {0, 1, 7})));
    CHECK(!lex_list_less(PcSet::from_members(8, {0, 1, 7}), PcSet::from_members(8, {0, 1})));

    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        PcSet x = random_set(rng, 2, 16);
        PcSet y = PcSet(x.modulus(), random_set(rng, x.modulus(), x.modulus()).bits());
        CHECK(lex_list_less(x, y) == (x.members() < y.members()));
    }
}

TEST_CASE("set literal parsing") {
    CHECK(parse_set("15ab", 12) == PcSet::from_members(12, {1, 5, 10, 11}));
    CHECK(parse_set("0,1,3,4", 8) == PcSet::from_members(8, {0, 1, 3, 4}));
    CHECK(parse_set("12,", 16) == PcSet::from_members(16, {12}));
    CHECK(parse_set("12", 16) == PcSet::from_members(16, {1, 2}));
    CHECK_THROWS_AS(parse_set("0c", 12), precondition_error); // c = 12 out of range
    CHECK_THROWS_AS(parse_set("", 12), precondition_error);
    CHECK_THROWS_AS(parse_set("0,,3", 12), precondition_error);
    CHECK_THROWS_AS(parse_set("1,ab", 12), precondition_error); // mixed formats
    CHECK_THROWS_AS(parse_set("0,12", 12), precondition_error);
}

TEST_CASE("set literal round trips") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        PcSet a = random_set(rng);
        if (!a.empty()) CHECK(parse_set(format_set(a), a.modulus()) == a);
        if (!a.empty() && a.modulus() <= 36)
            CHECK(parse_set(format_set_compact(a), a.modulus()) == a);
    }
    CHECK(format_set_compact(PcSet::from_members(12, {1, 5, 10, 11})) == "15ab");
}
