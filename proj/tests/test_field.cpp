#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "evoternary/field.hpp"
#include "evoternary/rng.hpp"

using namespace evoternary;

namespace {
const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);
}  // namespace

TEST_CASE("parse reduces to canonical form") {
    CHECK(Q.parse("-4/6").str() == "-2/3");
    CHECK(Q.parse("0/7").str() == "0");
    CHECK(Q.parse("10/2").str() == "5");
    CHECK(F5.parse("7").residue() == 2);
    CHECK(F7.parse("1/2").residue() == 4);
    CHECK(F7.parse("-1").residue() == 6);
    CHECK(F5.parse("123456789123456789123456789").residue() ==
          F5.parse("4").residue());  // 1e26-ish literal reduced mod 5
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Q.parse(""), ParseError);
    CHECK_THROWS_AS(Q.parse("-"), ParseError);
    CHECK_THROWS_AS(Q.parse("1/"), ParseError);
    CHECK_THROWS_AS(Q.parse("/2"), ParseError);
    CHECK_THROWS_AS(Q.parse("1//2"), ParseError);
    CHECK_THROWS_AS(Q.parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Q.parse("a"), ParseError);
    CHECK_THROWS_AS(Q.parse("1.5"), ParseError);
    CHECK_THROWS_AS(Q.parse(" 1"), ParseError);
    CHECK_THROWS_AS(Q.parse("1 "), ParseError);
    CHECK_THROWS_AS(Q.parse("+1"), ParseError);
    CHECK_THROWS_AS(Q.parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Q.parse("1/0"), ParseError);
    CHECK_THROWS_AS(F5.parse("1/0"), ParseError);
    CHECK_THROWS_AS(F5.parse("1/5"), ParseError);   // denominator vanishes mod 5
    CHECK_THROWS_AS(F5.parse("3/10"), ParseError);  // 10 = 0 mod 5
}

TEST_CASE("parse and str round-trip") {
    SeededRng rng(42);
    for (int i = 0; i < 200; ++i) {
        for (const FieldSpec& F : {Q, F5, F7}) {
            const FieldElement x = F.sample(rng);
            CHECK(F.parse(x.str()) == x);
        }
    }
}

TEST_CASE("inverse") {
    CHECK(Q.parse("3/5").inverse() == Q.parse("5/3"));
    CHECK(Q.parse("-3/5").inverse() == Q.parse("-5/3"));
    CHECK(Q.one().inverse() == Q.one());
    CHECK(F7.parse("3").inverse() == F7.parse("5"));
    CHECK_THROWS_AS(Q.zero().inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(F5.zero().inverse(), DivisionByZeroError);
}

TEST_CASE("field axioms on seeded samples") {
    SeededRng rng(7);
    for (const FieldSpec& F : {Q, F5, F7}) {
        for (int i = 0; i < 1000; ++i) {
            const FieldElement a = F.sample(rng), b = F.sample(rng), c = F.sample(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + F.zero() == a);
            CHECK(a * F.one() == a);
            CHECK(a - a == F.zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == F.one());
                CHECK(a / a == F.one());
            }
        }
    }
}

TEST_CASE("sampling is deterministic and respects ranges") {
    SeededRng a(123), b(123);
    for (int i = 0; i < 50; ++i) {
        CHECK(Q.sample(a) == Q.sample(b));
        CHECK(F7.sample(a) == F7.sample(b));
    }

    SeededRng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t r = F5.sample(rng, true).residue();
        CHECK(r >= 1);
        CHECK(r <= 4);
    }
    for (int i = 0; i < 1000; ++i) {
        const mpq_class q = Q.sample(rng).rational_value();
        CHECK(abs(q.get_num()) <= 9);
        CHECK(q.get_den() >= 1);
        CHECK(q.get_den() <= 9);
    }
}

TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(F5.one() + F7.one(), FieldMismatchError);
    CHECK_THROWS_AS(Q.one() * F5.one(), FieldMismatchError);
    CHECK(F5.one() != F7.one());
    CHECK(Q.from_int(1) != F5.from_int(1));
}

TEST_CASE("from_int wraps negatives") {
    CHECK(F5.from_int(-1).residue() == 4);
    CHECK(F5.from_int(-10).residue() == 0);
    CHECK(Q.from_int(-3).str() == "-3");
}

TEST_CASE("prime field construction is validated") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(61));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
    CHECK_THROWS_AS(FieldSpec::prime(4), InvariantError);
    CHECK_THROWS_AS(FieldSpec::prime(1), InvariantError);
    CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 61), InvariantError);
    CHECK(FieldSpec::prime(1000003).modulus() == 1000003);
    CHECK(F7.name() == "F7");
    CHECK(Q.name() == "rational");
    CHECK_THROWS_AS(Q.modulus(), InvariantError);
}

TEST_CASE("large prime arithmetic stays exact") {
    // First prime after 2^32: residue products overflow 64 bits, so this
    // exercises the wide-intermediate path.
    const FieldSpec F = FieldSpec::prime(4294967311);
    const FieldElement a = F.from_int(4294967290);
    const FieldElement b = F.from_int(4294967111);
    CHECK((a * b) * a.inverse() == b);
    CHECK(a * a.inverse() == F.one());
    CHECK((a * b).residue() < 4294967311);
}
