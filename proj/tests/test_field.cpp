#include <doctest.h>

#include "titsforge/field.hpp"
#include "titsforge/rng.hpp"

using namespace titsforge;

TEST_CASE("rational arithmetic is exact and canonical") {
    const Scalar a = Scalar::rational(1, 2);
    const Scalar b = Scalar::rational(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(-3, -6).str() == "1/2");
    CHECK(Scalar::rational(3, -2).str() == "-3/2"); // denominator kept positive
    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Scalar::rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Scalar::rational(1).inverse() / Scalar::rational(0), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK((Scalar::residue(3, 5) * Scalar::residue(4, 5)).residue_value() == 2);
    CHECK((Scalar::residue(1, 5) - Scalar::residue(3, 5)).residue_value() == 3);
    CHECK(Scalar::residue(-7, 5).residue_value() == 3);
    CHECK(Scalar::from_int(f5, 12).residue_value() == 2);
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), DivisionByZero);
}

TEST_CASE("field spec rejects characteristic 2 and 3 and composites") {
    CHECK_THROWS_AS(FieldSpec::prime(2), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(3), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(4), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(91), InvalidField); // 7 * 13
    CHECK(FieldSpec::prime(5).modulus() == 5);
    CHECK(FieldSpec::prime(101).name() == "F101");
}

TEST_CASE("small inverses") {
    CHECK(small_inverse(2, FieldSpec::rationals()).str() == "1/2");
    CHECK(small_inverse(3, FieldSpec::prime(5)).residue_value() == 2);
    CHECK(small_inverse(6, FieldSpec::prime(7)).residue_value() == 6);
}

TEST_CASE("prime-field inverses exhaustively up to 101") {
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                           71, 73, 79, 83, 89, 97, 101}) {
        for (std::int64_t a = 1; a < p; ++a) {
            const Scalar s = Scalar::residue(a, p);
            CHECK((s * s.inverse()).residue_value() == 1);
        }
    }
}

TEST_CASE("field axioms on sampled triples") {
    for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            SampleRng rng(1, "axioms", i);
            const Scalar a = sample_scalar(spec, rng);
            const Scalar b = sample_scalar(spec, rng);
            const Scalar c = sample_scalar(spec, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("mismatched specs are refused") {
    CHECK_THROWS_AS(Scalar::rational(1) + Scalar::residue(1, 5), SpecMismatch);
    CHECK_THROWS_AS((void)(Scalar::residue(1, 5) == Scalar::residue(1, 7)), SpecMismatch);
}

TEST_CASE("text round trips") {
    const FieldSpec q = FieldSpec::rationals();
    for (const char* t : {"0", "5", "-3/2", "7/3", "-11"})
        CHECK(Scalar::parse(q, t).str() == t);
    CHECK(Scalar::parse(q, "4/6").str() == "2/3");
    CHECK(Scalar::parse(FieldSpec::prime(5), "9").residue_value() == 4);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), DivisionByZero);
}
