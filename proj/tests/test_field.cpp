#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algeo/field.hpp"

using namespace algeo;

TEST_CASE("rational scalars stay in canonical reduced form") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::from_string(q, "6/4");
    CHECK(a.str() == "3/2");
    Scalar b = Scalar::from_string(q, "-1/2");
    CHECK((a + b).str() == "1");
    CHECK((a * b).str() == "-3/4");
    CHECK((a - a).is_zero());
    CHECK((-b).str() == "1/2");
    CHECK(a.inv().str() == "2/3");
}

TEST_CASE("scalar string grammar rejects junk") {
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(Scalar::from_string(q, "1.5"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(q, "1/"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(q, ""), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(q, "2/0"), DivisionByZero);
    CHECK(Scalar::from_string(q, "-12").str() == "-12");
}

TEST_CASE("prime fields require p >= 5 and prime") {
    CHECK_THROWS_AS(FieldSpec::prime(3), ValidationError);
    CHECK_THROWS_AS(FieldSpec::prime(4), ValidationError);
    CHECK_THROWS_AS(FieldSpec::prime(9), ValidationError);
    CHECK(FieldSpec::prime(5).modulus == 5);
    CHECK(FieldSpec::prime(7).modulus == 7);
}

TEST_CASE("residue arithmetic mod 7") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar a = Scalar::from_int(f7, 10); // = 3
    CHECK(a.str() == "3");
    Scalar b = Scalar::from_int(f7, -1); // = 6
    CHECK(b.str() == "6");
    CHECK((a * b).str() == "4");
    CHECK((a + b).str() == "2");
    CHECK((a / a).str() == "1");
    Scalar r = Scalar::from_string(f7, "1/2"); // 2^{-1} = 4
    CHECK(r.str() == "4");
    CHECK_THROWS_AS(Scalar::zero(f7).inv(), DivisionByZero);
}

TEST_CASE("mixing fields is an error") {
    Scalar a = Scalar::from_int(FieldSpec::rationals(), 1);
    Scalar b = Scalar::from_int(FieldSpec::prime(7), 1);
    CHECK_THROWS_AS((void)(a + b), MixedFields);
    Scalar c = Scalar::from_int(FieldSpec::prime(5), 1);
    CHECK_THROWS_AS((void)(b * c), MixedFields);
}

TEST_CASE("add_mul matches separate multiply and add") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar acc = Scalar::from_int(f7, 3);
    Scalar expect = acc + Scalar::from_int(f7, 4) * Scalar::from_int(f7, 5);
    acc.add_mul(Scalar::from_int(f7, 4), Scalar::from_int(f7, 5));
    CHECK(acc == expect);
}

TEST_CASE("modular helper functions") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
    CHECK(mulmod_u64(1000002, 1000002, 1000003) == 1);
    CHECK(mulmod_u64(invmod_u64(12345, 1000003), 12345, 1000003) == 1);
}
