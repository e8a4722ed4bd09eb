#include <doctest.h>

#include "support.hpp"

using namespace ndlrs;
using testsupport::Rng;

TEST_CASE("prime field construction checks primality") {
    CHECK_NOTHROW(FieldCtx::prime(2));
    CHECK_NOTHROW(FieldCtx::prime(5));
    CHECK_NOTHROW(FieldCtx::prime(1000003));
    CHECK_THROWS_AS(FieldCtx::prime(1), DomainError);
    CHECK_THROWS_AS(FieldCtx::prime(0), DomainError);
    CHECK_THROWS_AS(FieldCtx::prime(4), DomainError);
    CHECK_THROWS_AS(FieldCtx::prime(1000001), DomainError);  // 101 * 9901
}

TEST_CASE("deterministic primality on larger words") {
    CHECK(is_prime_u64(2147483647ULL));          // 2^31 - 1
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(3215031751ULL));      // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64(341550071728321ULL)); // strong pseudoprime to 2..17
}

TEST_CASE("field parsing") {
    CHECK(FieldCtx::parse("q").is_rational());
    CHECK(FieldCtx::parse("7").modulus() == 7);
    CHECK_THROWS_AS(FieldCtx::parse("seven"), ParseError);
    CHECK_THROWS_AS(FieldCtx::parse(""), ParseError);
    CHECK_THROWS_AS(FieldCtx::parse("6"), DomainError);
}

TEST_CASE("F_p arithmetic is exact and reduced") {
    FieldCtx f5 = FieldCtx::prime(5);
    Scalar a = Scalar::from_int(f5, 3), b = Scalar::from_int(f5, 4);
    CHECK((a + b).str() == "2");
    CHECK((a - b).str() == "4");
    CHECK((a * b).str() == "2");
    CHECK((a / b).str() == "2");  // 4^{-1} = 4, 3*4 = 12 = 2
    CHECK((-a).str() == "2");
    CHECK(Scalar::from_int(f5, -1).str() == "4");
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), DomainError);
}

TEST_CASE("rational arithmetic normalizes") {
    FieldCtx q = FieldCtx::rationals();
    Scalar a = Scalar::parse(q, "3/6");
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::parse(q, "-2/4");
    CHECK((a + b).is_zero());
    CHECK((a / b).str() == "-1");
    CHECK(Scalar::parse(q, "7").str() == "7");
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
}

TEST_CASE("coefficient parsing reduces into [0,p)") {
    FieldCtx f7 = FieldCtx::prime(7);
    CHECK(Scalar::parse(f7, "-1").str() == "6");
    CHECK(Scalar::parse(f7, "23").str() == "2");
    mpz_class z("123456789123456789123456789");
    CHECK(Scalar::parse(f7, "123456789123456789123456789").str() == mpz_class(z % 7).get_str());
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar a = Scalar::from_int(FieldCtx::prime(5), 1);
    Scalar b = Scalar::from_int(FieldCtx::prime(7), 1);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(a == Scalar::zero(FieldCtx::rationals()), DomainError);
}

TEST_CASE("field inverse round trip, randomized") {
    Rng rng(11);
    for (FieldCtx f : {FieldCtx::prime(2), FieldCtx::prime(5), FieldCtx::prime(97)}) {
        for (int i = 0; i < 50; ++i) {
            Scalar a = testsupport::random_nonzero_scalar(f, rng);
            CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}
