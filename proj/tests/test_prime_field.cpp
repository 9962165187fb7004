#include "doctest.h"
#include "oracles.hpp"
#include "lzext/prime_field.hpp"

using namespace lzext;

TEST_CASE("binomial coefficients at small arguments")
{
    CHECK(Prime(3).binom(-1, 3) == 2);
    CHECK(Prime(3).binom(4, 2) == 0);
    CHECK(Prime(5).binom(4, 2) == 1);
    CHECK(Prime(3).binom(7, -1) == 0);
    for (int p : {2, 3, 5, 7})
        for (int n = -20; n <= 20; ++n)
            CHECK(Prime(p).binom(n, 0) == 1);
}

TEST_CASE("binomial agrees with factorial evaluation up to 200")
{
    for (int p : {2, 3, 5, 7, 11}) {
        Prime F(p);
        for (int n = 0; n <= 200; ++n)
            for (int k = 0; k <= n; ++k)
                REQUIRE(F.binom(n, k) == oracle::binom_factorial(n, k, p));
        CHECK(F.binom(5, 9) == 0);
    }
}

TEST_CASE("binomial for negative n is the power series of (1+x)^n")
{
    for (int p : {2, 3, 5}) {
        Prime F(p);
        for (int n = -50; n <= 50; ++n)
            for (int k = 1; k <= 50; ++k)
                REQUIRE(F.binom(n, k) == F.add(F.binom(n - 1, k), F.binom(n - 1, k - 1)));
        for (int k = 0; k <= 30; ++k)
            CHECK(F.binom(-1, k) == F.sign(k));
    }
}

TEST_CASE("inverses")
{
    CHECK(Prime(3).inverse(1) == 1);
    CHECK(Prime(3).inverse(2) == 2);
    CHECK(Prime(5).inverse(4) == 4);
    for (int p : {2, 3, 5, 7, 13}) {
        Prime F(p);
        for (Scalar a = 1; a < Scalar(p); ++a)
            CHECK(F.mul(a, F.inverse(a)) == 1);
    }
    CHECK_THROWS_WITH_AS(Prime(5).inverse(0), doctest::Contains("non-invertible"), Error);
}

TEST_CASE("field arithmetic stays in range")
{
    Prime F(7);
    for (Scalar a = 0; a < 7; ++a)
        for (Scalar b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.sub(a, b) == (a + 7 - b) % 7);
            CHECK(F.mul(a, b) == a * b % 7);
            CHECK(F.add(a, F.neg(a)) == 0);
        }
    CHECK(F.reduce(-1) == 6);
    CHECK(F.sign(3) == 6);
    CHECK(F.sign(4) == 1);
}

TEST_CASE("primality")
{
    for (int n = -3; n <= 300; ++n) {
        bool prime = n >= 2;
        for (int d = 2; d * d <= n && prime; ++d)
            prime = n % d != 0;
        CHECK(is_prime(n) == prime);
    }
    CHECK_THROWS_AS(Prime(9), Error);
}
