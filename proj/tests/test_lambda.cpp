#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "lzext/catalog.hpp"
#include "lzext/lambda.hpp"
#include "lzext/text.hpp"

using namespace lzext;

namespace {

/* l^e_{n} as printed. */
Gen l(int e, int n) { return Gen(e, n + 1); }

}  // namespace

TEST_CASE("generator degrees")
{
    LambdaAlgebra A3{Prime(3)}, A2{Prime(2)};
    CHECK(A3.degree(l(0, -1)) == 0);
    CHECK(A3.degree(l(1, 2)) == 11);
    CHECK(A2.degree(Gen(0, 7)) == 7);
    CHECK(A3.degree(Monomial{l(1, 2), l(0, -1), l(1, 0)}) == 14);
}

TEST_CASE("excess")
{
    for (int p : {3, 5}) {
        LambdaAlgebra A{Prime(p)};
        for (int i = 1; i < 20; ++i)
            CHECK(A.excess(Monomial{Gen(1, i)}) == 2 * i - 1);
        CHECK(A.excess(Monomial{l(0, -1), l(0, -1)}) == 0);
        CHECK(A.excess(Monomial{}) == 0);
        for (int a = 1; a <= 3; ++a) {
            const int i = 2 * p + a;
            const int first = 2 * p * p + p - 1 - i;
            CHECK(A.excess(Monomial{Gen(1, first), Gen(1, i)}) == 2 * p - 2 * p * a - 2);
        }
    }
    LambdaAlgebra A2{Prime(2)};
    CHECK(A2.excess(Monomial{Gen(0, 15), Gen(0, 3), Gen(0, 3)}) == 9);
}

TEST_CASE("Adem relations at small indices")
{
    for (int p : {3, 5}) {
        LambdaAlgebra A{Prime(p)};
        CHECK(A.normalize(Monomial{l(1, 0), l(0, -1)}).empty());
        CHECK(A.multiply(A.element(Monomial{l(1, 0)}), A.element(Monomial{l(0, -1)})).empty());
        for (int i = 1; i <= 2; ++i) {
            int q = 1;
            for (int k = 0; k < i; ++k)
                q *= p;
            LambdaElement lhs = A.normalize(Monomial{l(1, 2 * q - 1), l(1, q / p - 1)});
            LambdaElement rhs = A.element(Monomial{l(1, q - 1), l(1, q + q / p - 1)}, Scalar(p - 1));
            CHECK(lhs == rhs);
        }
    }
    LambdaAlgebra A2{Prime(2)};
    CHECK(A2.normalize(Monomial{Gen(0, 2), Gen(0, 0)}) == A2.element(Monomial{Gen(0, 1), Gen(0, 1)}));
}

TEST_CASE("products")
{
    LambdaAlgebra A{Prime(3)};
    LambdaElement x = A.element(Monomial{l(1, 2), l(1, 1)});
    CHECK(A.multiply(A.unit(), x) == x);
    CHECK(A.multiply(x, A.unit()) == x);
    LambdaElement g = A.element(Monomial{l(1, 2)});
    CHECK(A.multiply(g, g) == A.element(Monomial{l(1, 2), l(1, 2)}));
}

TEST_CASE("products are associative")
{
    std::mt19937_64 rng(7);
    for (int p : {2, 3}) {
        LambdaAlgebra A{Prime(p)};
        for (int trial = 0; trial < 200; ++trial) {
            LambdaElement a = A.normalize(oracle::random_word(rng, p, 1, 20));
            LambdaElement b = A.normalize(oracle::random_word(rng, p, 1, 20));
            LambdaElement c = A.normalize(oracle::random_word(rng, p, 2, 20));
            REQUIRE(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
        }
    }
}

TEST_CASE("differentials of generators")
{
    LambdaAlgebra A{Prime(3)};
    CHECK(A.differential(Monomial{l(0, -1)}).empty());
    CHECK(A.differential(Monomial{l(1, 1)}) == A.element(Monomial{l(1, 0), l(1, 0)}, 2));
    for (int p : {3, 5}) {
        LambdaAlgebra B{Prime(p)};
        CHECK(B.differential(parse_lambda(B, m_text(p))).empty());
        CHECK(B.differential(parse_lambda(B, n_text(p))).empty());
        CHECK(B.differential(parse_lambda(B, l_text(p))).empty());
    }
}

TEST_CASE("d squares to zero on the admissible basis")
{
    for (auto [p, smax, dmax] : {std::tuple{3, 3, 60}, std::tuple{5, 2, 80}, std::tuple{2, 3, 30}}) {
        LambdaAlgebra A{Prime(p)};
        for (int s = 1; s <= smax; ++s)
            for (int d = 0; d <= dmax; ++d)
                for (const Monomial& m : A.basis(s, d))
                    REQUIRE(A.differential(A.differential(m)).empty());
    }
}

TEST_CASE("admissible basis sizes match a direct enumeration")
{
    for (auto [p, smax, dmax] : {std::tuple{3, 3, 40}, std::tuple{5, 2, 60}, std::tuple{2, 3, 30}}) {
        LambdaAlgebra A{Prime(p)};
        for (int s = 0; s <= smax; ++s)
            for (int d = 0; d <= dmax; ++d) {
                auto basis = A.basis(s, d);
                REQUIRE(long(basis.size()) == oracle::admissible_count(p, s, d));
                for (const Monomial& m : basis)
                    CHECK(A.admissible(m));
            }
    }
}

TEST_CASE("normal forms are confluent and idempotent")
{
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5}) {
        LambdaAlgebra A{Prime(p)};
        for (int trial = 0; trial < 300; ++trial) {
            const int len = 2 + int(rng() % 3);
            Monomial w = oracle::random_word(rng, p, len, 60 / len);
            LambdaElement raw = A.element(w);
            LambdaElement n = A.normalize(w);
            REQUIRE(n == A.normalize_leftmost(raw));
            REQUIRE(n == A.normalize_rightmost(raw));
            REQUIRE(A.normalize(n) == n);
            for (auto& [m, c] : n) {
                CHECK(A.admissible(m));
                CHECK(m.length() == len);
                CHECK(A.degree(m) == A.degree(w));
            }
        }
    }
}

TEST_CASE("illegal generators are rejected")
{
    LambdaAlgebra A{Prime(3)};
    CHECK_FALSE(A.legal(Gen(1, 0)));
    CHECK(A.legal(Gen(0, 0)));
    CHECK_THROWS_AS(A.normalize(Monomial{Gen(1, 0), Gen(1, 1)}), Error);
}

TEST_CASE("power operation on lambda")
{
    for (int p : {3, 5}) {
        LambdaAlgebra A{Prime(p)};
        CHECK(A.power_op(A.element(Monomial{l(1, p - 1)})) == A.element(Monomial{l(1, p * p - 1)}));
        CHECK(A.power_op(A.element(Monomial{l(0, -1)})).empty());
        CHECK(A.power_op(A.unit()) == A.unit());
    }
    LambdaAlgebra A2{Prime(2)};
    CHECK(A2.power_op(A2.element(Monomial{Gen(0, 1), Gen(0, 3)})) == A2.element(Monomial{Gen(0, 3), Gen(0, 7)}));
}

TEST_CASE("power operation commutes with d")
{
    for (auto [p, smax, dmax] : {std::tuple{3, 3, 40}, std::tuple{2, 3, 24}}) {
        LambdaAlgebra A{Prime(p)};
        for (int s = 1; s <= smax; ++s)
            for (int d = 0; d <= dmax; ++d)
                for (const Monomial& m : A.basis(s, d)) {
                    LambdaElement x = A.element(m);
                    REQUIRE(A.power_op(A.differential(x)) == A.differential(A.power_op(x)));
                }
    }
}
