#include "doctest.h"
#include "lzext/suites.hpp"
#include "lzext/text.hpp"

using namespace lzext;

TEST_CASE("lambda grammar")
{
    LambdaAlgebra A{Prime(3)};
    CHECK(parse_lambda_raw(A, "l1_2 l0_-1") == A.element(Monomial{Gen(1, 3), Gen(0, 0)}));
    CHECK(parse_lambda(A, "l1_2 l0_-1") == A.normalize(Monomial{Gen(1, 3), Gen(0, 0)}));
    CHECK(parse_lambda_raw(A, "  l1_2   l0_-1 ") == parse_lambda_raw(A, "l1_2 l0_-1"));
    CHECK(parse_lambda_raw(A, "2*l1_1 - l1_0 + l1_0") == A.element(Monomial{Gen(1, 2)}, 2));
    CHECK(parse_lambda_raw(A, "1") == A.unit());
    LambdaAlgebra A2{Prime(2)};
    CHECK(parse_lambda_raw(A2, "l_3 l_7") == A2.element(Monomial{Gen(0, 3), Gen(0, 7)}));
}

TEST_CASE("malformed lambda text reports a position")
{
    LambdaAlgebra A{Prime(3)};
    auto position = [&](const char* text) -> long {
        try {
            parse_lambda(A, text);
        } catch (const ParseError& e) {
            return long(e.position);
        }
        return -1;
    };
    CHECK(position("l1_-1") == 0);
    CHECK(position("l1_2 x") == 5);
    CHECK(position("l2_1") == 0);
    CHECK(position("l1_2 +") >= 5);
}

TEST_CASE("lambda text round trips")
{
    for (int p : {2, 3, 5}) {
        LambdaAlgebra A{Prime(p)};
        for (int s = 0; s <= 3; ++s)
            for (int d = 0; d <= 30; ++d)
                for (const Monomial& m : A.basis(s, d)) {
                    LambdaElement x = A.element(m, Scalar(p - 1));
                    CHECK(parse_lambda(A, format_lambda(A, x)) == x);
                }
        CHECK(format_lambda(A, A.zero()) == "0");
    }
    LambdaAlgebra A{Prime(3)};
    CHECK(format_lambda(A, parse_lambda(A, "l1_4 l1_1")) == "l1_4 l1_1");
}

TEST_CASE("chain and Dyer-Lashof text round trips")
{
    auto P = make_complex(3, ModuleKind::P);
    for (const char* text : {"l1_0|ab[3] + 2*l1_1|ab[1]", "b[4]", "a", "l0_-1|b[2]"}) {
        ChainElement c = parse_chain_raw(*P, text);
        CHECK(parse_chain_raw(*P, format_chain(*P, c)) == c);
    }
    CHECK(parse_chain_raw(*P, "a") == parse_chain_raw(*P, "ab[0]"));
    ChainElement q = parse_q_raw(*P, "bQ[3] Q[1]|ab[2]");
    CHECK(parse_q_raw(*P, format_q(*P, q)) == q);
    CHECK(format_q(*P, q) == "bQ[3] Q[1]|ab[2]");
    auto F2 = make_complex(2, ModuleKind::Fp);
    ChainElement c2 = parse_chain_raw(*F2, "l_3 l_7 + l_5 l_5");
    CHECK(parse_chain_raw(*F2, format_chain(*F2, c2)) == c2);
    CHECK_THROWS_AS(parse_chain_raw(*P, "l1_0|c[3]"), ParseError);
}
