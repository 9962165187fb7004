#include <random>

#include "doctest.h"
#include "lzext/catalog.hpp"
#include "lzext/complex.hpp"
#include "lzext/suites.hpp"
#include "lzext/text.hpp"

using namespace lzext;

namespace {

const CatalogEntry& find(const std::vector<CatalogEntry>& entries, const std::string& name)
{
    for (const CatalogEntry& e : entries)
        if (e.name == name)
            return e;
    FAIL("no catalog entry " << name);
    throw Error("unreachable");
}

ChainElement random_chain(const Complex& cx, std::mt19937_64& rng, int s, int t)
{
    ChainElement c = cx.zero();
    for (const ChainKey& k : cx.basis(s, t))
        c.add(k, Scalar(rng() % std::uint64_t(cx.p())));
    return c;
}

}  // namespace

TEST_CASE("cochain bases in low degrees")
{
    auto F3 = make_complex(3, ModuleKind::Fp);
    CHECK(F3->basis(0, 0).size() == 1);
    for (int t = 1; t <= 10; ++t)
        CHECK(F3->basis(0, t).empty());
    auto b = F3->basis(1, 0);
    REQUIRE(b.size() == 1);
    CHECK(b[0].lambda == Monomial{Gen(0, 0)});
    auto P3 = make_complex(3, ModuleKind::P);
    auto c = P3->basis(0, 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0].h == ModuleBasis{1, 1});
}

TEST_CASE("Ext^0 of the trivial module")
{
    for (int p : {2, 3, 5}) {
        auto cx = make_complex(p, ModuleKind::Fp);
        CHECK(cx->ext(0, 0).dimension == 1);
        for (int t = 1; t <= 20; ++t)
            CHECK(cx->ext(0, t).dimension == 0);
    }
}

TEST_CASE("Ext^1 of the trivial module is spanned by a0 and the h_i")
{
    for (int p : {2, 3, 5}) {
        auto cx = make_complex(p, ModuleKind::Fp);
        std::vector<int> expected(61, 0);
        if (p == 2) {
            for (int i = 0; (1 << i) - 1 <= 60; ++i)
                expected[std::size_t((1 << i) - 1)] = 1;
        } else {
            expected[0] = 1;
            for (int q = 1; 2 * (p - 1) * q - 1 <= 60; q *= p)
                expected[std::size_t(2 * (p - 1) * q - 1)] = 1;
        }
        for (int t = 0; t <= 60; ++t)
            CHECK_MESSAGE(cx->ext(1, t).dimension == expected[std::size_t(t)], "p=" << p << " t=" << t);
    }
}

TEST_CASE("Ext^2 of F_2 is spanned by the products h_i h_j with j != i+1")
{
    auto cx = make_complex(2, ModuleKind::Fp);
    std::vector<int> expected(31, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            if (j != i + 1 && (1 << i) + (1 << j) - 2 <= 30)
                ++expected[std::size_t((1 << i) + (1 << j) - 2)];
    for (int t = 0; t <= 30; ++t)
        CHECK_MESSAGE(cx->ext(2, t).dimension == expected[std::size_t(t)], "t=" << t);
}

TEST_CASE("d composed with d is the zero matrix")
{
    for (auto [p, kind] : {std::pair{3, ModuleKind::P}, std::pair{2, ModuleKind::P}, std::pair{5, ModuleKind::Fp}}) {
        auto cx = make_complex(p, kind);
        Prime F(p);
        for (int s = 0; s <= 2; ++s)
            for (int t = 1; t <= 40; ++t) {
                auto first = cx->differential_matrix(s, t);
                auto second = cx->differential_matrix(s + 1, t - 1);
                for (const SparseVec& col : first) {
                    std::map<int, Scalar> sum;
                    for (auto [r, x] : col)
                        for (auto [r2, y] : second[std::size_t(r)])
                            sum[r2] = F.add(sum[r2], F.mul(x, y));
                    for (auto& [r2, v] : sum)
                        REQUIRE(v == 0);
                }
            }
    }
}

TEST_CASE("Ext^0 of P at the bottom")
{
    auto cx = make_complex(3, ModuleKind::P);
    ExtGroup g = cx->ext(0, 3);
    REQUIRE(g.dimension == 1);
    auto generators = ext0_generators(*cx, 10);
    const CatalogEntry& h0 = find(generators, "hhat_0");
    CHECK(cx->ext_coordinates(h0.cycle) == SparseVec{{0, 1}});
}

TEST_CASE("catalog cycles of Ext^1(P)")
{
    auto cx = make_complex(3, ModuleKind::P);
    auto families = ext1_families(*cx, 60);
    for (const CatalogEntry& e : families) {
        INFO(e.name);
        CHECK(cx->differential(e.cycle).empty());
        CHECK_FALSE(cx->is_boundary(e.cycle));
    }
    const CatalogEntry& k = find(families, "khat_0(1)");
    CHECK(k.raw == parse_chain_raw(*cx, "l1_0|ab[3] + 2*l1_1|ab[1]"));
    CHECK(k.bidegree == Bidegree{1, 10});
    CHECK(cx->ext(1, 10).dimension == 1);
}

TEST_CASE("relations among products are boundaries")
{
    for (int p : {3, 5}) {
        auto cx = make_complex(p, ModuleKind::P);
        for (const CatalogEntry& e : ext1_relations(*cx, p == 3 ? 120 : 100)) {
            INFO(e.name);
            CHECK(cx->differential(e.cycle).empty());
            auto w = cx->boundary_witness(e.cycle);
            REQUIRE(w);
            CHECK(cx->differential(*w) == e.cycle);
        }
    }
}

TEST_CASE("boundaries are zero in Ext")
{
    std::mt19937_64 rng(5);
    auto cx = make_complex(3, ModuleKind::P);
    CHECK(cx->is_boundary(cx->zero()));
    for (int s = 0; s <= 1; ++s)
        for (int t = 1; t <= 40; ++t) {
            ChainElement b = cx->differential(random_chain(*cx, rng, s, t + 1));
            CHECK(cx->is_boundary(b));
            CHECK(cx->ext_coordinates(b).empty());
        }
    CHECK_THROWS_AS(cx->is_boundary(parse_chain(*cx, "b[4]")), Error);
}

TEST_CASE("leading terms of d(b[kp^i])")
{
    const int p = 3;
    auto cx = make_complex(p, ModuleKind::P);
    for (int q : {3, 9})
        for (int k = 1; k <= 2; ++k) {
            const int n = k * q;
            ChainElement d = cx->differential(parse_chain(*cx, "b[" + std::to_string(n) + "]"));
            ChainElement expected = parse_chain(
                *cx, "l0_-1|ab[" + std::to_string(n - 1) + "] + l1_0|b[" + std::to_string(n - p + 1) + "]");
            CHECK(cx->truncate(d, 2 * (n - p + 1) - 1) == expected);
        }
}

TEST_CASE("filtration truncation")
{
    auto cx = make_complex(3, ModuleKind::P);
    ChainElement c = parse_chain(*cx, "l1_1|ab[1] + l1_0|ab[3]");
    CHECK(cx->truncate(c, 0) == c);
    CHECK(cx->truncate(c, 1000).empty());
    CHECK(cx->truncate(c, 3) == parse_chain(*cx, "l1_0|ab[3]"));
    for (int t = 2; t <= 12; ++t) {
        ChainElement d = cx->differential(parse_chain(*cx, "l0_-1|b[" + std::to_string(t) + "]"));
        CHECK(cx->truncate(d, 2 * (t - 1)) == parse_chain(*cx, "l0_-1 l0_-1|ab[" + std::to_string(t - 1) + "]"));
    }
}

TEST_CASE("products with lambda")
{
    auto F = make_complex(3, ModuleKind::Fp);
    const LambdaAlgebra& A = F->algebra();
    ChainElement a0a0 = parse_chain(*F, "l0_-1 l0_-1");
    CHECK(F->product(A.unit(), a0a0) == a0a0);
    CHECK(F->product(parse_lambda(A, "l0_-1"), a0a0) == parse_chain(*F, "l0_-1 l0_-1 l0_-1"));
    auto P = make_complex(3, ModuleKind::P);
    ChainElement h1hhat0 = P->product(parse_lambda(A, "l1_2"), parse_chain(*P, "ab[1]"));
    CHECK(P->differential(h1hhat0).empty());
}

TEST_CASE("chain power operation")
{
    auto cx = make_complex(3, ModuleKind::P);
    CHECK(cx->power_op(parse_chain(*cx, "l1_0|ab[1]")) == parse_chain(*cx, "l1_2|ab[5]"));
    CHECK(cx->power_op(parse_chain(*cx, "l0_-1|ab[1]")).empty());
    CHECK(cx->power_op(parse_chain(*cx, "l1_0|b[3]")).empty());
    for (const CatalogEntry& e : ext1_families(*cx, 120))
        if (e.family == "khat") {
            INFO(e.name);
            CHECK(cx->differential(cx->power_op(e.cycle)) == cx->power_op(cx->differential(e.cycle)));
            CHECK(cx->differential(cx->power_op(e.cycle)).empty());
        }
}

TEST_CASE("memory guard")
{
    auto cx = make_complex(3, ModuleKind::P);
    cx->set_basis_cap(5);
    CHECK_THROWS_WITH_AS(cx->basis(2, 60), doctest::Contains("memory guard"), Error);
}
