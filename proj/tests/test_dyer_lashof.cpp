#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "lzext/dyer_lashof.hpp"
#include "lzext/suites.hpp"
#include "lzext/text.hpp"

using namespace lzext;

namespace {

ChainKey key(Monomial w, ModuleBasis h = {}) { return ChainKey{w, h}; }

bool all_in_basis(const DyerLashof& dl, const QElement& x)
{
    for (auto& [k, c] : x)
        if (!dl.in_basis(k))
            return false;
    return true;
}

}  // namespace

TEST_CASE("projection to the Dyer-Lashof algebra")
{
    for (int p : {3, 5}) {
        auto F = make_complex(p, ModuleKind::Fp);
        DyerLashof dl(*F);
        const LambdaAlgebra& A = F->algebra();
        CHECK(dl.reduce(parse_chain_raw(*F, "l0_-1 l0_-1 l0_-1")) ==
              F->element(key(Monomial{Gen(0, 0), Gen(0, 0), Gen(0, 0)})));
        for (int j = 1; j < p - 1; ++j)
            CHECK(dl.reduce(A.element(Monomial{Gen(1, j), Gen(1, p - j)})).empty());
        CHECK(dl.reduce(A.element(Monomial{Gen(1, 2 * p * p), Gen(1, p - 1)})).empty());
    }
    auto F2 = make_complex(2, ModuleKind::Fp);
    DyerLashof dl2(*F2);
    const LambdaAlgebra& A2 = F2->algebra();
    CHECK(dl2.reduce(A2.element(Monomial{Gen(0, 15), Gen(0, 0)})).empty());
    CHECK(dl2.reduce(A2.element(Monomial{Gen(0, 9), Gen(0, 3), Gen(0, 3)})).empty());
}

TEST_CASE("basis words are fixed by the projection")
{
    for (auto [p, kind] : {std::pair{3, ModuleKind::Fp}, std::pair{3, ModuleKind::P}, std::pair{2, ModuleKind::P}}) {
        auto cx = make_complex(p, kind);
        DyerLashof dl(*cx);
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 40; ++t)
                for (const ChainKey& k : dl.basis(s, t)) {
                    CHECK(dl.in_basis(k));
                    CHECK(dl.reduce(cx->element(k)) == cx->element(k));
                }
    }
}

TEST_CASE("dual Singer basis membership")
{
    auto P = make_complex(3, ModuleKind::P);
    DyerLashof dl(*P);
    for (int t = 1; t <= 20; ++t) {
        auto b = dl.basis(0, t);
        REQUIRE(b.size() == 1);
        CHECK(b[0].lambda.empty());
        CHECK(b[0].h == P->module().basis(t)[0]);
    }
    for (int n = 0; n <= 10; ++n)
        CHECK_FALSE(dl.in_basis(key(Monomial{Gen(0, 0)}, {1, n})));
    for (int p : {3, 5}) {
        auto cx = make_complex(p, ModuleKind::P);
        DyerLashof d(*cx);
        for (int q = 1; q <= p * p; q *= p)
            CHECK(d.in_basis(key(Monomial{Gen(1, q)}, {1, q - 1})));
    }
}

TEST_CASE("index strings parametrize the words of large excess")
{
    for (int p : {2, 3, 5}) {
        LambdaAlgebra A{Prime(p)};
        for (int s = 1; s <= 3; ++s)
            for (int n : {0, 1, 3, 4}) {
                std::map<int, long> by_degree;
                std::set<Monomial> images;
                for (const IndexString& J : enumerate_index_strings(A, s, n, 60)) {
                    Monomial w = index_bijection(A, J, n);
                    REQUIRE(A.admissible(w));
                    REQUIRE(A.excess(w) >= n);
                    CHECK(images.insert(w).second);
                    ++by_degree[A.degree(w)];
                }
                for (int d = 0; d <= 60; ++d) {
                    long direct = 0;
                    for (const Monomial& w : A.basis(s, d))
                        direct += A.excess(w) >= n;
                    CHECK_MESSAGE(by_degree[d] == direct, "p=" << p << " s=" << s << " n=" << n << " d=" << d);
                }
            }
    }
    LambdaAlgebra A{Prime(3)};
    CHECK(index_bijection(A, IndexString{{0, 0, 0}, {0, 0, 0}}, 0) == Monomial{Gen(0, 0), Gen(0, 0), Gen(0, 0)});
    CHECK(index_bijection(A, IndexString{{1}, {2}}, 0) == Monomial{Gen(1, 3)});
}

TEST_CASE("Steenrod action on the dual Singer construction")
{
    auto F = make_complex(3, ModuleKind::Fp);
    DyerLashof dl(*F);
    for (int i = 1; i <= 10; ++i) {
        ChainKey bq = key(Monomial{Gen(1, i)});
        CHECK(dl.act(bq, SteenrodOp{0, 0}) == F->element(bq));
        CHECK(dl.act(key(Monomial{Gen(0, i)}), SteenrodOp{1, 0}) == F->element(bq));
    }
    CHECK(dl.act(key(Monomial{Gen(1, 3)}), SteenrodOp{0, 1}).empty());
}

TEST_CASE("Bockstein squares to zero and the action respects Adem relations")
{
    for (auto kind : {ModuleKind::Fp, ModuleKind::P}) {
        auto cx = make_complex(3, kind);
        DyerLashof dl(*cx);
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 40; ++t)
                for (const ChainKey& k : dl.basis(s, t)) {
                    INFO("s=" << s << " t=" << t << " " << format_chain(*cx, cx->element(k)));
                    QElement b = dl.bockstein(cx->element(k));
                    CHECK(all_in_basis(dl, b));
                    CHECK(dl.bockstein(b).empty());
                    QElement p1 = dl.act(k, SteenrodOp{0, 1});
                    CHECK(all_in_basis(dl, p1));
                    CHECK(dl.act(p1, SteenrodOp{0, 1}) == dl.act(k, SteenrodOp{0, 2}).scaled(2));
                    QElement lhs = dl.act(dl.bockstein(p1), SteenrodOp{0, 1});
                    QElement rhs = dl.act(b, SteenrodOp{0, 2});
                    rhs.add(dl.bockstein(dl.act(k, SteenrodOp{0, 2})));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("power operation commutes with the Steenrod action")
{
    for (auto [p, kind] : {std::pair{3, ModuleKind::Fp}, std::pair{3, ModuleKind::P}}) {
        auto cx = make_complex(p, kind);
        DyerLashof dl(*cx);
        for (int s = 1; s <= 2; ++s)
            for (int t = 0; t <= 40; ++t)
                for (const ChainKey& k : dl.basis(s, t))
                    for (int j = 0; j <= 5; ++j) {
                        QElement q = cx->element(k);
                        CHECK(dl.act(dl.power_op(q), SteenrodOp{0, p * j}) ==
                              dl.power_op(dl.act(q, SteenrodOp{0, j})));
                    }
    }
}

TEST_CASE("power operation on the Dyer-Lashof algebra")
{
    const int p = 3;
    auto F = make_complex(p, ModuleKind::Fp);
    DyerLashof dl(*F);
    const LambdaAlgebra& A = F->algebra();
    CHECK(dl.power_op(F->element(key(Monomial{Gen(1, 2), Gen(1, 1)}))) ==
          F->element(key(Monomial{Gen(1, 6), Gen(1, 3)})));
    CHECK(dl.power_op(F->element(key(Monomial{Gen(0, 1)}))).empty());
    for (int s = 1; s <= 3; ++s)
        for (int t = 0; t <= 60; ++t)
            for (const ChainKey& k : dl.basis(s, t)) {
                QElement img = dl.power_op(F->element(k));
                if (img.empty())
                    continue;
                REQUIRE(img.size() == 1);
                CHECK(A.excess(img.begin()->first.lambda) == p * A.excess(k.lambda) - (p - 1) * (s - 2));
            }
}

TEST_CASE("projection is multiplicative")
{
    std::mt19937_64 rng(3);
    for (int p : {2, 3}) {
        auto F = make_complex(p, ModuleKind::Fp);
        DyerLashof dl(*F);
        const LambdaAlgebra& A = F->algebra();
        for (int trial = 0; trial < 300; ++trial) {
            LambdaElement x = A.normalize(oracle::random_word(rng, p, 1 + int(rng() % 2), 20));
            LambdaElement y = A.normalize(oracle::random_word(rng, p, 1, 20));
            CHECK(dl.reduce(A.multiply(x, y)) == dl.reduce(A.multiply(dl.reduce(x), dl.reduce(y))));
        }
    }
}

TEST_CASE("hit and annihilated subspaces")
{
    auto F = make_complex(3, ModuleKind::Fp);
    DyerLashof dl(*F);
    CHECK(dl.cell(0, 0).hit_rank == 0);
    QElement q000 = F->element(key(Monomial{Gen(0, 0), Gen(0, 0), Gen(0, 0)}));
    CHECK_FALSE(dl.hit(q000));
    CHECK(dl.annihilated(q000));
    for (int p : {3, 5}) {
        auto P = make_complex(p, ModuleKind::P);
        DyerLashof d(*P);
        for (int q = 1; q <= p * p; q *= p) {
            QElement x = P->element(key(Monomial{Gen(1, q)}, {1, q - 1}));
            CHECK(d.annihilated(x));
            CHECK(d.hit(x));
        }
    }
}
