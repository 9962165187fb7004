#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "lzext/catalog.hpp"
#include "lzext/lz.hpp"
#include "lzext/suites.hpp"
#include "lzext/text.hpp"

using namespace lzext;

namespace {

ChainElement as_chain(const Complex& cx, const LambdaElement& e)
{
    ChainElement c = cx.zero();
    for (auto& [m, x] : e)
        c.add(ChainKey{m, {}}, x);
    return c;
}

}  // namespace

TEST_CASE("global sign")
{
    for (int p : {3, 5}) {
        auto F = make_complex(p, ModuleKind::Fp);
        DyerLashof dl(*F);
        LannesZarati lz(dl);
        CHECK(lz.sign(1) == 1);
        CHECK(lz.sign(2) == 1);
        CHECK(lz.sign(3) == Scalar(p - 1));
        CHECK(lz.sign(4) == Scalar(p - 1));
        CHECK(lz.sign(5) == 1);
    }
    auto F2 = make_complex(2, ModuleKind::Fp);
    DyerLashof dl2(*F2);
    LannesZarati lz2(dl2);
    for (int s = 1; s <= 6; ++s)
        CHECK(lz2.sign(s) == 1);
}

TEST_CASE("phi_3 of the cube of a0")
{
    auto F = make_complex(3, ModuleKind::Fp);
    DyerLashof dl(*F);
    LannesZarati lz(dl);
    LZEvaluation ev = lz.phi(parse_chain(*F, "l0_-1 l0_-1 l0_-1"));
    CHECK_FALSE(ev.zero);
    CHECK(ev.image == parse_q_raw(*F, "2*Q[0] Q[0] Q[0]"));
    CHECK_THROWS_AS(lz.phi(parse_chain(*F, "l1_1")), Error);
}

TEST_CASE("phi_1 on the k-hat and a0 families")
{
    auto P = make_complex(3, ModuleKind::P);
    DyerLashof dl(*P);
    LannesZarati lz(dl);
    int khat = 0;
    for (const CatalogEntry& e : ext1_families(*P, 120)) {
        INFO(e.name);
        if (e.family == "khat") {
            const int i = e.params[0], k = e.params[1];
            // the j = k term of the representative carries 1/(k+1)
            QElement expected = parse_q_raw(*P, "bQ[" + std::to_string(k + 1) + "]|ab[" + std::to_string(k) + "]")
                                    .scaled(P->prime().inverse(Scalar(k + 1)));
            for (int n = 0; n < i; ++n)
                expected = dl.power_op(expected);
            LZEvaluation ev = lz.phi(e.cycle);
            CHECK(ev.image == expected);
            CHECK_FALSE(ev.zero);
            CHECK(lz.power_square(e.cycle));
            ++khat;
        }
        if (e.family == "a0hhat" || e.family == "a0hhat(k)") {
            CHECK(lz.phi(e.cycle).zero);
            CHECK(lz.phi(e.cycle).provenance.excess);
            CHECK(lz.power_square(e.cycle));
        }
    }
    CHECK(khat >= 3);
}

TEST_CASE("boundaries change no image")
{
    std::mt19937_64 rng(9);
    auto P = make_complex(3, ModuleKind::P);
    DyerLashof dl(*P);
    LannesZarati lz(dl);
    for (const CatalogEntry& e : ext1_families(*P, 60)) {
        INFO(e.name);
        ChainElement x = P->zero();
        for (const ChainKey& k : P->basis(0, e.bidegree.t + 1))
            x.add(k, Scalar(rng() % 3));
        ChainElement b = P->differential(x);
        CHECK(lz.phi(b).zero);
        ChainElement other = e.cycle;
        other.add(b);
        CHECK(lz.phi(other).image == lz.phi(e.cycle).image);
    }
}

TEST_CASE("a vanishing factor kills the product")
{
    std::mt19937_64 rng(13);
    const int p = 3;
    auto F = make_complex(p, ModuleKind::Fp);
    DyerLashof dl(*F);
    LannesZarati lz(dl);
    const LambdaAlgebra& A = F->algebra();
    int vanishing = 0;
    for (int trial = 0; trial < 400; ++trial) {
        LambdaElement I = A.normalize(oracle::random_word(rng, p, 1 + int(rng() % 2), 30));
        LambdaElement J = A.normalize(oracle::random_word(rng, p, 1, 30));
        if (I.empty() || J.empty())
            continue;
        if (!lz.image(as_chain(*F, I)).empty() && !lz.image(as_chain(*F, J)).empty())
            continue;
        ++vanishing;
        CHECK(lz.image(as_chain(*F, A.multiply(I, J))).empty());
    }
    CHECK(vanishing > 50);
}

TEST_CASE("phi on whole Ext groups")
{
    auto F = make_complex(3, ModuleKind::Fp);
    DyerLashof dl(*F);
    LannesZarati lz(dl);
    CHECK(lz.on_ext(3, 0).rank == 1);
    for (int t = 1; t <= 30; ++t)
        CHECK(lz.on_ext(3, t).rank == 0);

    auto P = make_complex(3, ModuleKind::P);
    DyerLashof dlp(*P);
    LannesZarati lzp(dlp);
    for (int t = 0; t <= 60; ++t) {
        auto m = lzp.on_ext(0, t);
        CHECK(m.rank == m.ext_dim);
        CHECK(m.target_dim == m.ext_dim);
        CHECK(m.cokernel.empty());
        CHECK(m.images_annihilated);
    }
}

TEST_CASE("power operation through phi on p = 2 cycles")
{
    auto F = make_complex(2, ModuleKind::Fp);
    DyerLashof dl(*F);
    LannesZarati lz(dl);
    for (int t = 0; t <= 20; ++t)
        for (const ExtClass& c : F->ext(2, t).classes)
            CHECK(lz.power_square(c.representative));
}
