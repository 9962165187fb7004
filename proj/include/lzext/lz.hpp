#pragma once

#include <string>
#include <vector>

#include "lzext/dyer_lashof.hpp"

namespace lzext {

/* Which reductions removed terms on the way from a word to its image. */
struct Provenance {
    bool excess = false;    /* a raw term had excess below its module degree */
    bool relation = false;  /* surviving raw terms cancel after Adem rewriting */
    bool hit = false;       /* the image is nonzero but lies in the hit subspace */
    std::string describe() const;
};

struct LZEvaluation {
    Bidegree bidegree;
    QElement image;
    bool zero = true;
    bool annihilated = true;
    Provenance provenance;
};

/* Chain-level Lannes-Zarati map: sign (-1)^{(s-1)(s-2)/2} at odd p, none at p = 2,
 * followed by projection onto the dual Singer basis. */
class LannesZarati {
public:
    explicit LannesZarati(const DyerLashof& dl) : dl_(dl) {}

    const DyerLashof& dyer_lashof() const { return dl_; }
    const Complex& complex() const { return dl_.complex(); }

    Scalar sign(int s) const;
    /* Image of a normalized chain, no cycle check. */
    QElement image(const ChainElement& c) const;
    /* Requires d(c) = 0. */
    LZEvaluation phi(const ChainElement& cycle) const;
    /* Evaluates a raw (possibly inadmissible) representative, recording which
     * mechanism removes each part; the image is that of its normal form. */
    LZEvaluation phi_raw(const ChainElement& raw) const;
    /* phi_raw without the cycle requirement, for factors of a product. */
    LZEvaluation trace(const ChainElement& raw) const;

    struct ExtMap {
        Bidegree bidegree;
        int ext_dim = 0;
        int rank = 0;
        int target_dim = 0;        /* annihilated subspace */
        int coinvariant_dim = 0;   /* quotient by the hit subspace */
        int dual_dim = 0;
        std::vector<QElement> images;          /* one per Ext basis class */
        std::vector<ChainElement> kernel;      /* cycles spanning the kernel */
        std::vector<QElement> cokernel;        /* annihilated vectors completing the image */
        bool images_annihilated = true;
    };
    ExtMap on_ext(int s, int t) const;

    /* phi(P0 c) == P0 phi(c) as exact elements. */
    bool power_square(const ChainElement& cycle) const;

private:
    const DyerLashof& dl_;
};

}  // namespace lzext
