#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lzext/complex.hpp"
#include "lzext/linalg.hpp"

namespace lzext {

/* Q^I (x) l is stored as ChainKey{I, l} with I read as a Dyer-Lashof word:
 * Gen(e, i) is b^e Q^i at odd p and Q^i at p = 2. Elements live in the dual
 * Singer construction and are kept in its admissible basis. */
using QElement = ChainElement;

/* One right operation: b^eps P^k at odd p, Sq^k at p = 2. */
struct SteenrodOp {
    int eps = 0;
    int k = 0;
    auto operator<=>(const SteenrodOp&) const = default;
};

/* Subspaces of the degree (s, t) part of the dual Singer construction. */
struct DualCell {
    Bidegree bidegree;
    std::vector<ChainKey> basis;
    /* Basis of the vectors killed by every positive-degree operation. */
    std::vector<SparseVec> annihilated;
    /* Rank of the span of positive-degree operation images. */
    int hit_rank = 0;
    int coinvariant_dim() const { return int(basis.size()) - hit_rank; }
};

/* Right action of b on b^e Q^i Y (x) l. Homology: b Q^i Y (x) l when e = 0, else 0; on the empty word b acts on l.
 * PassThrough adds (-1)^{|Q^I|} Q^I (x) l b; it breaks b b = 0 on words with e(I) = |l|
 * and the relation P^1 b P^1 = b P^2 + P^2 b, so it is kept only for comparison. */
enum class BocksteinRule { Homology, PassThrough };

class DyerLashof {
public:
    explicit DyerLashof(const Complex& cx, BocksteinRule rule = BocksteinRule::Homology);
    ~DyerLashof();
    DyerLashof(const DyerLashof&) = delete;
    DyerLashof& operator=(const DyerLashof&) = delete;

    const Complex& complex() const { return cx_; }
    const LambdaAlgebra& algebra() const { return cx_.algebra(); }
    const Prime& prime() const { return cx_.prime(); }
    BocksteinRule rule() const { return rule_; }

    /* Admissible, and excess >= |l| in positive length. */
    bool in_basis(const ChainKey& k) const;
    int degree(const ChainKey& k) const { return cx_.total_degree(k); }

    std::vector<ChainKey> basis(int s, int t) const;

    /* Keeps the basis terms of a normalized element. */
    QElement project(const ChainElement& normalized) const;
    /* Normal form of arbitrary words: Adem rewriting in Lambda, then projection. */
    QElement reduce(const ChainElement& raw) const;
    LambdaElement reduce(const LambdaElement& raw) const;

    QElement act(const ChainKey& k, SteenrodOp op) const;
    QElement act(const QElement& x, SteenrodOp op) const;
    QElement bockstein(const QElement& x) const { return act(x, {1, 0}); }
    int operation_degree(SteenrodOp op) const { return cx_.module().operation_degree(op.eps, op.k); }
    /* b and P^{p^j} (Sq^{2^j} at p = 2) of degree at most max_degree. */
    std::vector<SteenrodOp> generators(int max_degree) const;

    /* P0 at odd p, Sq0 at p = 2, on words and module factors. */
    QElement power_op(const QElement& x) const;

    const DualCell& cell(int s, int t) const;
    bool annihilated(const QElement& x) const;
    bool hit(const QElement& x) const;
    /* Coordinates modulo the hit subspace, as a remainder vector. */
    SparseVec coinvariant_remainder(const QElement& x) const;

    SparseVec coordinates(const QElement& x, Bidegree bd) const;
    QElement from_coordinates(const SparseVec& v, Bidegree bd) const;

private:
    struct CellData {
        DualCell cell;
        std::unique_ptr<Echelon> hits;
        std::unique_ptr<Echelon> annihilated_span;
    };
    const CellData& data(int s, int t) const;
    QElement nishida(const Monomial& w, const ModuleBasis& h, int k) const;
    QElement beta(const Monomial& w, const ModuleBasis& h) const;
    QElement prepend(Gen g, const QElement& tail) const;

    struct Caches;
    const Complex& cx_;
    BocksteinRule rule_;
    std::unique_ptr<Caches> caches_;
    mutable std::map<Bidegree, std::unique_ptr<CellData>> cells_;
    mutable std::mutex mu_;
};

/* Index strings (sigma_k, j_k) parametrizing admissible words of excess >= n. */
struct IndexString {
    std::vector<int> sigma;
    std::vector<int> j;
};

/* Sends (sigma, j) to the admissible word (eps, i); at p = 2 sigma is ignored. */
Monomial index_bijection(const LambdaAlgebra& alg, const IndexString& J, int n);
/* Every index string of length s whose word has degree <= max_degree, excess bound n. */
std::vector<IndexString> enumerate_index_strings(const LambdaAlgebra& alg, int s, int n, int max_degree);

}  // namespace lzext
