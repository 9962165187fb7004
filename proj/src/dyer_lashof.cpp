#include "lzext/dyer_lashof.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <unordered_map>

namespace lzext {

namespace {

struct NishidaKey {
    ChainKey key;
    int k;
    bool operator==(const NishidaKey& o) const { return k == o.k && key == o.key; }
};

struct NishidaKeyHash {
    std::size_t operator()(const NishidaKey& n) const { return ChainKeyHash()(n.key) * 31 + std::size_t(n.k); }
};

}  // namespace

/* Words of R by (length, degree, excess bound), and the Nishida memo. */
struct DyerLashof::Caches {
    std::map<std::tuple<int, int, int>, std::vector<Monomial>> words;
    std::unordered_map<NishidaKey, QElement, NishidaKeyHash> nishida;
    std::mutex mu;
};

DyerLashof::DyerLashof(const Complex& cx, BocksteinRule rule)
    : cx_(cx), rule_(rule), caches_(std::make_unique<Caches>())
{
}

DyerLashof::~DyerLashof() = default;

bool DyerLashof::in_basis(const ChainKey& k) const
{
    const LambdaAlgebra& A = algebra();
    if (!cx_.module().valid(k.h))
        return false;
    if (k.lambda.empty())
        return true;
    for (Gen g : k.lambda)
        if (!A.legal(g))
            return false;
    return A.admissible(k.lambda) && A.excess(k.lambda) >= cx_.module().degree(k.h);
}

namespace {

/* Admissible words of length len, degree deg and excess >= n, built by choosing the
 * leading operation over every admissible tail; the tail's excess is at least the word's. */
template <class Cache>
const std::vector<Monomial>& r_words(const LambdaAlgebra& A, Cache& cache, int len, int deg, int n)
{
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.words.find({len, deg, n});
        if (it != cache.words.end())
            return it->second;
    }
    std::vector<Monomial> out;
    if (len == 0) {
        if (deg == 0)
            out.emplace_back();
    } else if (len == 1) {
        for (int e = 0; e <= (A.odd() ? 1 : 0); ++e) {
            int num = deg + e;
            int unit = A.odd() ? 2 * (A.p() - 1) : 1;
            if (num < 0 || num % unit)
                continue;
            Gen g(e, num / unit);
            if (A.legal(g) && A.excess(Monomial{g}) >= n)
                out.push_back(Monomial{g});
        }
    } else {
        for (int tail_deg = 0; tail_deg <= deg; ++tail_deg) {
            for (int e = 0; e <= (A.odd() ? 1 : 0); ++e) {
                int head_deg = deg - tail_deg;
                int num = head_deg + e;
                int unit = A.odd() ? 2 * (A.p() - 1) : 1;
                if (num < 0 || num % unit)
                    continue;
                Gen head(e, num / unit);
                if (!A.legal(head))
                    continue;
                int excess = (A.odd() ? 2 * head.idx() - e : head.idx()) - tail_deg;
                if (excess < n)
                    continue;
                for (const Monomial& tail : r_words(A, cache, len - 1, tail_deg, n))
                    if (A.admissible(head, tail.front()))
                        out.push_back(Monomial::prepend(head, tail));
            }
        }
    }
    std::sort(out.begin(), out.end());
    std::lock_guard lock(cache.mu);
    return cache.words.try_emplace({len, deg, n}, std::move(out)).first->second;
}

}  // namespace

std::vector<ChainKey> DyerLashof::basis(int s, int t) const
{
    std::vector<ChainKey> out;
    if (s < 0 || t < 0)
        return out;
    for (int m = 0; m <= t; ++m)
        for (const ModuleBasis& h : cx_.module().basis(m))
            for (const Monomial& w : r_words(algebra(), *caches_, s, t - m, s == 0 ? 0 : m))
                out.push_back(ChainKey{w, h});
    std::sort(out.begin(), out.end());
    return out;
}

QElement DyerLashof::project(const ChainElement& normalized) const
{
    ChainElement::Terms kept;
    for (auto& [k, c] : normalized)
        if (in_basis(k))
            kept.emplace_back(k, c);
    return ChainElement::collect(cx_.p(), std::move(kept));
}

QElement DyerLashof::reduce(const ChainElement& raw) const
{
    return project(cx_.normalize(raw));
}

LambdaElement DyerLashof::reduce(const LambdaElement& raw) const
{
    LambdaElement::Terms kept;
    for (auto& [w, c] : algebra().normalize(raw))
        if (w.empty() || algebra().excess(w) >= 0)
            kept.emplace_back(w, c);
    return LambdaElement::collect(cx_.p(), std::move(kept));
}

QElement DyerLashof::prepend(Gen g, const QElement& tail) const
{
    ChainElement::Terms raw;
    for (auto& [k, c] : tail)
        raw.emplace_back(ChainKey{Monomial::prepend(g, k.lambda), k.h}, c);
    return reduce(ChainElement::collect(cx_.p(), std::move(raw)));
}

QElement DyerLashof::beta(const Monomial& w, const ModuleBasis& h) const
{
    const Prime& F = prime();
    QElement out = cx_.zero();
    if (auto r = cx_.module().act(h, 1, 0); r && (w.empty() || rule_ == BocksteinRule::PassThrough)) {
        ChainKey k{w, r->v};
        if (in_basis(k))
            out.add(k, F.mul(F.sign(algebra().degree(w)), r->coeff));
    }
    if (!w.empty() && w[0].eps() == 0 && w[0].idx() >= 1) {
        Monomial bw = Monomial::prepend(Gen(1, w[0].idx()), w.slice(1, w.length()));
        out.add(reduce(cx_.element(ChainKey{bw, h})));
    }
    return out;
}

QElement DyerLashof::nishida(const Monomial& w, const ModuleBasis& h, int k) const
{
    if (k == 0)
        return cx_.element(ChainKey{w, h});
    const Prime& F = prime();
    const int p = F.value();
    if (w.empty()) {
        QElement out = cx_.zero();
        if (auto r = cx_.module().act(h, 0, k))
            out.add(ChainKey{w, r->v}, r->coeff);
        return out;
    }
    Caches* cache = caches_.get();
    NishidaKey key{ChainKey{w, h}, k};
    {
        std::lock_guard lock(cache->mu);
        auto it = cache->nishida.find(key);
        if (it != cache->nishida.end())
            return it->second;
    }
    const int e = w[0].eps();
    const int i = w[0].idx();
    const Monomial tail = w.slice(1, w.length());
    QElement out = cx_.zero();
    auto push = [&](int eps, int idx, Scalar c, const QElement& inner) {
        if (c == 0 || idx < eps || inner.empty())
            return;
        out.add(prepend(Gen(eps, idx), inner), c);
    };
    if (!F.odd()) {
        for (int t = 0; 2 * t <= k; ++t)
            push(0, i - k + t, F.binom(i - k, k - 2 * t), nishida(tail, h, t));
    } else {
        for (int t = 0; p * t <= k; ++t) {
            Scalar sgn = F.sign(k + t);
            push(e, i - k + t, F.mul(sgn, F.binom((p - 1) * (i - k) - e, k - p * t)), nishida(tail, h, t));
            if (e == 1) {
                Scalar c = F.mul(sgn, F.binom((p - 1) * (i - k) - 1, k - p * t - 1));
                if (c == 0)
                    continue;
                QElement inner = cx_.zero();
                for (auto& [bk, bc] : beta(tail, h))
                    inner.add(nishida(bk.lambda, bk.h, t), bc);
                push(0, i - k + t, c, inner);
            }
        }
    }
    std::lock_guard lock(cache->mu);
    return cache->nishida.try_emplace(key, std::move(out)).first->second;
}

QElement DyerLashof::act(const ChainKey& k, SteenrodOp op) const
{
    if (!prime().odd())
        return nishida(k.lambda, k.h, op.eps ? 1 : op.k);
    if (op.eps == 0)
        return nishida(k.lambda, k.h, op.k);
    QElement b = beta(k.lambda, k.h);
    if (op.k == 0)
        return b;
    QElement out = cx_.zero();
    for (auto& [bk, c] : b)
        out.add(nishida(bk.lambda, bk.h, op.k), c);
    return out;
}

QElement DyerLashof::act(const QElement& x, SteenrodOp op) const
{
    QElement out = cx_.zero();
    for (auto& [k, c] : x) {
        if (!in_basis(k))
            throw Error("Steenrod action on a vector outside the dual Singer basis");
        out.add(act(k, op), c);
    }
    return out;
}

std::vector<SteenrodOp> DyerLashof::generators(int max_degree) const
{
    std::vector<SteenrodOp> out;
    if (prime().odd() && max_degree >= 1)
        out.push_back({1, 0});
    for (long q = 1; operation_degree({0, int(q)}) <= max_degree; q *= prime().value())
        out.push_back({0, int(q)});
    return out;
}

QElement DyerLashof::power_op(const QElement& x) const
{
    ChainElement::Terms raw;
    Monomial img;
    for (auto& [k, c] : x) {
        if (!algebra().power_op(k.lambda, img))
            continue;
        auto h = cx_.module().theta(k.h);
        if (!h)
            continue;
        raw.emplace_back(ChainKey{img, *h}, c);
    }
    return reduce(ChainElement::collect(cx_.p(), std::move(raw)));
}

SparseVec DyerLashof::coordinates(const QElement& x, Bidegree bd) const
{
    const auto& b = data(bd.s, bd.t).cell.basis;
    SparseVec v;
    for (auto& [k, c] : x) {
        auto it = std::lower_bound(b.begin(), b.end(), k);
        if (it == b.end() || !(*it == k))
            throw Error("vector outside the dual Singer basis in degree (" + std::to_string(bd.s) + "," +
                        std::to_string(bd.t) + ")");
        v.emplace_back(int(it - b.begin()), c);
    }
    std::sort(v.begin(), v.end());
    return v;
}

QElement DyerLashof::from_coordinates(const SparseVec& v, Bidegree bd) const
{
    const auto& b = data(bd.s, bd.t).cell.basis;
    ChainElement::Terms acc;
    for (auto [i, c] : v)
        acc.emplace_back(b[std::size_t(i)], c);
    return ChainElement::collect(cx_.p(), std::move(acc));
}

const DyerLashof::CellData& DyerLashof::data(int s, int t) const
{
    {
        std::lock_guard lock(mu_);
        auto it = cells_.find({s, t});
        if (it != cells_.end())
            return *it->second;
    }
    auto d = std::make_unique<CellData>();
    d->cell.bidegree = {s, t};
    d->cell.basis = basis(s, t);
    const auto& B = d->cell.basis;
    const int n = int(B.size());
    auto index_in = [](const std::vector<ChainKey>& basis, const ChainKey& k) {
        auto it = std::lower_bound(basis.begin(), basis.end(), k);
        if (it == basis.end() || !(*it == k))
            throw Error("Steenrod action left the dual Singer basis");
        return int(it - basis.begin());
    };

    /* kernel of all generators stacked */
    std::vector<SteenrodOp> down = generators(t);
    std::vector<std::vector<ChainKey>> targets;
    std::vector<int> offsets;
    int total = 0;
    for (SteenrodOp op : down) {
        offsets.push_back(total);
        targets.push_back(basis(s, t - operation_degree(op)));
        total += int(targets.back().size());
    }
    std::vector<SparseVec> cols;
    for (const ChainKey& k : B) {
        SparseVec col;
        for (std::size_t o = 0; o < down.size(); ++o)
            for (auto& [img, c] : act(k, down[o]))
                col.emplace_back(offsets[o] + index_in(targets[o], img), c);
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    d->cell.annihilated = kernel_and_rank(prime(), cols, total).kernel;
    d->annihilated_span = std::make_unique<Echelon>(prime(), n);
    for (const SparseVec& v : d->cell.annihilated)
        d->annihilated_span->insert(v);

    /* images of the generators b, P^{p^j} with p^j <= t */
    d->hits = std::make_unique<Echelon>(prime(), n);
    if (n > 0) {
        for (SteenrodOp op : generators(prime().odd() ? operation_degree({0, 1}) * t : t)) {
            for (const ChainKey& k : basis(s, t + operation_degree(op))) {
                SparseVec v;
                for (auto& [img, c] : act(k, op))
                    v.emplace_back(index_in(B, img), c);
                std::sort(v.begin(), v.end());
                d->hits->insert(v);
            }
        }
    }
    d->cell.hit_rank = d->hits->rank();

    std::lock_guard lock(mu_);
    return *cells_.try_emplace({s, t}, std::move(d)).first->second;
}

const DualCell& DyerLashof::cell(int s, int t) const
{
    return data(s, t).cell;
}

bool DyerLashof::annihilated(const QElement& x) const
{
    if (x.empty())
        return true;
    int t = degree(x.begin()->first);
    for (SteenrodOp op : generators(t))
        if (!act(x, op).empty())
            return false;
    return true;
}

bool DyerLashof::hit(const QElement& x) const
{
    return coinvariant_remainder(x).empty();
}

SparseVec DyerLashof::coinvariant_remainder(const QElement& x) const
{
    if (x.empty())
        return {};
    const ChainKey& k0 = x.begin()->first;
    Bidegree bd{k0.lambda.length(), degree(k0)};
    return data(bd.s, bd.t).hits->reduce(coordinates(x, bd)).remainder;
}

namespace {

std::vector<long> bijection_indices(const LambdaAlgebra& alg, const IndexString& J, int n)
{
    const int s = int(J.j.size());
    const bool odd = alg.odd();
    const long p = alg.p();
    if (odd && J.sigma.size() != J.j.size())
        throw Error("index string with mismatched lengths");
    auto sig = [&](int m) { return odd ? J.sigma[std::size_t(m)] : 0; };
    long lower = s ? (odd ? 2L : 1L) * J.j[0] : 0;
    for (int m = 0; m < s; ++m) {
        if (sig(m) != 0 && sig(m) != 1)
            throw Error("sigma must be 0 or 1");
        if (m > 0 && J.j[std::size_t(m)] < 0)
            throw Error("j_k must be non-negative for k >= 2");
        lower += sig(m);
    }
    if (s && lower < n)
        throw Error("index string below the excess bound");
    auto power = [&](int e) {
        long r = 1;
        for (int q = 0; q < e; ++q)
            r *= p;
        return r;
    };
    std::vector<long> out;
    for (int k = 1; k <= s; ++k) {
        long prefix = 0;
        for (int m = 0; m < k; ++m)
            prefix += J.j[std::size_t(m)] + sig(m);
        long i = power(s - k) * prefix;
        for (int t = 0; t <= s - k - 1; ++t)
            i += (power(s - k) - power(t)) * (J.j[std::size_t(k + t)] + sig(k + t));
        out.push_back(i);
    }
    return out;
}

}  // namespace

Monomial index_bijection(const LambdaAlgebra& alg, const IndexString& J, int n)
{
    std::vector<long> idx = bijection_indices(alg, J, n);
    Monomial out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        int eps = alg.odd() ? J.sigma[k] : 0;
        if (idx[k] < eps || idx[k] > Monomial::kMaxIndex)
            throw Error("index string maps outside the generators");
        out.push_back(Gen(eps, int(idx[k])));
    }
    return out;
}

std::vector<IndexString> enumerate_index_strings(const LambdaAlgebra& alg, int s, int n, int max_degree)
{
    std::vector<IndexString> out;
    if (s == 0) {
        if (max_degree >= 0)
            out.push_back({});
        return out;
    }
    const bool odd = alg.odd();
    const long p = alg.p();
    auto word_degree = [&](const IndexString& J) {
        std::vector<long> idx = bijection_indices(alg, J, n);
        long d = 0;
        for (std::size_t k = 0; k < idx.size(); ++k)
            d += odd ? 2 * idx[k] * (p - 1) - J.sigma[k] : idx[k];
        return d;
    };
    const int patterns = odd ? 1 << s : 1;
    for (int mask = 0; mask < patterns; ++mask) {
        IndexString J;
        int sum_sigma = 0;
        for (int m = 0; m < s; ++m) {
            int b = odd ? (mask >> m) & 1 : 0;
            if (odd)
                J.sigma.push_back(b);
            sum_sigma += b;
        }
        /* smallest j_1 with 2 j_1 + sum sigma >= n (odd p) or j_1 >= n (p = 2) */
        int gap = n - sum_sigma;
        int j1 = odd ? (gap >= 0 ? (gap + 1) / 2 : -((-gap) / 2)) : n;
        J.j.assign(std::size_t(s), 0);
        J.j[0] = j1;
        std::function<void(int)> rec = [&](int pos) {
            if (pos == s) {
                out.push_back(J);
                return;
            }
            const int start = J.j[std::size_t(pos)];
            for (int v = start;; ++v) {
                J.j[std::size_t(pos)] = v;
                for (int q = pos + 1; q < s; ++q)
                    J.j[std::size_t(q)] = 0;
                if (word_degree(J) > max_degree)
                    break;
                rec(pos + 1);
            }
            J.j[std::size_t(pos)] = start;
        };
        rec(0);
    }
    return out;
}

}  // namespace lzext
