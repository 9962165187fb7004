#include "lzext/complex.hpp"

#include <algorithm>

namespace lzext {

namespace {

constexpr int kAttachmentDegreeLimit = 1 << 14;

}  // namespace

Complex::Complex(LambdaAlgebra algebra, std::shared_ptr<const RightModule> module)
    : alg_(std::move(algebra)), mod_(std::move(module))
{
    if (!(mod_->prime() == alg_.prime()))
        throw Error("module and lambda algebra over different primes");
    if (alg_.odd()) {
        for (int i = 0; mod_->operation_degree(1, i) <= kAttachmentDegreeLimit; ++i)
            for (int eps = 0; eps <= 1; ++eps)
                if (i >= eps)
                    attachments_.push_back({Gen(eps, i), 1 - eps, i, mod_->operation_degree(1 - eps, i)});
    } else {
        for (int i = 1; i <= kAttachmentDegreeLimit; ++i)
            attachments_.push_back({Gen(0, i - 1), 0, i, i});
    }
    std::stable_sort(attachments_.begin(), attachments_.end(),
                     [](const Attachment& a, const Attachment& b) { return a.degree < b.degree; });
}

std::span<const Attachment> Complex::attachments(int max_degree) const
{
    if (max_degree > kAttachmentDegreeLimit)
        throw Error("module degree beyond the supported range");
    auto end = std::upper_bound(attachments_.begin(), attachments_.end(), max_degree,
                                [](int d, const Attachment& a) { return d < a.degree; });
    return {attachments_.data(), std::size_t(end - attachments_.begin())};
}

Scalar Complex::attachment_sign(int lambda_degree, int h_degree, const Attachment& a) const
{
    if (!alg_.odd())
        return 1;
    return prime().sign(lambda_degree + (1 - a.g.eps()) * h_degree);
}

int Complex::total_degree(const ChainKey& k) const
{
    return alg_.degree(k.lambda) + mod_->degree(k.h);
}

Bidegree Complex::bidegree(const ChainElement& c) const
{
    if (c.empty())
        throw Error("zero chain has no bidegree");
    Bidegree bd{c.begin()->first.lambda.length(), total_degree(c.begin()->first)};
    for (auto& [k, v] : c)
        if (k.lambda.length() != bd.s || total_degree(k) != bd.t)
            throw Error("inhomogeneous chain");
    return bd;
}

std::vector<ChainKey> Complex::basis(int s, int t) const
{
    std::vector<ChainKey> out;
    if (s < 0 || t < 0)
        return out;
    for (int m = 0; m <= t; ++m) {
        for (const ModuleBasis& h : mod_->basis(m)) {
            for (const Monomial& l : alg_.basis(s, t - m)) {
                out.push_back(ChainKey{l, h});
                if (out.size() > basis_cap_)
                    throw Error("basis of bidegree (" + std::to_string(s) + "," + std::to_string(t) +
                                ") exceeds the memory guard of " + std::to_string(basis_cap_) + " vectors");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<ChainKey>& Complex::cached_basis(int s, int t) const
{
    {
        std::lock_guard lock(cell_mu_);
        auto it = bases_.find({s, t});
        if (it != bases_.end())
            return *it->second;
    }
    auto b = std::make_unique<std::vector<ChainKey>>(basis(s, t));
    std::lock_guard lock(cell_mu_);
    return *bases_.try_emplace({s, t}, std::move(b)).first->second;
}

ChainElement Complex::normalize(const ChainElement& raw) const
{
    ChainElement::Terms acc;
    for (auto& [k, c] : raw) {
        if (alg_.admissible(k.lambda)) {
            acc.emplace_back(k, c);
            continue;
        }
        for (auto& [w, c2] : alg_.normalize(k.lambda))
            acc.emplace_back(ChainKey{w, k.h}, alg_.prime().mul(c, c2));
    }
    return ChainElement::collect(p(), std::move(acc));
}

ChainElement Complex::differential(const ChainKey& key) const
{
    const Prime& F = alg_.prime();
    ChainElement::Terms acc;
    for (LambdaRef r1 = alg_.admissible_differential(key.lambda); auto& [w, c] : *r1)
        acc.emplace_back(ChainKey{w, key.h}, c);
    const int hdeg = mod_->degree(key.h);
    const int ldeg = alg_.degree(key.lambda);
    for (const Attachment& a : attachments(hdeg)) {
        auto r = mod_->act(key.h, a.eps, a.k);
        if (!r)
            continue;
        Scalar c = F.mul(attachment_sign(ldeg, hdeg, a), r->coeff);
        for (LambdaRef r2 = alg_.right_multiply(key.lambda, a.g); auto& [w, c2] : *r2)
            acc.emplace_back(ChainKey{w, r->v}, F.mul(c, c2));
    }
    return ChainElement::collect(p(), std::move(acc));
}

ChainElement Complex::differential(const ChainElement& c) const
{
    ChainElement::Terms acc;
    const Prime& F = alg_.prime();
    for (auto& [k, v] : c) {
        if (!alg_.admissible(k.lambda))
            throw Error("differential of a chain outside normal form");
        for (auto& [k2, v2] : differential(k))
            acc.emplace_back(k2, F.mul(v, v2));
    }
    return ChainElement::collect(p(), std::move(acc));
}

SparseVec Complex::coordinates(const ChainElement& c, Bidegree bd) const
{
    const Cell& cl = cell(bd.s, bd.t);
    SparseVec v;
    for (auto& [k, x] : c) {
        auto it = cl.index.find(k);
        if (it == cl.index.end())
            throw Error("chain term outside bidegree (" + std::to_string(bd.s) + "," + std::to_string(bd.t) + ")");
        v.emplace_back(it->second, x);
    }
    std::sort(v.begin(), v.end());
    return v;
}

ChainElement Complex::from_coordinates(const SparseVec& v, Bidegree bd) const
{
    const auto& b = cached_basis(bd.s, bd.t);
    ChainElement::Terms acc;
    for (auto [i, x] : v)
        acc.emplace_back(b[std::size_t(i)], x);
    return ChainElement::collect(p(), std::move(acc));
}

std::vector<SparseVec> Complex::differential_matrix(int s, int t) const
{
    const auto& src = cached_basis(s, t);
    const auto& dst = cached_basis(s + 1, t - 1);
    std::unordered_map<ChainKey, int, ChainKeyHash> index;
    index.reserve(dst.size());
    for (int i = 0; i < int(dst.size()); ++i)
        index.emplace(dst[std::size_t(i)], i);
    std::vector<SparseVec> cols;
    cols.reserve(src.size());
    for (const ChainKey& k : src) {
        SparseVec col;
        for (auto& [key, c] : differential(k)) {
            auto it = index.find(key);
            if (it == index.end())
                throw Error("differential left its target bidegree");
            col.emplace_back(it->second, c);
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    return cols;
}

const Complex::Cell& Complex::cell(int s, int t) const
{
    {
        std::lock_guard lock(cell_mu_);
        auto it = cells_.find({s, t});
        if (it != cells_.end())
            return *it->second;
    }
    auto cl = std::make_unique<Cell>();
    cl->basis = cached_basis(s, t);
    cl->index.reserve(cl->basis.size());
    for (int i = 0; i < int(cl->basis.size()); ++i)
        cl->index.emplace(cl->basis[std::size_t(i)], i);
    const int n = int(cl->basis.size());

    std::vector<SparseVec> incoming;
    if (s >= 1) {
        cl->source_basis = cached_basis(s - 1, t + 1);
        incoming = differential_matrix(s - 1, t + 1);
    }
    cl->boundaries = std::make_unique<Echelon>(prime(), n, int(incoming.size()));
    for (int j = 0; j < int(incoming.size()); ++j)
        cl->boundaries->insert(incoming[std::size_t(j)], unit_vector(j));

    KernelResult out = kernel_and_rank(prime(), differential_matrix(s, t), int(cached_basis(s + 1, t - 1).size()));
    cl->cycles = int(out.kernel.size());

    /* boundaries are seeded untagged; representative r carries tag r */
    auto classes = std::make_unique<Echelon>(prime(), n, cl->cycles);
    for (const SparseVec& col : incoming)
        classes->insert(col);
    for (const SparseVec& z : out.kernel) {
        SparseVec r = classes->reduce(z).remainder;
        if (r.empty())
            continue;
        int idx = int(cl->reps.size());
        cl->reps.push_back(from_coordinates(r, {s, t}));
        classes->insert(r, unit_vector(idx));
    }
    cl->classes = std::move(classes);

    std::lock_guard lock(cell_mu_);
    return *cells_.try_emplace({s, t}, std::move(cl)).first->second;
}

ExtGroup Complex::ext(int s, int t) const
{
    const Cell& cl = cell(s, t);
    ExtGroup g;
    g.bidegree = {s, t};
    g.dimension = int(cl.reps.size());
    g.cycles = cl.cycles;
    g.boundaries = cl.boundaries->rank();
    for (const ChainElement& r : cl.reps)
        g.classes.push_back(ExtClass{{s, t}, r, ""});
    return g;
}

std::optional<ChainElement> Complex::boundary_witness(const ChainElement& cycle) const
{
    if (cycle.empty())
        return zero();
    Bidegree bd = bidegree(cycle);
    if (!differential(cycle).empty())
        throw Error("boundary test on a non-cycle");
    const Cell& cl = cell(bd.s, bd.t);
    auto r = cl.boundaries->reduce(coordinates(cycle, bd));
    if (!r.remainder.empty())
        return std::nullopt;
    ChainElement::Terms acc;
    for (auto [j, x] : r.tag)
        acc.emplace_back(cl.source_basis[std::size_t(j)], alg_.prime().neg(x));
    return ChainElement::collect(p(), std::move(acc));
}

SparseVec Complex::ext_coordinates(const ChainElement& cycle) const
{
    if (cycle.empty())
        return {};
    Bidegree bd = bidegree(cycle);
    if (!differential(cycle).empty())
        throw Error("class coordinates requested for a non-cycle");
    const Cell& cl = cell(bd.s, bd.t);
    auto r = cl.classes->reduce(coordinates(cycle, bd));
    if (!r.remainder.empty())
        throw Error("cycle not spanned by the computed classes");
    SparseVec out;
    for (auto [j, x] : r.tag)
        out.emplace_back(j, alg_.prime().neg(x));
    return out;
}

ChainElement Complex::power_op(const ChainElement& c) const
{
    ChainElement::Terms raw;
    Monomial img;
    for (auto& [k, x] : c) {
        if (!alg_.power_op(k.lambda, img))
            continue;
        auto h = mod_->theta(k.h);
        if (!h)
            continue;
        raw.emplace_back(ChainKey{img, *h}, x);
    }
    return normalize(ChainElement::collect(p(), std::move(raw)));
}

ChainElement Complex::truncate(const ChainElement& c, int n) const
{
    ChainElement::Terms acc;
    for (auto& [k, x] : c)
        if (mod_->degree(k.h) > n)
            acc.emplace_back(k, x);
    return ChainElement::collect(p(), std::move(acc));
}

ChainElement Complex::product(const LambdaElement& l, const ChainElement& c) const
{
    ChainElement::Terms raw;
    const Prime& F = alg_.prime();
    for (auto& [w, x] : l)
        for (auto& [k, y] : c)
            raw.emplace_back(ChainKey{w * k.lambda, k.h}, F.mul(x, y));
    return normalize(ChainElement::collect(p(), std::move(raw)));
}

}  // namespace lzext
