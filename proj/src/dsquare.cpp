#include "lzext/dsquare.hpp"

#include <map>
#include <optional>
#include <unordered_map>

#include "lzext/linalg.hpp"

namespace lzext {

namespace {

/* One summand of d(d(l (x) h)) before the module coefficient is applied:
 * kind 0: (d l) g_a, kind 1: d(l g_a), kind 2: (l g_a) g_b. */
struct Path {
    int kind;
    int a;
    int b;
    auto operator<=>(const Path&) const = default;
};

/* Per lambda monomial: the lambda-side elements shared by all module vectors. */
class LambdaCache {
public:
    LambdaCache(const LambdaAlgebra& A, const Monomial& lambda, std::span<const Attachment> atts)
        : A_(A), lambda_(A.element(lambda)), atts_(atts), d_(*A.admissible_differential(lambda))
    {
    }

    const LambdaElement& d() const { return d_; }

    const LambdaElement& get(const Path& p)
    {
        auto it = cache_.find(p);
        if (it != cache_.end())
            return it->second;
        LambdaElement v;
        switch (p.kind) {
        case 0:
            v = A_.right_multiply(d_, atts_[std::size_t(p.a)].g);
            break;
        case 1:
            v = A_.differential(times(p.a));
            break;
        default:
            v = A_.right_multiply(times(p.a), atts_[std::size_t(p.b)].g);
            break;
        }
        return cache_.emplace(p, std::move(v)).first->second;
    }

private:
    const LambdaElement& times(int a)
    {
        auto it = products_.find(a);
        if (it == products_.end())
            it = products_.emplace(a, A_.right_multiply(lambda_, atts_[std::size_t(a)].g)).first;
        return it->second;
    }

    const LambdaAlgebra& A_;
    LambdaElement lambda_;
    std::span<const Attachment> atts_;
    LambdaElement d_;
    std::map<int, LambdaElement> products_;
    std::map<Path, LambdaElement> cache_;
};

/* A requirement sum_paths coeff * path = 0 coming from one (h, h'') pair. */
struct Check {
    ModuleBasis h;
    std::map<Path, Scalar> coeffs;
};

/* True when every check lies in the kernel of the path vectors. */
std::vector<bool> solve_group(const Prime& F, LambdaCache& cache, const std::vector<Check>& checks)
{
    std::map<Path, int> col;
    for (const Check& c : checks)
        for (auto& [path, x] : c.coeffs)
            col.emplace(path, 0);
    int n = 0;
    for (auto& [path, idx] : col)
        idx = n++;

    std::unordered_map<Monomial, int, MonomialHash> row;
    std::vector<SparseVec> columns;
    columns.reserve(std::size_t(n));
    for (auto& [path, idx] : col) {
        SparseVec v;
        for (auto& [w, x] : cache.get(path)) {
            auto [it, fresh] = row.try_emplace(w, int(row.size()));
            v.emplace_back(it->second, x);
        }
        std::sort(v.begin(), v.end());
        columns.push_back(std::move(v));
    }
    KernelResult ker = kernel_and_rank(F, columns, int(row.size()));
    Echelon kernel(F, n);
    for (const SparseVec& k : ker.kernel)
        kernel.insert(k);

    std::vector<bool> ok;
    ok.reserve(checks.size());
    for (const Check& c : checks) {
        SparseVec v;
        for (auto& [path, x] : c.coeffs)
            if (x)
                v.emplace_back(col.at(path), x);
        ok.push_back(kernel.contains(v));
    }
    return ok;
}

}  // namespace

DSquareReport check_d_squared(const Complex& C, int smax, int tmax,
                              const std::function<void(int, long)>& progress)
{
    const LambdaAlgebra& A = C.algebra();
    const RightModule& M = C.module();
    const Prime& F = C.prime();
    DSquareReport report;

    std::vector<std::vector<ModuleBasis>> module_basis(std::size_t(tmax) + 1);
    for (int m = 0; m <= tmax; ++m)
        module_basis[std::size_t(m)] = M.basis(m);

    auto fail = [&](const Monomial& lambda, const ModuleBasis& h) {
        ++report.failures;
        if (report.failing.size() < 16)
            report.failing.push_back(ChainKey{lambda, h});
    };

    for (int s = 0; s <= smax; ++s) {
        for (int dl = 0; dl <= tmax; ++dl) {
            const int R = tmax - dl;
            std::vector<ModuleBasis> hs;
            for (int m = 0; m <= R; ++m)
                for (const ModuleBasis& h : module_basis[std::size_t(m)])
                    hs.push_back(h);
            if (hs.empty())
                continue;
            auto atts = C.attachments(R);
            for (const Monomial& lambda : A.basis(s, dl)) {
                LambdaCache cache(A, lambda, atts);
                report.checked += long(hs.size());
                if (!A.differential(cache.d()).empty()) {
                    for (const ModuleBasis& h : hs)
                        fail(lambda, h);
                    continue;
                }
                /* group by the degree drop k = |h| - |h''| */
                std::map<int, std::vector<Check>> groups;
                for (const ModuleBasis& h : hs) {
                    const int m = M.degree(h);
                    std::map<std::pair<int, ModuleBasis>, Check> local;
                    auto put = [&](int k, const ModuleBasis& target, Path path, Scalar x) {
                        if (x == 0)
                            return;
                        Check& c = local.try_emplace({k, target}, Check{h, {}}).first->second;
                        Scalar& slot = c.coeffs[path];
                        slot = F.add(slot, x);
                    };
                    for (int a = 0; a < int(atts.size()) && atts[std::size_t(a)].degree <= m; ++a) {
                        const Attachment& att = atts[std::size_t(a)];
                        auto r = M.act(h, att.eps, att.k);
                        if (!r)
                            continue;
                        put(att.degree, r->v, Path{0, a, 0}, F.mul(r->coeff, C.attachment_sign(dl - 1, m, att)));
                        Scalar c2 = F.mul(r->coeff, C.attachment_sign(dl, m, att));
                        put(att.degree, r->v, Path{1, a, 0}, c2);
                        const int m2 = M.degree(r->v);
                        const int d2 = dl + A.degree(att.g);
                        for (int b = 0; b < int(atts.size()) && atts[std::size_t(b)].degree <= m2; ++b) {
                            const Attachment& bt = atts[std::size_t(b)];
                            auto r2 = M.act(r->v, bt.eps, bt.k);
                            if (!r2)
                                continue;
                            Scalar c3 = F.mul(c2, F.mul(r2->coeff, C.attachment_sign(d2, m2, bt)));
                            put(att.degree + bt.degree, r2->v, Path{2, a, b}, c3);
                        }
                    }
                    for (auto& [key, check] : local)
                        groups[key.first].push_back(std::move(check));
                }
                for (auto& [k, checks] : groups) {
                    std::vector<bool> ok = solve_group(F, cache, checks);
                    for (std::size_t i = 0; i < ok.size(); ++i)
                        if (!ok[i])
                            fail(lambda, checks[i].h);
                }
            }
        }
        if (progress)
            progress(s, report.checked);
    }
    return report;
}

}  // namespace lzext
