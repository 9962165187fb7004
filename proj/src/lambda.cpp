#include "lzext/lambda.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace lzext {

Monomial::Monomial(std::initializer_list<Gen> gens)
{
    for (Gen g : gens)
        push_back(g);
}

void Monomial::push_back(Gen g)
{
    if (n_ >= kMaxLength)
        throw Error("monomial longer than " + std::to_string(kMaxLength));
    if (g.idx() < 0 || g.idx() > kMaxIndex / 2)
        throw Error("lambda generator index out of range");
    g_[n_++] = std::uint16_t(g.code());
}

Monomial Monomial::slice(int from, int to) const
{
    Monomial r;
    for (int k = from; k < to; ++k)
        r.g_[std::size_t(r.n_++)] = g_[std::size_t(k)];
    return r;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r = *this;
    for (Gen g : o)
        r.push_back(g);
    return r;
}

Monomial Monomial::prepend(Gen g, const Monomial& m)
{
    Monomial r;
    r.push_back(g);
    for (Gen h : m)
        r.push_back(h);
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const
{
    if (n_ != o.n_)
        return n_ <=> o.n_;
    for (int k = 0; k < n_; ++k)
        if (g_[std::size_t(k)] != o.g_[std::size_t(k)])
            return g_[std::size_t(k)] <=> o.g_[std::size_t(k)];
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL * (n_ + 1);
    for (int k = 0; k < n_; ++k) {
        h ^= std::uint64_t(g_[std::size_t(k)]);
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 29;
    }
    return std::size_t(h ^ (h >> 32));
}

struct LambdaAlgebra::Memo {
    std::shared_mutex mutex;
    int depth = 4;
    std::size_t cap = 3'000'000;
    std::unordered_map<std::uint64_t, LambdaElement> pairs;
    std::unordered_map<Gen, LambdaElement, GenHash> gen_d;
    /* key: w followed by g */
    std::unordered_map<Monomial, LambdaRef, MonomialHash> right;
    std::unordered_map<Monomial, LambdaRef, MonomialHash> diff;
};

namespace {

std::uint64_t pair_key(Gen a, Gen b)
{
    return (std::uint64_t(std::uint32_t(a.code())) << 32) | std::uint32_t(b.code());
}

template <class Map, class Key, class Fn>
const typename Map::mapped_type& memoized(std::shared_mutex& mu, Map& map, const Key& key, Fn&& compute)
{
    {
        std::shared_lock lock(mu);
        auto it = map.find(key);
        if (it != map.end())
            return it->second;
    }
    auto value = compute();
    std::unique_lock lock(mu);
    return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

LambdaAlgebra::LambdaAlgebra(Prime p) : p_(p), memo_(std::make_shared<Memo>()) {}

void LambdaAlgebra::set_memo_depth(int depth)
{
    std::unique_lock lock(memo_->mutex);
    memo_->depth = depth;
}

std::size_t LambdaAlgebra::memo_entries() const
{
    std::shared_lock lock(memo_->mutex);
    return memo_->right.size() + memo_->diff.size();
}

void LambdaAlgebra::clear_memo() const
{
    std::unique_lock lock(memo_->mutex);
    memo_->right.clear();
    memo_->diff.clear();
}

bool LambdaAlgebra::legal(Gen g) const
{
    if (!odd())
        return g.eps() == 0 && g.idx() >= 0;
    return g.eps() == 1 ? g.idx() >= 1 : g.idx() >= 0;
}

int LambdaAlgebra::degree(Gen g) const
{
    if (!odd())
        return g.idx();
    return 2 * g.idx() * (p() - 1) - g.eps();
}

int LambdaAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (Gen g : m)
        d += degree(g);
    return d;
}

int LambdaAlgebra::excess(const Monomial& m) const
{
    if (m.empty())
        return 0;
    int e = odd() ? 2 * m[0].idx() - m[0].eps() : m[0].idx();
    for (int k = 1; k < m.length(); ++k)
        e -= degree(m[k]);
    return e;
}

bool LambdaAlgebra::admissible(Gen left, Gen right) const
{
    if (!odd())
        return left.idx() <= 2 * right.idx();
    return p() * right.idx() - right.eps() >= left.idx();
}

bool LambdaAlgebra::admissible(const Monomial& m) const
{
    for (int k = 0; k + 1 < m.length(); ++k)
        if (!admissible(m[k], m[k + 1]))
            return false;
    return true;
}

LambdaElement LambdaAlgebra::rewrite_pair(Gen left, Gen right) const
{
    LambdaElement out = zero();
    auto put = [&](Gen a, Gen b, Scalar c) {
        if (legal(a) && legal(b))
            out.add(Monomial{a, b}, c);
    };
    if (admissible(left, right)) {
        put(left, right, 1);
        return out;
    }
    const int A = left.idx(), B = right.idx();
    if (!odd()) {
        for (int t = (A + 1) / 2; t <= A + B; ++t)
            put(Gen(0, A + B - t), Gen(0, t), p_.binom(t - B - 1, 2 * t - A));
        return out;
    }
    const int m = B;
    if (left.eps() == 1 && right.eps() == 1) {
        int n = A - p() * B;
        for (int i = 0; i < n; ++i)
            put(Gen(1, p() * m + i), Gen(1, m + n - i), p_.neg(p_.binom(n, i)));
    } else if (left.eps() == 0 && right.eps() == 1) {
        int n = A - p() * B;
        for (int i = 0; i <= n; ++i)
            put(Gen(1, p() * m + i), Gen(0, m + n - i), p_.binom(n, i));
        for (int i = 0; i < n; ++i)
            put(Gen(0, p() * m + i), Gen(1, m + n - i), p_.neg(p_.binom(n, i)));
    } else {
        int n = A - p() * B - 1;
        int e = left.eps();
        for (int i = 0; i < n; ++i)
            put(Gen(e, p() * m + i + 1), Gen(0, m + n - i), p_.neg(p_.binom(n, i)));
    }
    return out;
}

const LambdaElement& LambdaAlgebra::pair_normal_form(Gen left, Gen right) const
{
    return memoized(memo_->mutex, memo_->pairs, pair_key(left, right), [&] {
        if (admissible(left, right))
            return element(Monomial{left, right});
        LambdaElement out = zero();
        for (auto& [w, c] : rewrite_pair(left, right))
            out.add(pair_normal_form(w[0], w[1]), c);
        return out;
    });
}

LambdaElement LambdaAlgebra::compute_right_multiply(const Monomial& w, Gen g) const
{
    Monomial prefix = w.slice(0, w.length() - 1);
    LambdaElement::Terms acc;
    for (auto& [ab, c] : pair_normal_form(w.back(), g)) {
        for (LambdaRef r1 = right_multiply(prefix, ab[0]); auto& [u, c2] : *r1) {
            Scalar c12 = p_.mul(c, c2);
            for (LambdaRef r2 = right_multiply(u, ab[1]); auto& [v, c3] : *r2)
                acc.emplace_back(v, p_.mul(c12, c3));
        }
    }
    return LambdaElement::collect(p(), std::move(acc));
}

LambdaRef LambdaAlgebra::right_multiply(const Monomial& w, Gen g) const
{
    Monomial key = w;
    key.push_back(g);
    if (w.empty() || admissible(w.back(), g))
        return std::make_shared<const LambdaElement>(element(key));
    Memo& memo = *memo_;
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.right.find(key);
        if (it != memo.right.end())
            return it->second;
    }
    auto value = std::make_shared<const LambdaElement>(compute_right_multiply(w, g));
    std::unique_lock lock(memo.mutex);
    if (w.length() <= memo.depth && memo.right.size() < memo.cap)
        memo.right.try_emplace(key, value);
    return value;
}

LambdaElement LambdaAlgebra::right_multiply(const LambdaElement& e, Gen g) const
{
    LambdaElement::Terms acc;
    for (auto& [w, c] : e)
        for (LambdaRef r3 = right_multiply(w, g); auto& [v, c2] : *r3)
            acc.emplace_back(v, p_.mul(c, c2));
    return LambdaElement::collect(p(), std::move(acc));
}

LambdaElement LambdaAlgebra::normalize(const Monomial& raw) const
{
    for (Gen g : raw)
        if (!legal(g))
            throw Error("illegal lambda generator index");
    if (admissible(raw))
        return element(raw);
    LambdaElement acc = unit();
    for (Gen g : raw) {
        acc = right_multiply(acc, g);
        if (acc.empty())
            break;
    }
    return acc;
}

LambdaElement LambdaAlgebra::normalize(const LambdaElement& raw) const
{
    LambdaElement::Terms acc;
    for (auto& [w, c] : raw) {
        if (admissible(w)) {
            acc.emplace_back(w, c);
            continue;
        }
        for (auto& [v, c2] : normalize(w))
            acc.emplace_back(v, p_.mul(c, c2));
    }
    return LambdaElement::collect(p(), std::move(acc));
}

namespace {

/* Worklist rewriting; pick(w) returns the position of the pair to rewrite or -1. */
template <class Pick>
LambdaElement rewrite_until_admissible(const LambdaAlgebra& A, const LambdaElement& raw, Pick pick)
{
    const Prime& F = A.prime();
    LambdaElement work = raw, out = A.zero();
    while (!work.empty()) {
        auto [w, c] = *work.begin();
        work.add(w, F.neg(c));
        int k = pick(w);
        if (k < 0) {
            out.add(w, c);
            continue;
        }
        Monomial head = w.slice(0, k), tail = w.slice(k + 2, w.length());
        for (auto& [ab, c2] : A.rewrite_pair(w[k], w[k + 1]))
            work.add(head * ab * tail, F.mul(c, c2));
    }
    return out;
}

}  // namespace

LambdaElement LambdaAlgebra::normalize_leftmost(const LambdaElement& raw) const
{
    return rewrite_until_admissible(*this, raw, [&](const Monomial& w) {
        for (int k = 0; k + 1 < w.length(); ++k)
            if (!admissible(w[k], w[k + 1]))
                return k;
        return -1;
    });
}

LambdaElement LambdaAlgebra::normalize_rightmost(const LambdaElement& raw) const
{
    return rewrite_until_admissible(*this, raw, [&](const Monomial& w) {
        for (int k = w.length() - 2; k >= 0; --k)
            if (!admissible(w[k], w[k + 1]))
                return k;
        return -1;
    });
}

LambdaElement LambdaAlgebra::multiply(const LambdaElement& a, const LambdaElement& b) const
{
    LambdaElement out = zero();
    for (auto& [u, cu] : a)
        for (auto& [v, cv] : b)
            out.add(normalize(u * v), p_.mul(cu, cv));
    return out;
}

LambdaElement LambdaAlgebra::generator_differential(Gen g) const
{
    return memoized(memo_->mutex, memo_->gen_d, g, [&] {
        LambdaElement out = zero();
        auto put = [&](Gen a, Gen b, Scalar c) {
            if (legal(a) && legal(b))
                out.add(Monomial{a, b}, c);
        };
        if (!odd()) {
            int n = g.idx() + 1;
            for (int i = 1; i < n; ++i)
                put(Gen(0, i - 1), Gen(0, n - i - 1), p_.binom(n, i));
            return out;
        }
        int n = g.idx();
        for (int i = 0; i <= n; ++i) {
            Scalar c = p_.binom(n, i);
            if (g.eps() == 1) {
                put(Gen(1, i), Gen(1, n - i), c);
            } else {
                put(Gen(1, i), Gen(0, n - i), c);
                put(Gen(0, i), Gen(1, n - i), p_.neg(c));
            }
        }
        return out;
    });
}

LambdaElement LambdaAlgebra::leibniz(const Monomial& m) const
{
    LambdaElement out = zero();
    int prefix_degree = 0;
    for (int k = 0; k < m.length(); ++k) {
        Monomial head = m.slice(0, k), tail = m.slice(k + 1, m.length());
        Scalar s = p_.sign(prefix_degree);
        for (auto& [w, c] : generator_differential(m[k]))
            out.add(head * w * tail, p_.mul(s, c));
        prefix_degree += degree(m[k]);
    }
    return out;
}

LambdaElement LambdaAlgebra::compute_differential(const Monomial& m) const
{
    /* d(w x) = d(w) x + (-1)^{|w|} w d(x) */
    Monomial w = m.slice(0, m.length() - 1);
    Gen x = m.back();
    LambdaElement::Terms acc;
    for (LambdaRef r4 = admissible_differential(w); auto& [u, c] : *r4)
        for (LambdaRef r5 = right_multiply(u, x); auto& [v, c2] : *r5)
            acc.emplace_back(v, p_.mul(c, c2));
    Scalar sign = p_.sign(degree(w));
    for (auto& [ab, c] : generator_differential(x)) {
        Scalar sc = p_.mul(sign, c);
        for (LambdaRef r6 = right_multiply(w, ab[0]); auto& [u, c2] : *r6) {
            Scalar c12 = p_.mul(sc, c2);
            for (LambdaRef r7 = right_multiply(u, ab[1]); auto& [v, c3] : *r7)
                acc.emplace_back(v, p_.mul(c12, c3));
        }
    }
    return LambdaElement::collect(p(), std::move(acc));
}

LambdaRef LambdaAlgebra::admissible_differential(const Monomial& m) const
{
    if (m.length() <= 1)
        return std::make_shared<const LambdaElement>(m.empty() ? zero() : normalize(generator_differential(m[0])));
    Memo& memo = *memo_;
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.diff.find(m);
        if (it != memo.diff.end())
            return it->second;
    }
    auto value = std::make_shared<const LambdaElement>(compute_differential(m));
    std::unique_lock lock(memo.mutex);
    if (m.length() <= memo.depth && memo.diff.size() < memo.cap)
        memo.diff.try_emplace(m, value);
    return value;
}

LambdaElement LambdaAlgebra::differential(const Monomial& m) const
{
    LambdaElement out = zero();
    for (auto& [w, c] : normalize(m))
        out.add(*admissible_differential(w), c);
    return out;
}

LambdaElement LambdaAlgebra::differential(const LambdaElement& e) const
{
    LambdaElement::Terms acc;
    for (auto& [w, c] : e) {
        LambdaElement d = admissible(w) ? *admissible_differential(w) : differential(w);
        for (auto& [v, c2] : d)
            acc.emplace_back(v, p_.mul(c, c2));
    }
    return LambdaElement::collect(p(), std::move(acc));
}

bool LambdaAlgebra::power_op(const Monomial& m, Monomial& out) const
{
    out = Monomial{};
    for (Gen g : m) {
        if (!odd()) {
            out.push_back(Gen(0, 2 * g.idx() + 1));
        } else {
            if (g.eps() == 0)
                return false;
            out.push_back(Gen(1, p() * g.idx()));
        }
    }
    return true;
}

LambdaElement LambdaAlgebra::power_op(const LambdaElement& e) const
{
    LambdaElement raw = zero();
    Monomial img;
    for (auto& [w, c] : e)
        if (power_op(w, img))
            raw.add(img, c);
    return normalize(raw);
}

std::vector<Gen> LambdaAlgebra::generators_up_to(int deg) const
{
    std::vector<Gen> out;
    for (int i = 0;; ++i) {
        bool any = false;
        for (int e = 0; e <= (odd() ? 1 : 0); ++e) {
            Gen g(e, i);
            if (!legal(g))
                continue;
            if (degree(g) <= deg) {
                out.push_back(g);
                any = true;
            }
        }
        if (!any && i > 0)
            break;
    }
    return out;
}

std::vector<Monomial> LambdaAlgebra::basis(int length, int deg) const
{
    std::vector<Monomial> out;
    if (length < 0 || deg < 0)
        return out;
    if (length == 0) {
        if (deg == 0)
            out.emplace_back();
        return out;
    }
    const std::vector<Gen> gens = generators_up_to(deg);
    Monomial cur;
    std::function<void(int)> rec = [&](int remaining) {
        int k = cur.length();
        for (Gen g : gens) {
            int d = degree(g);
            if (d > remaining)
                continue;
            if (k > 0 && !admissible(cur[k - 1], g))
                continue;
            if (k + 1 == length) {
                if (d != remaining)
                    continue;
                Monomial m = cur;
                m.push_back(g);
                out.push_back(m);
            } else {
                Monomial saved = cur;
                cur.push_back(g);
                rec(remaining - d);
                cur = saved;
            }
        }
    };
    rec(deg);
    return out;
}

}  // namespace lzext
