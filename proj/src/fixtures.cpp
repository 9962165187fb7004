#include "lzext/fixtures.hpp"

#include <functional>

#include "lzext/text.hpp"

namespace lzext {

std::string FixtureParams::describe(const std::string& used) const
{
    std::string out;
    for (char c : used) {
        long v = c == 'i' ? i : c == 'j' ? j : c == 'k' ? k : c == 'l' ? l : c == 'm' ? m : r;
        if (!out.empty())
            out += ",";
        out += std::string(1, c) + "=" + std::to_string(v);
    }
    return out;
}

namespace {

struct Inapplicable {};

long pw(long b, long e)
{
    if (e < 0)
        throw Inapplicable{};
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

long binom(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    long r = 1;
    for (long t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

/* Sum of c * word|module terms written in the text grammar. */
class Expr {
public:
    explicit Expr(long p) : p_(p) {}
    Expr& add(long num, long den, const std::string& word, const std::string& module)
    {
        if (((den % p_) + p_) % p_ == 0)
            throw Inapplicable{};
        long n = ((num % p_) + p_) % p_;
        if (n != 0)
            s_ += " + " + std::to_string(n) + "/" + std::to_string(den) + "*" + word + "|" + module;
        return *this;
    }
    Expr& add(long num, const std::string& word, const std::string& module) { return add(num, 1, word, module); }
    const std::string& text() const { return s_; }

private:
    long p_;
    std::string s_;
};

std::string l1(long n)
{
    if (n < 0)
        throw Inapplicable{};
    return "l1_" + std::to_string(n);
}
std::string l0(long n) { return "l0_" + std::to_string(n); }
std::string a0() { return "l0_-1"; }
std::string ab(long t)
{
    if (t < 0)
        throw Inapplicable{};
    return "ab[" + std::to_string(t) + "]";
}
std::string b(long t)
{
    if (t < 1)
        throw Inapplicable{};
    return "b[" + std::to_string(t) + "]";
}
std::string w(const std::string& x, const std::string& y) { return x + " " + y; }

struct Congruence {
    Expr source;
    Expr target;
    long n;
};

struct Fixture {
    std::string name;
    std::string params;  /* which of i, j, k, l, m, r vary */
    std::function<bool(const FixtureParams&, long p)> applies;
    std::function<Congruence(const FixtureParams&, long p)> build;
};

std::vector<Fixture> fixtures()
{
    std::vector<Fixture> out;
    out.push_back({"d b[p+l+1]", "l", [](auto& q, long p) { return q.l <= p - 1; },
                   [](auto& q, long p) {
                       Congruence c{Expr(p), Expr(p), 2 * (q.l + 2) - 1};
                       c.source.add(1, "1", b(p + q.l + 1));
                       c.target.add(1, a0(), ab(p + q.l)).add(q.l + 2, l1(0), b(q.l + 2));
                       return c;
                   }});
    out.push_back({"d b[kp^i]", "ik", [](auto& q, long p) { return q.i >= 1 && q.k >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long t = q.k * pw(p, q.i);
                       Congruence c{Expr(p), Expr(p), 2 * (t - p + 1) - 1};
                       c.source.add(1, "1", b(t));
                       c.target.add(1, a0(), ab(t - 1)).add(1, l1(0), b(t - p + 1));
                       return c;
                   }});
    out.push_back({"d b[p+l-1]", "l", [](auto& q, long p) { return q.l >= 1 && q.l <= p - 1; },
                   [](auto& q, long p) {
                       Congruence c{Expr(p), Expr(p), 2 * q.l - 1};
                       c.source.add(1, "1", b(p + q.l - 1));
                       c.target.add(1, a0(), ab(p - 1 + q.l - 1)).add(q.l, l1(0), b(q.l));
                       return c;
                   }});
    out.push_back({"d b[rp^i-p^2+(k+1)p]", "ikr",
                   [](auto& q, long p) { return q.i >= 2 && q.k < p - 1 && q.r >= 1 && q.r <= p - 1; },
                   [](auto& q, long p) {
                       long base = q.r * pw(p, q.i) - p * p;
                       long n = base - p * p + (q.k + 2) * p;
                       Congruence c{Expr(p), Expr(p), 2 * n - 1};
                       c.source.add(1, "1", b(base + (q.k + 1) * p));
                       c.target.add(1, a0(), ab(base + (q.k + 1) * p - 1));
                       for (long j = 1; j <= p - 1; ++j)
                           c.target.add(1, l1(j - 1), b(base + (q.k - j + 1) * p + j));
                       c.target.add(q.k + 2, l1(p - 1), b(n));
                       return c;
                   }});
    out.push_back({"d ab[p^{i+1}+(k-1)p^i+(p-1)p^{i-1}-1]", "ik",
                   [](auto& q, long p) { return q.i >= 1 && q.k >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1);
                       long n = q.k * pi + (p - 1) * pm - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(pi * p + (q.k - 1) * pi + (p - 1) * pm - 1));
                       c.target.add(1, l1(pm - 1), ab(pi * p + (q.k - 2) * pi + pi - 1)).add(-q.k, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[(m+1)p^{i+1}+(p-1)p^{i-1}-1]", "im",
                   [](auto& q, long p) { return q.i >= 1 && q.m >= 1 && q.m <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1);
                       long n = q.m * pi * p + pi + (p - 1) * pm - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab((q.m + 1) * pi * p + (p - 1) * pm - 1));
                       c.target.add(1, l1(pm - 1), ab((q.m + 1) * pi * p - 1)).add(-1, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[kp^j-p^{i+1}+u]", "ijk",
                   [](auto& q, long p) { return q.i >= 1 && q.j >= q.i + 2 && q.k >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1), pj = pw(p, q.j);
                       long u = (p - 1) * pm - 1;
                       long n = q.k * pj - pi * p * p + (p - 2) * pi * p + pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(q.k * pj - pi * p + u));
                       c.target.add(-1, l1(pm - 1), ab(q.k * pj - pi * p - 1)).add(-1, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[kp^j+u]", "ijk",
                   [](auto& q, long p) { return q.i >= 1 && q.j >= q.i + 2 && q.k >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1), pj = pw(p, q.j);
                       long u = (p - 1) * pm - 1;
                       long n = q.k * pj - pi * p + pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(q.k * pj + u));
                       c.target.add(-1, l1(pm - 1), ab(q.k * pj - 1)).add(1, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[p^{i+1}+mp^i-1]", "im", [](auto& q, long p) { return q.m >= 1 && q.m <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long n = (q.m + 1) * pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(pi * p + q.m * pi - 1));
                       c.target.add(q.m, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[(k+1)p^{i+1}+(r-1)p^i+p^i-1]", "ikr",
                   [](auto& q, long p) { return q.k <= p - 2 && q.r >= 1 && q.r <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long n = q.k * pi * p + q.r * pi + pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab((q.k + 1) * pi * p + (q.r - 1) * pi + pi - 1));
                       c.target.add(q.r, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[p^{i+2}+(r-1)p^i+p^i-1]", "ir", [](auto& q, long p) { return q.r >= 1 && q.r <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long n = pi * p + (q.r - 1) * pi + pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(pi * p * p + (q.r - 1) * pi + pi - 1));
                       for (long j = 1; j <= p - q.r; ++j)
                           c.target.add(binom(q.r + j - 1, j), l1(j * pi - 1),
                                        ab((p - 1) * pi * p + (q.r - 1 + j) * pi + pi - 1));
                       c.target.add(1, l1(pi * p - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[lp^j-p^{i+1}+(r-1)p^i+u]", "ijlr",
                   [](auto& q, long p) {
                       return q.j >= q.i + 2 && q.r >= 1 && q.r <= p - 1 && q.l >= 1 && q.l <= p - 1;
                   },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pj = pw(p, q.j);
                       long u = pi - 1;
                       long n = q.l * pj - pi * p * p + (p - 2) * pi * p + q.r * pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, "1", ab(q.l * pj - pi * p + (q.r - 1) * pi + u));
                       c.target.add(q.r, l1(pi - 1), ab(n));
                       return c;
                   }});
    out.push_back({"d ab[lp^j-p^{i+2}+(k+1)p^{i+1}+(p-1)p^i-1]", "ijkl",
                   [](auto& q, long p) { return q.j >= q.i + 2 && q.k <= p - 1 && q.l >= 1 && q.l <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pj = pw(p, q.j);
                       long u3 = q.l * pj - 2 * pi * p * p + (q.k + 2) * pi * p + (p - 1) * pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * u3};
                       c.source.add(1, "1", ab(q.l * pj - pi * p * p + (q.k + 1) * pi * p + (p - 1) * pi - 1));
                       c.target.add(-1, l1(pi - 1), ab(q.l * pj - pi * p * p + q.k * pi * p + pi * p - 1))
                           .add(q.k + 2, l1(pi * p - 1), ab(u3));
                       return c;
                   }});
    out.push_back({"d a0 b[t]", "m", [](auto& q, long) { return q.m >= 1; },
                   [](auto& q, long p) {
                       Congruence c{Expr(p), Expr(p), 2 * (q.m - 1)};
                       c.source.add(1, a0(), b(q.m));
                       c.target.add(1, w(a0(), a0()), ab(q.m - 1));
                       return c;
                   }});
    out.push_back({"d (a0 ab[mp+l] + ...)", "lm", [](auto& q, long p) { return q.l < p - 2 && q.m >= 2; },
                   [](auto& q, long p) {
                       long n = (q.m - 2) * p + q.l + 2;
                       long c2 = binom(q.l + 2, 2);
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, a0(), ab(q.m * p + q.l))
                           .add(q.l + 1, l0(0), ab((q.m - 1) * p + q.l + 1))
                           .add(c2, l0(1), ab(n));
                       c.target.add(-c2, w(l1(1), a0()), ab(n));
                       return c;
                   }});
    out.push_back({"d a0 ab[(mp+k)p^i-1]", "ikm", [](auto& q, long p) { return q.i >= 1 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long k1 = ((q.m - 1) * p + q.k + 1) * pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * k1};
                       c.source.add(1, a0(), ab((q.m * p + q.k) * pi - 1));
                       c.target.add(q.k + 1, w(a0(), l1(pi - 1)), ab(k1));
                       return c;
                   }});
    out.push_back({"d (a0 ab[(mp+k)p^i-2] + l0_0 ab[(mp+k)p^i-p-1])", "ikm",
                   [](auto& q, long p) { return q.i >= 1 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long k2 = ((q.m - 1) * p + q.k + 1) * pi - p + p - 2;
                       Congruence c{Expr(p), Expr(p), 2 * k2};
                       c.source.add(1, a0(), ab((q.m * p + q.k) * pi - p + p - 2))
                           .add(1, l0(0), ab((q.m * p + q.k) * pi - p - 1));
                       c.target.add(q.k + 1, w(a0(), l1(pi - 1)), ab(k2));
                       return c;
                   }});
    out.push_back({"d (h0 b[kp+l] + (l+1)/2 l1_1 b[(k-1)p+l+1])", "kl",
                   [](auto& q, long p) { return q.k >= 1 && q.l != 1 && q.l <= p - 1; },
                   [](auto& q, long p) {
                       long n = (q.k - 1) * p + q.l;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(0), b(q.k * p + q.l)).add(q.l + 1, 2, l1(1), b(n + 1));
                       c.target.add(q.l - 1, 2, w(l1(1), a0()), ab(n));
                       return c;
                   }});
    out.push_back({"d (sum l1_j b[s-p^2+(k-j)p+j+1] + C_1 + ...)", "ikmr",
                   [](auto& q, long p) { return q.i >= 2 && q.m >= 1 && q.r <= p - 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i);
                       long s = (q.m * p + q.r) * pi;
                       long n = ((q.m - 1) * p + q.r + 1) * pi - p * p + q.k * p + 1;
                       Congruence c{Expr(p), Expr(p), 2 * n - 1};
                       for (long j = 0; j <= p - 1; ++j)
                           c.source.add(1, l1(j), b(s - p * p + (q.k - j) * p + j + 1));
                       for (long nn = 1; nn <= p - q.k - 1; ++nn)
                           for (long l = 0; l <= p - 1; ++l)
                               c.source.add(binom(p + q.k + nn - l, nn), l1(nn * p + l),
                                            b(s - (nn + 1) * p * p + (q.k + nn - l) * p + l + 1));
                       c.target.add(-(q.r + 1), w(l1(0), l1(pi - 1)), b(n));
                       return c;
                   }});
    out.push_back({"d h_i ab[(mp+k)p^{i-1}+p^{i-1}-1]", "ikm",
                   [](auto& q, long p) { return q.i >= 1 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1);
                       long n = ((q.m - 2) * p + q.k + 2) * pm + pm - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(pi - 1), ab((q.m * p + q.k) * pm + pm - 1));
                       c.target.add(-(q.k + 1), w(l1(pi - 1), l1(pm - 1)), ab(((q.m - 1) * p + q.k + 1) * pm + pm - 1))
                           .add(-binom(q.k + 2, 2), w(l1(pi - 1), l1(2 * pm - 1)), ab(n));
                       return c;
                   }});
    out.push_back({"d (2 h_i ab[...] + (k+1) l1_{2p^i-1} ab[...])", "ikm",
                   [](auto& q, long p) { return q.i >= 1 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1);
                       long s = (q.m - 1) * p + q.k;
                       long n = s * pi + pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(2, l1(pi - 1), ab((q.m * p + q.k) * pi + (p - 1) * pm - 1))
                           .add(q.k + 1, l1(2 * pi - 1), ab((s + 1) * pi + (p - 1) * pm - 1));
                       c.target.add(q.k + 1, w(l1(2 * pi - 1), l1(pm - 1)), ab(n))
                           .add(2 * q.k, w(l1(pi - 1), l1(pi + pm - 1)), ab(n));
                       return c;
                   }});
    out.push_back({"d (h_i ab[(mp+k)p^{i+2}+rp^{i+1}+p^i+u] + ...)", "ikmr",
                   [](auto& q, long p) { return q.i >= 1 && q.k <= p - 1 && q.r <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1);
                       long P1 = pi * p, P2 = pi * p * p;
                       long u = (p - 1) * pm - 1;
                       long mk = q.m * p + q.k;
                       long n = (mk - 2) * P2 + (q.r + 2) * P1 + pi + u;
                       long c2 = binom(q.r + 2, 2);
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(pi - 1), ab(mk * P2 + q.r * P1 + pi + u));
                       for (long j = 2; j <= p - 1; ++j)
                           c.source.add(1, l1(j * pi - 1), ab(mk * P2 + (q.r - j + 1) * P1 + j * pi + u));
                       c.source.add(q.r + 1, l1(P1 + pi - 1), ab((mk - 1) * P2 + (q.r + 1) * P1 + pi + u))
                           .add(c2, l1(2 * P1 + pi - 1), ab(n));
                       c.target.add(c2, w(l1(2 * P1 - 1), l1(pi - 1)), ab(n));
                       return c;
                   }});
    out.push_back({"d (h_i ab[v'-p^{i+2}+(p-2)p^{i+1}+p^i+u] + ...)", "ijkm",
                   [](auto& q, long p) { return q.i >= 1 && q.j >= q.i + 2 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1), pj = pw(p, q.j);
                       long P1 = pi * p, P2 = pi * p * p;
                       long u = (p - 1) * pm - 1;
                       long v = (q.m * p + q.k) * pj;
                       long u1 = ((q.m - 1) * p + q.k + 1) * pj - P2 + (p - 2) * P1 + pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * u1};
                       c.source.add(1, l1(pi - 1), ab(v - P2 + (p - 2) * P1 + pi + u));
                       for (long l = 2; l <= p - 1; ++l)
                           c.source.add(1, l1(l * pi - 1), ab(v - P2 + (p - 1 - l) * P1 + l * pi + u));
                       c.source.add(-1, l1(P1 + pi - 1), ab(v - 2 * P2 + (p - 1) * P1 + pi + u));
                       c.target.add(-(q.k + 1), w(l1(pi - 1), l1(pj - 1)), ab(u1));
                       return c;
                   }});
    out.push_back({"d (h_i ab[v-p^{i+1}+p^i+u] + ...)", "ijkm",
                   [](auto& q, long p) { return q.i >= 1 && q.j >= q.i + 2 && q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), pm = pw(p, q.i - 1), pj = pw(p, q.j);
                       long P1 = pi * p;
                       long u = (p - 1) * pm - 1;
                       long v = (q.m * p + q.k) * pj;
                       long u2 = ((q.m - 1) * p + q.k + 1) * pj - P1 + pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * u2};
                       c.source.add(1, l1(pi - 1), ab(v - P1 + pi + u));
                       for (long l = 2; l <= p - 1; ++l)
                           c.source.add(1, l1(l * pi - 1), ab(v - l * P1 + l * pi + u));
                       c.target.add(-(q.k + 1), w(l1(pi - 1), l1(pj - 1)), ab(u2));
                       return c;
                   }});
    out.push_back({"d (h_i ab[(mp+k)p^{i+1}+p^i-1] + sum 1/j ...)", "ikm",
                   [](auto& q, long p) { return q.m >= 1 && q.k <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), P1 = pi * p;
                       long n = ((q.m - 1) * p + q.k + 2) * P1 - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(pi - 1), ab((q.m * p + q.k) * P1 + pi - 1));
                       for (long j = 2; j <= p - 1; ++j)
                           c.source.add(1, j, l1(j * pi - 1), ab((q.m * p + q.k - j + 1) * P1 + (j - 1) * pi + pi - 1));
                       for (long j = 1; j <= p - 1; ++j)
                           c.target.add(j % 2 == 1 ? 1 : -1, j, w(l1((p - j) * pi - 1), l1(j * pi - 1)), ab(n));
                       return c;
                   }});
    out.push_back({"d (h_i ab[mp^{i+2}+kp^{i+1}+rp^i+p^i-1] + ...)", "ikmr",
                   [](auto& q, long p) { return q.m >= 1 && q.k <= p - 1 && q.r <= p - 1; },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), P1 = pi * p, P2 = P1 * p;
                       long W = (q.m - 1) * P2 + q.k * P1 + (q.r + 1) * pi + pi - 1;
                       Congruence c{Expr(p), Expr(p), 2 * W};
                       c.source.add(1, l1(pi - 1), ab(q.m * P2 + q.k * P1 + q.r * pi + pi - 1));
                       for (long j = 2; j <= p - q.r; ++j)
                           c.source.add(binom(q.r + j - 1, j - 1), j, l1(j * pi - 1),
                                        ab(q.m * P2 + (q.k - j + 1) * P1 + (q.r + j) * pi - 1));
                       c.source.add(q.k + 1, l1(P1 + pi - 1), ab((q.m - 1) * P2 + (q.k + 1) * P1 + q.r * pi + pi - 1))
                           .add(q.k * (q.r + 1), 2, l1(P1 + 2 * pi - 1), ab(W));
                       c.target.add(q.k * (q.r + 1), 2, w(l1(P1 - 1), l1(2 * pi - 1)), ab(W))
                           .add(-(q.r + 1), w(l1(P1 + pi - 1), l1(pi - 1)), ab(W));
                       return c;
                   }});
    out.push_back({"d (h_i ab[(mp+l)p^j-p^{i+2}+(p-2)p^{i+1}+rp^i+u] + ...)", "ijlmr",
                   [](auto& q, long p) {
                       return q.j >= q.i + 2 && q.r >= 1 && q.r <= p - 1 && q.m >= 1 && q.l <= p - 1;
                   },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), P1 = pi * p, P2 = P1 * p, pj = pw(p, q.j);
                       long u = pi - 1;
                       long v = (q.m * p + q.l) * pj;
                       long n = ((q.m - 1) * p + q.l + 1) * pj - P2 + (p - 2) * P1 + q.r * pi + u;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(pi - 1), ab(v - P2 + (p - 2) * P1 + q.r * pi + u));
                       for (long jj = 2; jj <= p - q.r; ++jj)
                           c.source.add(binom(q.r + jj - 1, jj - 1), jj, l1(jj * pi - 1),
                                        ab(v - P2 + (p - 1 - jj) * P1 + (q.r + jj - 1) * pi + u));
                       c.source.add(-1, l1(P1 + pi - 1), ab(v - 2 * P2 + (p - 1) * P1 + q.r * pi + u))
                           .add(-(q.r + 1), l1(P1 + 2 * pi - 1), ab(v - 2 * P2 + (p - 2) * P1 + (q.r + 1) * pi + u));
                       c.target.add(-(q.l + 1), w(l1(pi - 1), l1(pj - 1)), ab(n));
                       return c;
                   }});
    out.push_back({"d (h_i ab[(mp+l)p^j-p^{i+2}+kp^{i+1}+p^{i+1}-1] + ...)", "ijklm",
                   [](auto& q, long p) {
                       return q.j >= q.i + 2 && q.m >= 1 && q.k != p - 2 && q.k <= p - 1 && q.l <= p - 1;
                   },
                   [](auto& q, long p) {
                       long pi = pw(p, q.i), P1 = pi * p, P2 = P1 * p, pj = pw(p, q.j);
                       long v = (q.m * p + q.l) * pj;
                       long n = ((q.m - 1) * p + q.l + 1) * pj - P2 + q.k * P1 + P1 - 1;
                       Congruence c{Expr(p), Expr(p), 2 * n};
                       c.source.add(1, l1(pi - 1), ab(v - P2 + q.k * P1 + P1 - 1))
                           .add(q.k + 1, l1(P1 + pi - 1), ab(v - 2 * P2 + (q.k + 1) * P1 + P1 - 1));
                       c.target.add(-(q.l + 1), w(l1(pi - 1), l1(pj - 1)), ab(n));
                       return c;
                   }});
    return out;
}

ChainElement parse_or_zero(const Complex& cx, const Expr& e)
{
    if (e.text().empty())
        return cx.zero();
    return parse_chain(cx, e.text());
}

}  // namespace

std::vector<FixtureResult> run_fixtures(const Complex& cx, int tmax)
{
    if (!cx.prime().odd() || cx.module().kind() != ModuleKind::P)
        throw Error("the congruence fixtures live in the complex of P at an odd prime");
    const long p = cx.p();
    std::vector<FixtureResult> out;
    for (const Fixture& f : fixtures()) {
        FixtureResult res;
        res.name = f.name;
        auto uses = [&](char c) { return f.params.find(c) != std::string::npos; };
        auto range = [&](char c, long hi) { return uses(c) ? hi : 0L; };
        FixtureParams q;
        for (q.i = 0; q.i <= range('i', 4); ++q.i)
            for (q.j = 0; q.j <= range('j', 5); ++q.j)
                for (q.k = 0; q.k <= range('k', p - 1); ++q.k)
                    for (q.l = 0; q.l <= range('l', p - 1); ++q.l)
                        for (q.m = 0; q.m <= range('m', 3); ++q.m)
                            for (q.r = 0; q.r <= range('r', p - 1); ++q.r) {
                                if (!f.applies(q, p))
                                    continue;
                                ChainElement x, y;
                                long n = 0;
                                try {
                                    Congruence c = f.build(q, p);
                                    x = parse_or_zero(cx, c.source);
                                    y = parse_or_zero(cx, c.target);
                                    n = c.n;
                                } catch (const Inapplicable&) {
                                    continue;
                                } catch (const ParseError&) {
                                    continue;
                                }
                                if (x.empty() || cx.bidegree(x).t > tmax)
                                    continue;
                                ChainElement diff = cx.differential(x);
                                diff.sub(y);
                                ++res.instances;
                                ChainElement residual = cx.truncate(diff, int(n));
                                if (residual.empty()) {
                                    ++res.held;
                                    continue;
                                }
                                res.failures.push_back(q.describe(f.params));
                                for (Scalar u = 2; u < Scalar(p); ++u) {
                                    ChainElement alt = cx.differential(x);
                                    alt.add(y, cx.prime().neg(u));
                                    if (cx.truncate(alt, int(n)).empty()) {
                                        ++res.held_up_to_unit;
                                        break;
                                    }
                                }
                                if (res.residual.empty())
                                    res.residual = "X = " + format_chain(cx, x) + "; d(X) - Y = " +
                                                   format_chain(cx, residual) + " above F^" + std::to_string(n);
                            }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace lzext
