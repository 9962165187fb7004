#include "lzext/catalog.hpp"

#include <algorithm>
#include <cstdlib>

#include "lzext/text.hpp"

namespace lzext {

namespace {

std::string l1(long n) { return "l1_" + std::to_string(n); }
std::string l0(long n) { return "l0_" + std::to_string(n); }
std::string ab(long t) { return "ab[" + std::to_string(t) + "]"; }

long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

/* (-1)^{j+1}/j with an extra integer factor, as a term prefix. */
std::string alternating(int j, int factor = 1)
{
    std::string sign = (j % 2 == 1) == (factor > 0) ? " + " : " - ";
    return sign + std::to_string(std::abs(factor)) + "/" + std::to_string(j) + "*";
}

ChainElement concat(const Complex& cx, const ChainElement& left, const ChainElement& right)
{
    const Prime& F = cx.prime();
    ChainElement::Terms terms;
    for (auto& [a, x] : left)
        for (auto& [b, y] : right)
            terms.emplace_back(ChainKey{a.lambda * b.lambda, b.h}, F.mul(x, y));
    return ChainElement::collect(cx.p(), std::move(terms));
}

ChainElement lambda_only(const Complex& cx, const std::string& text)
{
    return parse_chain_raw(cx, text);
}

}  // namespace

ChainElement raw_power(const Complex& cx, const ChainElement& raw, int times)
{
    ChainElement cur = raw;
    Monomial img;
    for (int n = 0; n < times; ++n) {
        ChainElement::Terms terms;
        for (auto& [k, c] : cur) {
            if (!cx.algebra().power_op(k.lambda, img))
                continue;
            auto h = cx.module().theta(k.h);
            if (!h)
                continue;
            terms.emplace_back(ChainKey{img, *h}, c);
        }
        cur = ChainElement::collect(cx.p(), std::move(terms));
    }
    return cur;
}

static CatalogEntry finish_entry(const Complex& cx, std::string family, std::string name, ChainElement raw)
{
    CatalogEntry e;
    e.family = std::move(family);
    e.name = std::move(name);
    if (raw.empty())
        throw Error("catalog entry " + e.name + " is zero as a raw chain");
    const ChainKey& k = raw.begin()->first;
    e.bidegree = {k.lambda.length(), cx.total_degree(k)};
    e.cycle = cx.normalize(raw);
    e.raw = std::move(raw);
    return e;
}

CatalogEntry make_entry(const Complex& cx, std::string family, std::string name, const std::string& text, int power)
{
    return finish_entry(cx, std::move(family), std::move(name), raw_power(cx, parse_chain_raw(cx, text), power));
}

std::vector<CatalogEntry> ext0_generators(const Complex& cx, int tmax)
{
    const long p = cx.p();
    std::vector<CatalogEntry> out;
    for (int i = 0; ipow(p, i) <= tmax; ++i) {
        long q = ipow(p, i);
        if (2 * (p - 1) * q - 1 <= tmax)
            out.push_back(make_entry(cx, "hhat", "hhat_" + std::to_string(i), ab((p - 1) * q - 1)));
        for (long k = 1; k < p - 1; ++k)
            if (2 * k * q - 1 <= tmax)
                out.push_back(make_entry(cx, "hhat(k)", "hhat_" + std::to_string(i) + "(" + std::to_string(k) + ")",
                                         ab(k * q - 1)));
    }
    return out;
}

std::vector<CatalogEntry> ext1_families(const Complex& cx, int tmax)
{
    const long p = cx.p();
    std::vector<CatalogEntry> out;
    auto add = [&](CatalogEntry e, std::vector<int> params) {
        if (e.bidegree.t <= tmax) {
            e.params = std::move(params);
            out.push_back(std::move(e));
        }
    };
    auto is = [](long v) { return std::to_string(v); };
    int top = 0;
    while (ipow(p, top + 1) <= tmax)
        ++top;
    for (int i = 1; i <= top; ++i) {
        long q = ipow(p, i);
        add(make_entry(cx, "a0hhat", "a0*hhat_" + is(i), l0(-1) + "|" + ab((p - 1) * q - 1)), {i});
        for (long k = 1; k < p - 1; ++k)
            add(make_entry(cx, "a0hhat(k)", "a0*hhat_" + is(i) + "(" + is(k) + ")", l0(-1) + "|" + ab(k * q - 1)),
                {i, int(k)});
    }
    for (long l = 0; l < p - 2; ++l)
        add(make_entry(cx, "ahat", "ahat(" + is(l) + ")",
                       l0(-1) + "|" + ab(p + l) + " + " + is(l + 1) + "*" + l0(0) + "|" + ab(l + 1)),
            {int(l)});
    for (int i = 0; i <= top; ++i) {
        long qi = ipow(p, i);
        add(make_entry(cx, "hhhat(1)", "h_" + is(i) + "*hhat_" + is(i) + "(1)", l1(qi - 1) + "|" + ab(qi - 1)), {i});
        for (int j = 0; j <= top; ++j) {
            if (j == i || j == i + 1)
                continue;
            long qj = ipow(p, j);
            add(make_entry(cx, "hhhat", "h_" + is(i) + "*hhat_" + is(j), l1(qi - 1) + "|" + ab((p - 1) * qj - 1)),
                {i, j});
            for (long k = 1; k < p - 1; ++k)
                add(make_entry(cx, "hhhat(k)", "h_" + is(i) + "*hhat_" + is(j) + "(" + is(k) + ")",
                               l1(qi - 1) + "|" + ab(k * qj - 1)),
                    {i, j, int(k)});
        }
    }
    for (int i = 1; i <= top + 1; ++i)
        for (long k = 1; k <= p - 1; ++k)
            add(make_entry(cx, "dhat", "dhat_" + is(i) + "(" + is(k) + ")", l1(p - 1) + "|" + ab(k * p + p - 2), i - 1),
                {i, int(k)});
    for (int i = 0; i <= top; ++i) {
        for (long k = 1; k < p - 1; ++k) {
            std::string text;
            for (long j = 0; j <= k; ++j)
                text += " + 1/" + is(j + 1) + "*" + l1(j) + "|" + ab((k - j) * p + j);
            add(make_entry(cx, "khat", "khat_" + is(i) + "(" + is(k) + ")", text, i), {i, int(k)});
        }
        for (long r = 1; r < p - 1; ++r) {
            std::string text;
            for (long j = 0; j <= p - 1 - r; ++j) {
                Scalar c = cx.prime().binom(r + j, j);
                text += " + " + is(c) + "/" + is(j + 1) + "*" + l1(j) + "|" + ab((p - j - 1) * p + r + j);
            }
            add(make_entry(cx, "phat", "phat_" + is(i) + "(" + is(r) + ")", text, i), {i, int(r)});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CatalogEntry& a, const CatalogEntry& b) { return a.bidegree.t < b.bidegree.t; });
    return out;
}

std::vector<CatalogEntry> ext1_relations(const Complex& cx, int tmax)
{
    const long p = cx.p();
    std::vector<CatalogEntry> out;
    auto is = [](long v) { return std::to_string(v); };
    auto add = [&](CatalogEntry e) {
        if (e.bidegree.t <= tmax)
            out.push_back(std::move(e));
    };
    for (int i = 0; ipow(p, i) <= tmax; ++i) {
        long qi = ipow(p, i);
        long qn = qi * p;
        add(make_entry(cx, "h_i*hhat_{i+1}", "h_" + is(i) + "*hhat_" + is(i + 1), l1(qi - 1) + "|" + ab((p - 1) * qn - 1)));
        for (long k = 1; k < p - 1; ++k)
            add(make_entry(cx, "h_i*hhat_{i+1}(k)", "h_" + is(i) + "*hhat_" + is(i + 1) + "(" + is(k) + ")",
                           l1(qi - 1) + "|" + ab(k * qn - 1)));
        add(make_entry(cx, "h_i*hhat_i", "h_" + is(i) + "*hhat_" + is(i), l1(qi - 1) + "|" + ab((p - 1) * qi - 1)));
        for (long k = 2; k < p - 1; ++k)
            add(make_entry(cx, "h_i*hhat_i(k)", "h_" + is(i) + "*hhat_" + is(i) + "(" + is(k) + ")",
                           l1(qi - 1) + "|" + ab(k * qi - 1)));
    }
    add(make_entry(cx, "a0*hhat_0", "a0*hhat_0", l0(-1) + "|" + ab(p - 2)));
    for (long k = 1; k < p - 1; ++k)
        add(make_entry(cx, "a0*hhat_0(k)", "a0*hhat_0(" + is(k) + ")", l0(-1) + "|" + ab(k - 1)));
    return out;
}

QElement ext1_expected_image(const DyerLashof& dl, const CatalogEntry& e)
{
    const Complex& cx = dl.complex();
    const Prime& F = cx.prime();
    const long p = cx.p();
    auto q = [&](long i, long t) {
        return cx.element(ChainKey{Monomial{Gen(1, int(i))}, ModuleBasis{1, int(t)}});
    };
    const auto& a = e.params;
    if (e.family == "hhhat(1)")
        return q(ipow(p, a[0]), ipow(p, a[0]) - 1);
    if (e.family == "hhhat" && a[1] < a[0])
        return q(ipow(p, a[0]), (p - 1) * ipow(p, a[1]) - 1);
    if (e.family == "hhhat(k)" && a[1] < a[0])
        return q(ipow(p, a[0]), a[2] * ipow(p, a[1]) - 1);
    if (e.family == "khat") {
        QElement x = q(a[1] + 1, a[1]).scaled(F.inverse(Scalar(a[1] + 1)));
        for (int n = 0; n < a[0]; ++n)
            x = dl.power_op(x);
        return x;
    }
    return cx.zero();
}

std::string to_string(Mechanism m)
{
    switch (m) {
    case Mechanism::Excess: return "excess";
    case Mechanism::Relation: return "relation";
    case Mechanism::ExcessAndRelation: return "excess+relation";
    case Mechanism::NonZero: return "nonzero";
    }
    return "?";
}

bool mechanism_matches(Mechanism m, const LZEvaluation& ev)
{
    const Provenance& pv = ev.provenance;
    switch (m) {
    case Mechanism::Excess: return ev.zero && pv.excess;
    case Mechanism::Relation: return ev.zero && pv.relation;
    case Mechanism::ExcessAndRelation: return ev.zero && pv.excess && pv.relation;
    case Mechanism::NonZero: return !ev.zero;
    }
    return false;
}

std::string l_text(int p)
{
    std::string s;
    for (int j = 1; j <= p - 1; ++j)
        s += alternating(j) + l1(p - j - 1) + " " + l1(j - 1);
    return s;
}

std::string m_text(int p)
{
    const long P = p;
    std::string s;
    for (int j = 1; j <= p - 1; ++j) {
        s += alternating(j) + l1(j * P - 1) + " " + l1(P * P - j * P - 1) + " " + l1(2 * P - 1);
        s += alternating(j, -2) + l1(P * P - 1) + " " + l1(j - 1) + " " + l1(2 * P - j - 1);
        s += alternating(j, -2) + l1(P * P - 1) + " " + l1(P + j - 1) + " " + l1(P - j - 1);
    }
    return s;
}

std::string n_text(int p)
{
    const long P = p;
    std::string s;
    for (int j = 1; j <= p - 1; ++j) {
        s += alternating(j, 2) + l1(j * P - 1) + " " + l1(2 * P * P - j * P - 1) + " " + l1(P - 1);
        s += alternating(j, 2) + l1(P * P + j * P - 1) + " " + l1(P * P - j * P - 1) + " " + l1(P - 1);
        s += alternating(j, -1) + l1(2 * P * P - 1) + " " + l1(j - 1) + " " + l1(P - j - 1);
    }
    return s;
}

std::vector<RankThreeFamily> rank3_families(const Complex& cx, int tmax, int max_instances)
{
    const long p = cx.p();
    auto is = [](long v) { return std::to_string(v); };
    int top = 0;
    while (ipow(p, top + 1) <= tmax)
        ++top;
    std::vector<RankThreeFamily> out;
    auto family = [&](int number, std::string name, Mechanism m, bool allowed) -> RankThreeFamily* {
        if (!allowed)
            return nullptr;
        out.push_back(RankThreeFamily{number, std::move(name), int(p), m, {}, {}});
        return &out.back();
    };
    auto add = [&](RankThreeFamily* f, const std::string& name, ChainElement raw) {
        if (!f || raw.empty() || cx.total_degree(raw.begin()->first) > tmax)
            return;
        f->instances.push_back(finish_entry(cx, is(f->number), name, std::move(raw)));
    };
    auto powered = [&](ChainElement x, int power) {
        for (int n = 0; n < power && !x.empty(); ++n) {
            if (cx.total_degree(x.begin()->first) > tmax)
                return cx.zero();
            x = raw_power(cx, x);
        }
        return x;
    };
    auto text = [&](const std::string& t, int power = 0) { return powered(lambda_only(cx, t), power); };
    const std::string a0 = l0(-1);
    const std::string a0a0 = a0 + " " + a0;

    RankThreeFamily* f = family(1, "h_i h_j h_k", Mechanism::Excess, true);
    for (int i = 0; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j)
            for (int k = j + 2; k <= top; ++k)
                add(f, "h_" + is(i) + "h_" + is(j) + "h_" + is(k),
                    text(l1(ipow(p, i) - 1) + " " + l1(ipow(p, j) - 1) + " " + l1(ipow(p, k) - 1)));

    f = family(2, "a0 h_i h_j", Mechanism::Excess, true);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j)
            add(f, "a0h_" + is(i) + "h_" + is(j), text(l1(ipow(p, i) - 1) + " " + l1(ipow(p, j) - 1) + " " + a0));

    f = family(3, "a0^2 h_i", Mechanism::Relation, true);
    for (int i = 1; i <= top; ++i)
        add(f, "a0^2h_" + is(i), text(l1(ipow(p, i) - 1) + " " + a0a0));

    f = family(4, "a0^3", Mechanism::NonZero, true);
    add(f, "a0^3", text(a0 + " " + a0a0));

    const ChainElement L0 = lambda_only(cx, l_text(int(p)));
    f = family(5, "lambda_i h_j", Mechanism::Excess, true);
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j)
            if (j != i + 2)
                add(f, "lambdatilde_" + is(i) + "h_" + is(j),
                    concat(cx, powered(L0, i), text(l1(ipow(p, j) - 1))));

    f = family(6, "lambda_i a0", Mechanism::Relation, true);
    for (int i = 0; i <= top; ++i)
        add(f, "lambdatilde_" + is(i) + "a0", concat(cx, powered(L0, i), text(a0)));

    f = family(7, "h_{i;1,2} h_j", Mechanism::Excess, true);
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j)
            if (j != i + 2 && j != i && j != i - 1)
                add(f, "h_" + is(i) + ";1,2h_" + is(j),
                    text(l1(ipow(p, i + 1) - 1) + " " + l1(2 * ipow(p, i) - 1) + " " + l1(ipow(p, j) - 1)));

    f = family(8, "h_{i;1,2} a0", Mechanism::Excess, true);
    for (int i = 1; i <= top; ++i)
        add(f, "h_" + is(i) + ";1,2a0", text(l1(ipow(p, i + 1) - 1) + " " + l1(2 * ipow(p, i) - 1) + " " + a0));

    f = family(9, "h_{i;2,1} h_j", Mechanism::Relation, true);
    for (int i = 0; i <= top; ++i)
        f->factors.push_back(text(l1(2 * ipow(p, i + 1) - 1) + " " + l1(ipow(p, i) - 1)));
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j)
            if (j != i + 2 && j != i + 1 && j != i - 1 && j != i)
                add(f, "h_" + is(i) + ";2,1h_" + is(j),
                    text(l1(2 * ipow(p, i + 1) - 1) + " " + l1(ipow(p, i) - 1) + " " + l1(ipow(p, j) - 1)));

    f = family(10, "h_{i;2,1} a0", Mechanism::Relation, true);
    for (int i = 1; i <= top; ++i)
        f->factors.push_back(text(l1(2 * ipow(p, i + 1) - 1) + " " + l1(ipow(p, i) - 1)));
    for (int i = 1; i <= top; ++i)
        add(f, "h_" + is(i) + ";2,1a0", text(l1(2 * ipow(p, i + 1) - 1) + " " + l1(ipow(p, i) - 1) + " " + a0));

    const ChainElement rho = text(l1(1) + " " + a0);
    f = family(11, "h_j rho", Mechanism::Relation, true);
    f->factors.push_back(rho);
    for (int j = 2; j <= top; ++j)
        add(f, "h_" + is(j) + "rho", text(l1(ipow(p, j) - 1) + " " + l1(1) + " " + a0));

    const ChainElement h1h0 = text(l1(2 * p - 1) + " " + l1(0));
    f = family(12, "h_{i;3,2,1}", Mechanism::Relation, p != 3);
    if (f) {
        f->factors.push_back(h1h0);
        for (int i = 0; i <= top; ++i)
            add(f, "h_" + is(i) + ";3,2,1", text(l1(3 * p * p - 1) + " " + l1(2 * p - 1) + " " + l1(0), i));
    }

    f = family(13, "h'_{3,2,1}", Mechanism::Relation, p != 3);
    if (f) {
        f->factors.push_back(rho);
        add(f, "h'_3,2,1", text(l1(3 * p - 1) + " " + l1(1) + " " + a0));
    }

    f = family(14, "h_{i;2,2,1}", Mechanism::Relation, p == 3);
    if (f) {
        f->factors.push_back(h1h0);
        for (int i = 0; i <= top; ++i)
            add(f, "h_" + is(i) + ";2,2,1", text(l1(2 * p * p * p - 1) + " " + l1(2 * p - 1) + " " + l1(0), i));
    }

    f = family(15, "h'_{2,2,1}", Mechanism::Relation, p == 3);
    if (f) {
        f->factors.push_back(rho);
        add(f, "h'_2,2,1", text(l1(2 * p * p - 1) + " " + l1(1) + " " + a0));
    }

    f = family(16, "h_{i;1,3,1}", Mechanism::Excess, p != 3);
    if (f) {
        f->factors.push_back(text(l1(p * p - 1) + " " + l1(3 * p - 1) + " " + l1(0)));
        for (int i = 0; i <= top; ++i)
            add(f, "h_" + is(i) + ";1,3,1", text(l1(p * p - 1) + " " + l1(3 * p - 1) + " " + l1(0), i));
    }

    f = family(17, "h'_{1,3,1}", Mechanism::Excess, p != 3);
    if (f)
        add(f, "h'_1,3,1", text(l1(p - 1) + " " + l1(2) + " " + a0));

    f = family(18, "h_{i;2,1,2}", Mechanism::Excess, true);
    f->factors.push_back(text(l1(p - 1) + " " + l1(1)));
    for (int i = 0; i <= top; ++i)
        add(f, "h_" + is(i) + ";2,1,2", text(l1(2 * p * p - 1) + " " + l1(p - 1) + " " + l1(1), i));

    f = family(19, "h_{i;1,2,3}", Mechanism::Excess, p != 3);
    if (f) {
        f->factors.push_back(text(l1(p * p - 1) + " " + l1(2 * p - 1) + " " + l1(2)));
        for (int i = 0; i <= top; ++i)
            add(f, "h_" + is(i) + ";1,2,3", text(l1(p * p - 1) + " " + l1(2 * p - 1) + " " + l1(2), i));
    }

    f = family(20, "rho_3", Mechanism::Relation, p != 3);
    if (f)
        add(f, "rho_3", text(l1(2) + " " + a0a0));

    f = family(21, "rho'_3", Mechanism::Relation, p == 3);
    if (f)
        add(f, "rho'_3", text(l1(5) + " " + a0a0));

    f = family(22, "f_i", Mechanism::Excess, true);
    f->factors.push_back(text(m_text(int(p))));
    for (int i = 1; i <= top + 1; ++i)
        add(f, "f_" + is(i), text(m_text(int(p)), i - 1));

    f = family(23, "g_i", Mechanism::ExcessAndRelation, true);
    f->factors.push_back(text(n_text(int(p))));
    for (int i = 1; i <= top + 1; ++i)
        add(f, "g_" + is(i), text(n_text(int(p)), i - 1));

    for (RankThreeFamily& fam : out) {
        std::stable_sort(fam.instances.begin(), fam.instances.end(),
                         [](const CatalogEntry& a, const CatalogEntry& b) { return a.bidegree.t < b.bidegree.t; });
        if (int(fam.instances.size()) > max_instances)
            fam.instances.resize(std::size_t(max_instances));
        if (fam.factors.empty())
            for (const CatalogEntry& e : fam.instances)
                fam.factors.push_back(e.raw);
    }
    return out;
}

VanishingCycle u0_cycle(const Complex& f2)
{
    CatalogEntry e = make_entry(f2, "U", "U_0",
                                "l_191 l_15 l_15 l_39 l_0 + l_191 l_39 l_15 l_15 l_0 + l_63 l_63 l_47 l_87 l_0"
                                " + l_127 l_31 l_63 l_39 l_0");
    return {e, Mechanism::Relation, lambda_only(f2, "l_15 l_0")};
}

std::vector<VanishingCycle> p2_module_cycles(const Complex& p2)
{
    std::vector<VanishingCycle> out;
    CatalogEntry c = make_entry(p2, "cbar", "cbar_0", "l_3 l_3|b[2]");
    out.push_back({c, Mechanism::Excess, c.raw});
    CatalogEntry a = make_entry(p2, "alphabar", "alphabar_16(0)", "l_7 l_7 l_0|b[2] + l_3 l_3 l_9|b[1] + l_7 l_5 l_3|b[1]");
    out.push_back({a, Mechanism::Excess, a.raw});
    CatalogEntry g = make_entry(p2, "gammabar", "gammabar_63(0)",
                                "l_31 l_7 l_23 l_0|b[2] + l_47 l_3 l_3 l_9|b[1] + l_47 l_9 l_3 l_3|b[1]"
                                " + l_15 l_15 l_11 l_21|b[1] + l_31 l_7 l_15 l_9|b[1] + l_15 l_47 l_0 l_0|b[1]");
    out.push_back({g, Mechanism::Relation, parse_chain_raw(p2, "l_9 l_3 l_3|b[1]")});
    return out;
}

QElement cokernel_witness(const Complex& cx)
{
    const int p = cx.p();
    return parse_q_raw(cx, "bQ[" + std::to_string(p - 1) + "]|b[1] + Q[" + std::to_string(p - 1) + "]|a");
}

}  // namespace lzext
