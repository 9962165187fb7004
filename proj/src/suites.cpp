#include "lzext/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "lzext/catalog.hpp"
#include "lzext/dsquare.hpp"
#include "lzext/dyer_lashof.hpp"
#include "lzext/fixtures.hpp"
#include "lzext/lz.hpp"
#include "lzext/text.hpp"

namespace lzext {

bool SuiteReport::passed() const
{
    if (checks.empty())
        return false;
    for (const SuiteCheck& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string SuiteReport::summary() const
{
    int failed = 0;
    const SuiteCheck* first = nullptr;
    for (const SuiteCheck& c : checks)
        if (!c.passed && ++failed == 1)
            first = &c;
    std::ostringstream out;
    if (!first) {
        out << checks.size() << " checks passed";
    } else {
        out << failed << " of " << checks.size() << " checks failed; first: " << first->name;
        if (!first->detail.empty())
            out << " (" << first->detail << ")";
    }
    return out.str();
}

const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> all = {
        {"ddzero", 1, "d(d(x)) = 0 on every basis vector of Lambda (x) M^#"},
        {"ext0", 2, "Ext^0(P) dimensions and generators, p = 3, 5"},
        {"ext1", 3, "Ext^1(P) dimensions, representatives and relations, p = 3"},
        {"fixtures", 4, "congruences d(X) = Y mod F^n in the complex of P, p = 3"},
        {"rank3", 5, "phi_3 over F_p at p = 3 and the 23 spanning families"},
        {"phi0", 6, "phi_0 on Ext^0(P) is bijective, p = 3"},
        {"phi1", 7, "phi_1 on Ext^1(P): images and cokernel, p = 3"},
        {"power", 8, "power operations on R, their Steenrod action and the commuting square"},
        {"p2", 9, "recovery of the p = 2 results"},
        {"oracles", 10, "brute-force basis counts and Adem confluence"},
    };
    return all;
}

std::unique_ptr<Complex> make_complex(int p, ModuleKind kind)
{
    Prime F(p);
    std::shared_ptr<const RightModule> mod(make_module(kind, F));
    return std::make_unique<Complex>(LambdaAlgebra(F), std::move(mod));
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds_text(double s)
{
    std::ostringstream o;
    o.precision(1);
    o << std::fixed << s << " s";
    return o.str();
}

const char* module_name(ModuleKind k) { return k == ModuleKind::P ? "P" : "Fp"; }

/* Up to `limit` entries, then a count of the rest. */
std::string listing(const std::vector<std::string>& items, std::size_t limit = 6)
{
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i)
        out += (i ? "; " : "") + items[i];
    if (items.size() > limit)
        out += "; +" + std::to_string(items.size() - limit) + " more";
    return out;
}

class Recorder {
public:
    Recorder(SuiteReport& report, const SuiteOptions& options) : report_(report), options_(options) {}

    void add(std::string name, bool passed, std::string detail = {})
    {
        report_.checks.push_back({std::move(name), passed, std::move(detail)});
        if (options_.on_check)
            options_.on_check(report_.checks.back());
    }

    /* Passes when `problems` is empty; otherwise lists them. */
    void expect_none(std::string name, const std::vector<std::string>& problems, std::string ok_detail)
    {
        add(std::move(name), problems.empty(), problems.empty() ? std::move(ok_detail) : listing(problems));
    }

    void runtime(double limit, Clock::time_point t0)
    {
        double s = since(t0);
        add("runtime within " + seconds_text(limit), s <= limit, seconds_text(s));
    }

private:
    SuiteReport& report_;
    const SuiteOptions& options_;
};

std::map<int, std::vector<const CatalogEntry*>> by_stem(const std::vector<CatalogEntry>& entries)
{
    std::map<int, std::vector<const CatalogEntry*>> out;
    for (const CatalogEntry& e : entries)
        out[e.bidegree.t].push_back(&e);
    return out;
}

/* Nonzero, a cycle, and not a boundary. */
std::optional<std::string> class_problem(const Complex& cx, const CatalogEntry& e)
{
    if (e.cycle.empty())
        return e.name + " normalizes to 0";
    if (!cx.differential(e.cycle).empty())
        return e.name + " is not a cycle";
    if (cx.is_boundary(e.cycle))
        return e.name + " is a boundary";
    return std::nullopt;
}

QElement minus_q000(const Complex& cx)
{
    Monomial w{Gen(0, 0), Gen(0, 0), Gen(0, 0)};
    return cx.element(ChainKey{w, ModuleBasis{0, 0}}, cx.prime().neg(1));
}

// ---------------------------------------------------------------- ddzero

void suite_ddzero(Recorder& rec)
{
    struct Range {
        int p;
        ModuleKind kind;
        int smax;
        int tmax;
    };
    const Range ranges[] = {
        {3, ModuleKind::Fp, 4, 120},
        {3, ModuleKind::P, 4, 120},
        {2, ModuleKind::Fp, 5, 70},
        {2, ModuleKind::P, 5, 70},
    };
    const auto t0 = Clock::now();
    for (const Range& r : ranges) {
        auto cx = make_complex(r.p, r.kind);
        const auto t1 = Clock::now();
        DSquareReport rep = check_d_squared(*cx, r.smax, r.tmax);
        std::string detail = std::to_string(rep.checked) + " basis vectors in " + seconds_text(since(t1));
        for (const ChainKey& k : rep.failing)
            detail += "; fails at " + format_chain(*cx, cx->element(k));
        rec.add("d(d(x)) = 0, p=" + std::to_string(r.p) + " M=" + module_name(r.kind) + " s<=" +
                    std::to_string(r.smax) + " t<=" + std::to_string(r.tmax),
                rep.failures == 0 && rep.checked > 0, detail);
    }
    rec.runtime(120, t0);
}

// ---------------------------------------------------------------- ext0

void suite_ext0(Recorder& rec)
{
    constexpr int tmax = 120;
    for (int p : {3, 5}) {
        auto cx = make_complex(p, ModuleKind::P);
        std::vector<CatalogEntry> gens = ext0_generators(*cx, tmax);
        auto stems = by_stem(gens);
        std::vector<std::string> count_bad, rep_bad;
        int total = 0;
        for (int t = 0; t <= tmax; ++t) {
            ExtGroup g = cx->ext(0, t);
            total += g.dimension;
            const auto& list = stems[t];
            if (g.dimension != int(list.size()))
                count_bad.push_back("t=" + std::to_string(t) + " dim " + std::to_string(g.dimension) + " vs " +
                                    std::to_string(list.size()) + " generators");
            Echelon span(cx->prime(), g.dimension);
            for (const CatalogEntry* e : list) {
                if (auto problem = class_problem(*cx, *e)) {
                    rep_bad.push_back(*problem);
                    continue;
                }
                if (span.insert(cx->ext_coordinates(e->cycle)))
                    rep_bad.push_back(e->name + " is dependent on the other generators");
            }
        }
        const std::string tag = "p=" + std::to_string(p) + " t<=" + std::to_string(tmax);
        rec.expect_none("dim Ext^0(P) equals the generator count, " + tag, count_bad,
                        std::to_string(total) + " classes, " + std::to_string(gens.size()) + " generators");
        rec.expect_none("generators are independent classes, " + tag, rep_bad,
                        std::to_string(gens.size()) + " representatives");
    }
}

// ---------------------------------------------------------------- ext1

void suite_ext1(Recorder& rec)
{
    constexpr int p = 3, tmax = 120;
    const auto t0 = Clock::now();
    auto cx = make_complex(p, ModuleKind::P);
    std::vector<CatalogEntry> fams = ext1_families(*cx, tmax);
    std::vector<CatalogEntry> rels = ext1_relations(*cx, tmax);
    auto stems = by_stem(fams);
    std::vector<std::string> count_bad, span_bad, rep_bad, rel_bad;
    int total = 0;
    for (int t = 0; t <= tmax; ++t) {
        ExtGroup g = cx->ext(1, t);
        total += g.dimension;
        const auto& list = stems[t];
        if (g.dimension != int(list.size())) {
            std::string names;
            for (const CatalogEntry* e : list)
                names += " " + e->name;
            count_bad.push_back("t=" + std::to_string(t) + " dim " + std::to_string(g.dimension) + " vs " +
                                std::to_string(list.size()) + ":" + names);
        }
        Echelon span(cx->prime(), g.dimension);
        for (const CatalogEntry* e : list)
            if (!e->cycle.empty() && cx->differential(e->cycle).empty())
                span.insert(cx->ext_coordinates(e->cycle));
        if (span.rank() != g.dimension)
            span_bad.push_back("t=" + std::to_string(t) + " rank " + std::to_string(span.rank()) + " of " +
                               std::to_string(g.dimension));
    }
    for (const CatalogEntry& e : fams)
        if (auto problem = class_problem(*cx, e))
            rep_bad.push_back(*problem);
    for (const CatalogEntry& e : rels)
        if (!e.cycle.empty() && !cx->is_boundary(e.cycle))
            rel_bad.push_back(e.name + " is not a boundary");

    const std::string tag = "p=3 t<=" + std::to_string(tmax);
    rec.expect_none("dim Ext^1(P) equals the nine-family count, " + tag, count_bad,
                    std::to_string(total) + " classes");
    rec.expect_none("the nine families span Ext^1(P), " + tag, span_bad, std::to_string(fams.size()) + " classes");
    rec.expect_none("representatives are nonzero classes, " + tag, rep_bad,
                    std::to_string(fams.size()) + " representatives");
    rec.expect_none("decomposable relations are boundaries, " + tag, rel_bad,
                    std::to_string(rels.size()) + " products");
    rec.runtime(300, t0);
}

// ---------------------------------------------------------------- fixtures

void suite_fixtures(Recorder& rec)
{
    auto cx = make_complex(3, ModuleKind::P);
    std::vector<FixtureResult> results = run_fixtures(*cx, 300);
    int instantiated = 0;
    for (const FixtureResult& r : results) {
        if (r.instances > 0)
            ++instantiated;
        std::string detail = std::to_string(r.held) + "/" + std::to_string(r.instances) + " instances";
        if (!r.failures.empty()) {
            detail += "; first failure " + r.failures.front() + ": " + r.residual;
            if (r.held_up_to_unit > 0)
                detail += "; " + std::to_string(r.held_up_to_unit) + " failing instances hold up to a unit";
        }
        rec.add(r.name, r.holds(), detail);
    }
    rec.add("at least 20 congruences instantiated", instantiated >= 20, std::to_string(instantiated));
}

// ---------------------------------------------------------------- rank3

void suite_rank3(Recorder& rec)
{
    const auto t0 = Clock::now();
    {
        auto cx = make_complex(3, ModuleKind::Fp);
        DyerLashof dl(*cx);
        LannesZarati lz(dl);
        std::vector<std::string> nonzero;
        int classes = 0;
        for (int t = 1; t <= 60; ++t) {
            LannesZarati::ExtMap m = lz.on_ext(3, t);
            classes += m.ext_dim;
            if (m.rank != 0)
                nonzero.push_back("t=" + std::to_string(t) + " rank " + std::to_string(m.rank));
        }
        rec.expect_none("phi_3 vanishes on Ext^{3,3+t}(F_3), 0<t<=60", nonzero,
                        std::to_string(classes) + " classes");
        LannesZarati::ExtMap m0 = lz.on_ext(3, 0);
        rec.add("phi_3 has rank 1 on Ext^{3,3}(F_3)", m0.rank == 1 && m0.ext_dim == 1,
                "dim " + std::to_string(m0.ext_dim) + ", rank " + std::to_string(m0.rank));
        Monomial a3{Gen(0, 0), Gen(0, 0), Gen(0, 0)};
        LZEvaluation ev = lz.phi(cx->element(ChainKey{a3, ModuleBasis{0, 0}}));
        rec.add("phi_3(a0^3) = -Q0Q0Q0", ev.image == minus_q000(*cx), format_q(*cx, ev.image));
    }

    struct Tally {
        std::string name;
        Mechanism mechanism = Mechanism::Excess;
        std::vector<std::string> instances;
        std::vector<std::string> problems;
    };
    std::map<int, Tally> tally;
    const std::pair<int, int> ranges[] = {{3, 800}, {5, 1200}};
    for (auto [p, tmax] : ranges) {
        auto cx = make_complex(p, ModuleKind::Fp);
        DyerLashof dl(*cx);
        LannesZarati lz(dl);
        const std::string at = "p=" + std::to_string(p);
        for (const RankThreeFamily& f : rank3_families(*cx, tmax, 3)) {
            Tally& t = tally[f.number];
            t.name = f.name;
            t.mechanism = f.mechanism;
            if (f.instances.empty())
                continue;
            t.instances.push_back(at + ": " + std::to_string(f.instances.size()));
            for (const CatalogEntry& e : f.instances) {
                try {
                    LZEvaluation ev = lz.phi_raw(e.raw);
                    bool ok = f.mechanism == Mechanism::NonZero ? ev.image == minus_q000(*cx) : ev.zero;
                    if (!ok)
                        t.problems.push_back(at + " " + e.name + " -> " + format_q(*cx, ev.image));
                } catch (const Error& err) {
                    t.problems.push_back(at + " " + e.name + ": " + err.what());
                }
            }
            for (const ChainElement& factor : f.factors) {
                try {
                    LZEvaluation ev = lz.trace(factor);
                    if (!mechanism_matches(f.mechanism, ev))
                        t.problems.push_back(at + " factor " + format_chain(*cx, factor) + " shows " +
                                             ev.provenance.describe() + (ev.zero ? "" : ", nonzero"));
                } catch (const Error& err) {
                    t.problems.push_back(at + " factor " + format_chain(*cx, factor) + ": " + err.what());
                }
            }
        }
    }
    for (int n = 1; n <= 23; ++n) {
        auto it = tally.find(n);
        if (it == tally.end() || it->second.instances.empty()) {
            rec.add("family " + std::to_string(n), false, "no instance in range at p = 3, 5");
            continue;
        }
        const Tally& t = it->second;
        std::string detail = to_string(t.mechanism) + "; instances " + listing(t.instances);
        if (!t.problems.empty())
            detail += "; " + listing(t.problems, 3);
        const std::string claim =
            t.mechanism == Mechanism::NonZero ? " maps to -Q0Q0Q0" : " vanishes by " + to_string(t.mechanism);
        rec.add("family " + std::to_string(n) + " " + t.name + claim,
                t.problems.empty(), detail);
    }
    rec.runtime(600, t0);
}

// ---------------------------------------------------------------- phi0

void suite_phi0(Recorder& rec)
{
    auto cx = make_complex(3, ModuleKind::P);
    DyerLashof dl(*cx);
    LannesZarati lz(dl);
    std::vector<std::string> bad;
    int classes = 0;
    for (int t = 0; t <= 120; ++t) {
        LannesZarati::ExtMap m = lz.on_ext(0, t);
        classes += m.ext_dim;
        if (m.ext_dim != m.target_dim || m.rank != m.ext_dim || !m.images_annihilated)
            bad.push_back("t=" + std::to_string(t) + " ext " + std::to_string(m.ext_dim) + " target " +
                          std::to_string(m.target_dim) + " rank " + std::to_string(m.rank));
    }
    rec.expect_none("phi_0 on Ext^0(P) is bijective, p=3 t<=120", bad, std::to_string(classes) + " classes");
}

// ---------------------------------------------------------------- phi1

void suite_phi1(Recorder& rec)
{
    constexpr int tmax = 120;
    auto cx = make_complex(3, ModuleKind::P);
    DyerLashof dl(*cx);
    LannesZarati lz(dl);
    std::vector<CatalogEntry> fams = ext1_families(*cx, tmax);

    std::map<std::string, std::pair<int, std::vector<std::string>>> per_family;
    for (const CatalogEntry& e : fams) {
        auto& [count, problems] = per_family[e.family];
        ++count;
        QElement got = lz.phi(e.cycle).image;
        QElement want = ext1_expected_image(dl, e);
        if (!(got == want))
            problems.push_back(e.name + " -> " + format_q(*cx, got) + ", expected " + format_q(*cx, want));
    }
    for (auto& [family, entry] : per_family)
        rec.expect_none("phi_1 on " + family, entry.second, std::to_string(entry.first) + " classes");

    std::vector<std::string> rank_bad;
    auto stems = by_stem(fams);
    for (int t = 0; t <= tmax; ++t) {
        LannesZarati::ExtMap m = lz.on_ext(1, t);
        Echelon expected(cx->prime(), int(dl.cell(1, t).basis.size()));
        for (const CatalogEntry* e : stems[t])
            expected.insert(dl.coordinates(ext1_expected_image(dl, *e), {1, t}));
        if (m.rank != expected.rank())
            rank_bad.push_back("t=" + std::to_string(t) + " rank " + std::to_string(m.rank) + " vs " +
                               std::to_string(expected.rank()));
    }
    rec.expect_none("phi_1 has no image beyond the listed values, p=3 t<=120", rank_bad, "ranks agree");

    QElement v = cokernel_witness(*cx);
    Bidegree bd = cx->bidegree(v);
    LannesZarati::ExtMap m = lz.on_ext(1, bd.t);
    Echelon image(cx->prime(), int(dl.cell(1, bd.t).basis.size()));
    for (const QElement& q : m.images)
        image.insert(dl.coordinates(q, bd));
    const bool annihilated = dl.annihilated(v);
    const bool in_image = image.contains(dl.coordinates(v, bd));
    std::string detail = format_q(*cx, v) + " at t=" + std::to_string(bd.t) + ": annihilated " +
                         (annihilated ? "yes" : "no") + ", in image " + (in_image ? "yes" : "no") + ", hit " +
                         (dl.hit(v) ? "yes" : "no");
    if (!annihilated)
        detail += ", times b = " + format_q(*cx, dl.bockstein(v));
    rec.add("cokernel of phi_1 contains [bQ^2 b[1] + Q^2 a]", annihilated && !in_image, detail);
}

// ---------------------------------------------------------------- power

/* Lambda words of length s whose letters all carry eps = 1 (every word at p = 2). */
bool all_bockstein(const LambdaAlgebra& A, const Monomial& w)
{
    if (!A.odd())
        return true;
    for (Gen g : w)
        if (g.eps() != 1)
            return false;
    return true;
}

void suite_power(Recorder& rec)
{
    constexpr int dmax = 60;
    for (int p : {3, 5, 2}) {
        auto cx = make_complex(p, ModuleKind::Fp);
        const LambdaAlgebra& A = cx->algebra();
        DyerLashof dl(*cx);
        const std::string at = "p=" + std::to_string(p);

        std::vector<std::string> excess_bad;
        long words = 0;
        for (int s = 2; s <= 3; ++s)
            for (int d = 0; d <= dmax; ++d)
                for (const Monomial& w : A.basis(s, d)) {
                    Monomial img;
                    if (!all_bockstein(A, w) || !A.power_op(w, img))
                        continue;
                    ++words;
                    if (A.excess(img) != p * A.excess(w) - (p - 1) * (s - 2))
                        excess_bad.push_back(format_monomial(A, w));
                }
        rec.expect_none("excess of P0 w equals p e(w) - (p-1)(s-2), " + at, excess_bad,
                        std::to_string(words) + " words");

        std::vector<std::string> defined_bad;
        long raws = 0;
        std::vector<Gen> gens = A.generators_up_to(dmax);
        auto check_raw = [&](const Monomial& w) {
            ++raws;
            ChainElement raw = cx->element(ChainKey{w, ModuleBasis{0, 0}});
            QElement left = dl.reduce(raw_power(*cx, raw));
            QElement right = dl.power_op(dl.reduce(raw));
            if (!(left == right))
                defined_bad.push_back(format_monomial(A, w));
        };
        for (Gen a : gens)
            for (Gen b : gens) {
                const int d2 = A.degree(a) + A.degree(b);
                if (d2 > dmax)
                    continue;
                check_raw(Monomial{a, b});
                for (Gen c : gens)
                    if (d2 + A.degree(c) <= dmax)
                        check_raw(Monomial{a, b, c});
            }
        rec.expect_none("P0 respects the relations of R, " + at + " s<=3 degree<=60", defined_bad,
                        std::to_string(raws) + " raw words");
    }

    for (int p : {3, 2})
        for (ModuleKind kind : {ModuleKind::Fp, ModuleKind::P}) {
            auto cx = make_complex(p, kind);
            DyerLashof dl(*cx);
            std::vector<std::string> bad;
            long cases = 0;
            for (int s = 0; s <= 3; ++s)
                for (int t = 0; t <= dmax; ++t)
                    for (const ChainKey& k : dl.basis(s, t)) {
                        QElement q = cx->element(k);
                        QElement pq = dl.power_op(q);
                        for (int kk = 1; kk <= 10; ++kk) {
                            ++cases;
                            QElement left = dl.act(pq, SteenrodOp{0, p * kk});
                            QElement right = dl.power_op(dl.act(q, SteenrodOp{0, kk}));
                            if (!(left == right))
                                bad.push_back(format_q(*cx, q) + " k=" + std::to_string(kk));
                        }
                    }
            rec.expect_none("(P0 q) P^{pk} = P0(q P^k), p=" + std::to_string(p) + " M=" + module_name(kind) +
                                " s<=3 degree<=60 k<=10",
                            bad, std::to_string(cases) + " cases");
        }

    {
        std::vector<std::string> bad;
        int classes = 0;
        auto square = [&](const LannesZarati& lz, const ChainElement& c, const std::string& name) {
            ++classes;
            if (!lz.power_square(c))
                bad.push_back(name);
        };
        auto p3 = make_complex(3, ModuleKind::P);
        DyerLashof dlp(*p3);
        LannesZarati lzp(dlp);
        for (const CatalogEntry& e : ext0_generators(*p3, 120))
            square(lzp, e.cycle, e.name);
        for (const CatalogEntry& e : ext1_families(*p3, 120))
            square(lzp, e.cycle, e.name);
        auto f3 = make_complex(3, ModuleKind::Fp);
        DyerLashof dlf(*f3);
        LannesZarati lzf(dlf);
        for (const RankThreeFamily& f : rank3_families(*f3, 400, 3))
            for (const CatalogEntry& e : f.instances)
                square(lzf, e.cycle, "family " + std::to_string(f.number) + " " + e.name);
        auto f2 = make_complex(2, ModuleKind::Fp);
        DyerLashof dl2(*f2);
        LannesZarati lz2(dl2);
        square(lz2, u0_cycle(*f2).entry.cycle, "U_0");
        auto p2 = make_complex(2, ModuleKind::P);
        DyerLashof dlp2(*p2);
        LannesZarati lzp2(dlp2);
        for (const VanishingCycle& c : p2_module_cycles(*p2))
            square(lzp2, c.entry.cycle, c.entry.name);
        rec.expect_none("phi(P0 x) = P0 phi(x) on catalog classes", bad, std::to_string(classes) + " classes");
    }
}

// ---------------------------------------------------------------- p2

/* Admissible Q-words of length s and degree d at p = 2 with excess >= n, by direct enumeration. */
long brute_q_count(int s, int d, int n)
{
    long count = 0;
    std::vector<int> word;
    auto rec = [&](auto& self, int left) -> void {
        if (int(word.size()) == s) {
            if (left != 0)
                return;
            for (std::size_t k = 0; k + 1 < word.size(); ++k)
                if (word[k] > 2 * word[k + 1])
                    return;
            int e = s ? word[0] : 0;
            for (std::size_t k = 1; k < word.size(); ++k)
                e -= word[k];
            if (s == 0 || e >= n)
                ++count;
            return;
        }
        for (int i = 0; i <= left; ++i) {
            word.push_back(i);
            self(self, left - i);
            word.pop_back();
        }
    };
    rec(rec, d);
    return count;
}

void suite_p2(Recorder& rec)
{
    const auto t0 = Clock::now();
    auto f2 = make_complex(2, ModuleKind::Fp);
    DyerLashof dl(*f2);
    LannesZarati lz(dl);
    std::vector<std::string> iso_bad, epi_bad;
    for (int t = 0; t <= 40; ++t) {
        LannesZarati::ExtMap m1 = lz.on_ext(1, t);
        if (m1.rank != m1.target_dim || m1.rank != m1.ext_dim)
            iso_bad.push_back("t=" + std::to_string(t) + " ext " + std::to_string(m1.ext_dim) + " rank " +
                              std::to_string(m1.rank) + " target " + std::to_string(m1.target_dim));
        LannesZarati::ExtMap m2 = lz.on_ext(2, t);
        if (m2.rank != m2.target_dim)
            epi_bad.push_back("t=" + std::to_string(t) + " rank " + std::to_string(m2.rank) + " target " +
                              std::to_string(m2.target_dim));
    }
    rec.expect_none("phi_1 over F_2 is an isomorphism, t<=40", iso_bad, "all stems");
    rec.expect_none("phi_2 over F_2 is onto its target, t<=40", epi_bad, "all stems");

    auto vanishing = [&](const Complex& cx, const LannesZarati& l, const VanishingCycle& c) {
        std::string detail;
        bool ok = true;
        try {
            LZEvaluation ev = l.phi_raw(c.entry.raw);
            ok = ev.zero;
            detail = "image " + format_q(cx, ev.image) + ", raw " + ev.provenance.describe();
            LZEvaluation fe = l.trace(c.factor);
            ok = ok && mechanism_matches(c.mechanism, fe);
            detail += "; factor " + format_chain(cx, c.factor) + " shows " + fe.provenance.describe();
        } catch (const Error& err) {
            ok = false;
            detail += std::string("; ") + err.what();
        }
        rec.add("phi vanishes on " + c.entry.name + " by " + to_string(c.mechanism), ok, detail);
    };
    vanishing(*f2, lz, u0_cycle(*f2));

    auto p2 = make_complex(2, ModuleKind::P);
    DyerLashof dlp(*p2);
    LannesZarati lzp(dlp);
    for (const VanishingCycle& c : p2_module_cycles(*p2))
        vanishing(*p2, lzp, c);

    std::vector<std::string> basis_bad;
    long cells = 0;
    for (const Complex* cx : {f2.get(), p2.get()}) {
        const DyerLashof& d = cx == f2.get() ? dl : dlp;
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 60; ++t) {
                long brute = 0;
                for (int n = 0; n <= t; ++n)
                    brute += long(cx->module().basis(n).size()) * brute_q_count(s, t - n, n);
                ++cells;
                if (brute != long(d.basis(s, t).size()))
                    basis_bad.push_back(cx->module().name() + " s=" + std::to_string(s) + " t=" +
                                        std::to_string(t) + ": " + std::to_string(d.basis(s, t).size()) +
                                        " vs " + std::to_string(brute));
            }
    }
    rec.expect_none("dual Singer basis at p=2 matches the enumerated count, s<=3 t<=60", basis_bad,
                    std::to_string(cells) + " cells");
    rec.runtime(300, t0);
}

// ---------------------------------------------------------------- oracles

/* Generators of the lambda algebra by direct description: (eps, index, degree). */
struct PlainGen {
    int eps, idx, degree;
};

std::vector<PlainGen> plain_generators(int p, int dmax)
{
    std::vector<PlainGen> out;
    if (p == 2) {
        for (int n = 0; n <= dmax; ++n)
            out.push_back({0, n, n});
        return out;
    }
    out.push_back({0, 0, 0});
    for (int i = 1; 2 * i * (p - 1) - 1 <= dmax; ++i) {
        out.push_back({1, i, 2 * i * (p - 1) - 1});
        if (2 * i * (p - 1) <= dmax)
            out.push_back({0, i, 2 * i * (p - 1)});
    }
    return out;
}

long brute_lambda_count(int p, int s, int d)
{
    std::vector<PlainGen> gens = plain_generators(p, d);
    std::vector<PlainGen> word;
    long count = 0;
    auto rec = [&](auto& self, int left) -> void {
        if (int(word.size()) == s) {
            if (left != 0)
                return;
            for (std::size_t k = 0; k + 1 < word.size(); ++k) {
                const PlainGen& l = word[k];
                const PlainGen& r = word[k + 1];
                bool ok = p == 2 ? l.idx <= 2 * r.idx : p * r.idx - r.eps >= l.idx;
                if (!ok)
                    return;
            }
            ++count;
            return;
        }
        for (const PlainGen& g : gens)
            if (g.degree <= left) {
                word.push_back(g);
                self(self, left - g.degree);
                word.pop_back();
            }
    };
    rec(rec, d);
    return count;
}

void suite_oracles(Recorder& rec, std::uint64_t seed)
{
    constexpr int dmax = 60;
    for (int p : {2, 3, 5}) {
        const std::string at = "p=" + std::to_string(p);
        auto fp = make_complex(p, ModuleKind::Fp);
        const LambdaAlgebra& A = fp->algebra();

        std::vector<std::string> count_bad;
        long words = 0;
        for (int s = 0; s <= 3; ++s)
            for (int d = 0; d <= dmax; ++d) {
                long have = long(A.basis(s, d).size());
                words += have;
                long want = brute_lambda_count(p, s, d);
                if (have != want)
                    count_bad.push_back("s=" + std::to_string(s) + " d=" + std::to_string(d) + ": " +
                                        std::to_string(have) + " vs " + std::to_string(want));
            }
        rec.expect_none("admissible lambda basis matches string enumeration, " + at + " s<=3 degree<=60",
                        count_bad, std::to_string(words) + " words");

        for (ModuleKind kind : {ModuleKind::Fp, ModuleKind::P}) {
            auto cx = make_complex(p, kind);
            DyerLashof dl(*cx);
            const RightModule& M = cx->module();
            std::vector<std::string> bad;
            for (int s = 0; s <= 3; ++s) {
                /* per[n][d]: index strings for excess bound n whose word has degree d */
                std::vector<std::vector<long>> per(std::size_t(dmax) + 1, std::vector<long>(std::size_t(dmax) + 1));
                for (int n = 0; n <= dmax; ++n) {
                    std::vector<ModuleBasis> ls = M.basis(n);
                    if (ls.empty())
                        continue;
                    for (const IndexString& J : enumerate_index_strings(A, s, n, dmax - n)) {
                        Monomial w = index_bijection(A, J, n);
                        int d = A.degree(w);
                        if (d + n > dmax)
                            continue;
                        ++per[std::size_t(n)][std::size_t(d)];
                        for (const ModuleBasis& l : ls)
                            if (!dl.in_basis(ChainKey{w, l}))
                                bad.push_back("word " + format_q_monomial(A, w) + " outside the basis");
                    }
                }
                for (int t = 0; t <= dmax; ++t) {
                    long want = 0;
                    for (int n = 0; n <= t; ++n)
                        want += per[std::size_t(n)][std::size_t(t - n)] * long(M.basis(n).size());
                    long have = long(dl.basis(s, t).size());
                    if (have != want)
                        bad.push_back("s=" + std::to_string(s) + " t=" + std::to_string(t) + ": " +
                                      std::to_string(have) + " vs " + std::to_string(want));
                }
            }
            rec.expect_none("dual Singer basis matches index strings, " + at + " M=" + module_name(kind) +
                                " s<=3 degree<=60",
                            bad, "all cells");
        }

        std::mt19937_64 rng(seed + std::uint64_t(p));
        const int max_idx = p == 2 ? 24 : 8;
        std::uniform_int_distribution<int> len(2, 5), idx(0, max_idx), bit(0, 1);
        std::vector<std::string> adem_bad;
        constexpr int trials = 10000;
        for (int n = 0; n < trials; ++n) {
            Monomial w;
            const int L = len(rng);
            while (w.length() < L) {
                Gen g(p == 2 ? 0 : bit(rng), idx(rng));
                if (A.legal(g))
                    w.push_back(g);
            }
            LambdaElement raw = A.element(w);
            LambdaElement a = A.normalize(raw);
            LambdaElement b = A.normalize_leftmost(raw);
            LambdaElement c = A.normalize_rightmost(raw);
            bool admissible = true;
            for (auto& [m, x] : a)
                admissible = admissible && A.admissible(m);
            if (!(a == b) || !(a == c) || !admissible)
                adem_bad.push_back(format_monomial(A, w));
        }
        rec.expect_none("Adem rewriting is confluent on 10^4 random words, " + at, adem_bad,
                        std::to_string(trials) + " words");
    }
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options)
{
    SuiteReport report;
    report.name = std::string(name);
    for (const SuiteInfo& info : suite_catalog())
        if (info.name == name)
            report.criterion = info.criterion;
    if (report.criterion == 0)
        throw Error("unknown suite '" + report.name + "'");
    Recorder rec(report, options);
    const auto t0 = Clock::now();
    switch (report.criterion) {
    case 1: suite_ddzero(rec); break;
    case 2: suite_ext0(rec); break;
    case 3: suite_ext1(rec); break;
    case 4: suite_fixtures(rec); break;
    case 5: suite_rank3(rec); break;
    case 6: suite_phi0(rec); break;
    case 7: suite_phi1(rec); break;
    case 8: suite_power(rec); break;
    case 9: suite_p2(rec); break;
    case 10: suite_oracles(rec, options.seed); break;
    }
    report.seconds = since(t0);
    return report;
}

}  // namespace lzext
