#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <thread>

#include "json.hpp"
#include "lzext/catalog.hpp"
#include "lzext/dyer_lashof.hpp"
#include "lzext/lz.hpp"
#include "lzext/suites.hpp"
#include "lzext/text.hpp"

namespace lzext::cli {

using Json = nlohmann::ordered_json;

namespace {

std::pair<int, int> parse_range(const std::string& text)
{
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size())
            throw Error("bad homological range '" + text + "'");
        return v;
    };
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            int v = number(text);
            return {v, v};
        }
        return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw Error("bad homological range '" + text + "' (expected a or a..b)");
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

/* Evaluates fn on every (s, t) cell with a pool of workers; results come back in cell order. */
template <class Result>
std::vector<Result> over_cells(const RunConfig& cfg, const std::function<Result(int, int)>& fn)
{
    std::vector<std::pair<int, int>> cells;
    for (int s = cfg.s_min(); s <= cfg.s_max(); ++s)
        for (int t = 0; t <= cfg.tmax; ++t)
            cells.emplace_back(s, t);
    std::vector<Result> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                results[i] = fn(cells[i].first, cells[i].second);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < cfg.workers; ++w)
        pool.emplace_back(work);
    work();
    for (std::thread& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

struct Context {
    std::unique_ptr<Complex> cx;
    explicit Context(const RunConfig& cfg) : cx(make_complex(cfg.p, parse_module_kind(cfg.module)))
    {
        cx->set_basis_cap(cfg.basis_cap);
    }
};

/* Catalog name of each Ext basis class when a multiple of the catalog cycle differs
 * from it by a boundary; otherwise the representative itself. */
std::vector<std::string> class_names(const Complex& cx, const ExtGroup& g, const std::vector<CatalogEntry>& catalog)
{
    std::vector<std::string> names;
    for (const ExtClass& c : g.classes)
        names.push_back(format_chain(cx, c.representative));
    for (const CatalogEntry& e : catalog) {
        if (e.bidegree != g.bidegree)
            continue;
        SparseVec v = cx.ext_coordinates(e.cycle);
        if (v.size() != 1)
            continue;
        const Scalar c = cx.prime().inverse(v[0].second);
        names[std::size_t(v[0].first)] = c == 1 ? e.name : std::to_string(c) + "*" + e.name;
    }
    return names;
}

int cmd_ext(const RunConfig& cfg, std::ostream& out)
{
    Context ctx(cfg);
    const Complex& cx = *ctx.cx;
    std::vector<CatalogEntry> catalog;
    if (cx.prime().odd() && cx.module().kind() == ModuleKind::P) {
        if (cfg.s_min() <= 0)
            catalog = ext0_generators(cx, cfg.tmax);
        if (cfg.s_min() <= 1 && cfg.s_max() >= 1)
            for (CatalogEntry& e : ext1_families(cx, cfg.tmax))
                catalog.push_back(std::move(e));
    }
    struct Row {
        ExtGroup g;
        std::vector<std::string> names;
    };
    auto rows = over_cells<Row>(cfg, [&](int s, int t) {
        ExtGroup g = cx.ext(s, t);
        auto names = class_names(cx, g, catalog);
        return Row{std::move(g), std::move(names)};
    });
    const std::string mod = cx.module().name();
    if (cfg.format == "json") {
        Json out_rows = Json::array();
        for (const Row& r : rows) {
            Json reps = Json::array();
            for (const ExtClass& c : r.g.classes)
                reps.push_back(format_chain(cx, c.representative));
            out_rows.push_back({{"p", cfg.p},
                                {"module", mod},
                                {"s", r.g.bidegree.s},
                                {"t", r.g.bidegree.t},
                                {"dim", r.g.dimension},
                                {"names", r.names},
                                {"representatives", reps}});
        }
        out << out_rows.dump(2) << "\n";
        return 0;
    }
    out << "p,module,s,t,dim,names\n";
    for (const Row& r : rows) {
        std::string names;
        for (const std::string& n : r.names)
            names += (names.empty() ? "" : "; ") + n;
        out << cfg.p << "," << mod << "," << r.g.bidegree.s << "," << r.g.bidegree.t << "," << r.g.dimension << ","
            << csv_field(names) << "\n";
    }
    return 0;
}

struct LzRecord {
    int s, t;
    std::string cls, image, provenance;
    bool zero;
};

int cmd_lz(const RunConfig& cfg, std::ostream& out)
{
    Context ctx(cfg);
    const Complex& cx = *ctx.cx;
    DyerLashof dl(cx);
    LannesZarati lz(dl);
    auto cells = over_cells<std::vector<LzRecord>>(cfg, [&](int s, int t) {
        std::vector<LzRecord> recs;
        LannesZarati::ExtMap m = lz.on_ext(s, t);
        ExtGroup g = cx.ext(s, t);
        for (const ExtClass& c : g.classes) {
            LZEvaluation ev = lz.phi(c.representative);
            recs.push_back({s, t, format_chain(cx, c.representative), format_q(cx, ev.image),
                            ev.provenance.describe(), ev.zero});
        }
        for (const QElement& q : m.cokernel)
            recs.push_back({s, t, "cokernel", format_q(cx, q), "not in image", false});
        return recs;
    });
    const std::string mod = cx.module().name();
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (const auto& cell : cells)
            for (const LzRecord& r : cell)
                rows.push_back({{"p", cfg.p},
                                {"module", mod},
                                {"s", r.s},
                                {"t", r.t},
                                {"class", r.cls},
                                {"image", r.image},
                                {"zero", r.zero},
                                {"provenance", r.provenance}});
        out << rows.dump(2) << "\n";
        return 0;
    }
    out << "p,module,s,t,class,image,zero,provenance\n";
    for (const auto& cell : cells)
        for (const LzRecord& r : cell)
            out << cfg.p << "," << mod << "," << r.s << "," << r.t << "," << csv_field(r.cls) << ","
                << csv_field(r.image) << "," << (r.zero ? "true" : "false") << "," << csv_field(r.provenance)
                << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    std::vector<std::string> names = cfg.args;
    if (names.empty() || (names.size() == 1 && names[0] == "list")) {
        for (const SuiteInfo& s : suite_catalog())
            out << s.name << "\tcriterion " << s.criterion << "\t" << s.description << "\n";
        return names.empty() ? 2 : 0;
    }
    if (names.size() == 1 && names[0] == "all") {
        names.clear();
        for (const SuiteInfo& s : suite_catalog())
            names.push_back(s.name);
    }
    SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.on_check = [&](const SuiteCheck& c) {
        out << (c.passed ? "  PASS " : "  FAIL ") << c.name;
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << "\n" << std::flush;
    };
    bool all = true;
    for (const std::string& name : names) {
        out << name << "\n";
        SuiteReport r = run_suite(name, opt);
        out << name << ": " << (r.passed() ? "PASS" : "FAIL") << " (criterion " << r.criterion << ")\n";
        all = all && r.passed();
    }
    return all ? 0 : 1;
}

std::string joined(const std::vector<std::string>& args)
{
    std::string s;
    for (const std::string& a : args)
        s += (s.empty() ? "" : " ") + a;
    return s;
}

int cmd_adem(const RunConfig& cfg, std::ostream& out)
{
    const std::string text = joined(cfg.args);
    if (text.find('|') != std::string::npos) {
        Context ctx(cfg);
        out << format_chain(*ctx.cx, parse_chain(*ctx.cx, text)) << "\n";
        return 0;
    }
    LambdaAlgebra A{Prime(cfg.p)};
    out << format_lambda(A, parse_lambda(A, text)) << "\n";
    return 0;
}

int cmd_project(const RunConfig& cfg, std::ostream& out)
{
    const std::string text = joined(cfg.args);
    RunConfig local = cfg;
    if (text.find('|') == std::string::npos)
        local.module = "Fp";
    Context ctx(local);
    DyerLashof dl(*ctx.cx);
    out << format_q(*ctx.cx, dl.reduce(parse_chain_raw(*ctx.cx, text))) << "\n";
    return 0;
}

}  // namespace

int RunConfig::s_min() const { return parse_range(s_range).first; }
int RunConfig::s_max() const { return parse_range(s_range).second; }

void RunConfig::validate() const
{
    if (!is_prime(p))
        throw Error("--p must be a prime, got " + std::to_string(p));
    parse_module_kind(module);
    auto [a, b] = parse_range(s_range);
    if (a < 0 || b < a || b > Monomial::kMaxLength)
        throw Error("--s must satisfy 0 <= a <= b <= " + std::to_string(Monomial::kMaxLength));
    if (tmax < 0)
        throw Error("--tmax must be nonnegative");
    if (format != "csv" && format != "json")
        throw Error("--format must be csv or json");
    if (workers < 1)
        throw Error("--workers must be at least 1");
    if (basis_cap == 0)
        throw Error("--basis-cap must be positive");
}

std::unique_ptr<CLI::App> build_app(RunConfig& cfg)
{
    auto app = std::make_unique<CLI::App>("Ext over the mod p Steenrod algebra and the Lannes-Zarati homomorphism",
                                          "lzext");
    app->set_config("--config", "", "flat key=value file mirroring the flags");
    app->option_defaults()->always_capture_default();
    app->add_option("--p", cfg.p, "prime")->envname("LZEXT_P");
    app->add_option("--module", cfg.module, "Fp or P")->envname("LZEXT_MODULE");
    app->add_option("--s", cfg.s_range, "homological degrees a..b")->envname("LZEXT_S");
    app->add_option("--tmax", cfg.tmax, "largest stem")->envname("LZEXT_TMAX");
    app->add_option("--format", cfg.format, "csv or json")->envname("LZEXT_FORMAT");
    app->add_option("--out", cfg.out, "output file (default stdout)")->envname("LZEXT_OUT");
    app->add_option("--workers", cfg.workers, "worker threads over bidegree cells")->envname("LZEXT_WORKERS");
    app->add_option("--seed", cfg.seed, "seed for randomized checks")->envname("LZEXT_SEED");
    app->add_option("--basis-cap", cfg.basis_cap, "refuse bidegrees with more basis vectors than this")
        ->envname("LZEXT_BASIS_CAP");
    app->add_flag("--print-config", cfg.print_config, "print the settings in config-file format and exit")
        ->configurable(false);
    app->require_subcommand(0, 1);
    app->fallthrough();

    auto sub = [&](const char* name, const char* help, const char* args_help) {
        CLI::App* s = app->add_subcommand(name, help);
        s->fallthrough();
        if (args_help)
            s->add_option("args", cfg.args, args_help)->configurable(false);
        s->callback([&cfg, s] { cfg.command = s->get_name(); });
        return s;
    };
    sub("ext", "Ext chart rows for every (s, t) in range", nullptr);
    sub("lz", "Lannes-Zarati images of every Ext class in range", nullptr);
    sub("verify", "run verification suites (a name, 'all' or 'list')", "suite names");
    sub("adem", "normal form of a lambda expression or chain", "expression");
    sub("project", "image of a lambda expression or chain in the Dyer-Lashof target", "expression");
    return app;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        cfg.validate();
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file)
                throw Error("cannot write " + cfg.out);
            sink = &file;
        }
        if (cfg.command == "ext")
            return cmd_ext(cfg, *sink);
        if (cfg.command == "lz")
            return cmd_lz(cfg, *sink);
        if (cfg.command == "verify")
            return cmd_verify(cfg, *sink);
        if (cfg.command == "adem")
            return cmd_adem(cfg, *sink);
        if (cfg.command == "project")
            return cmd_project(cfg, *sink);
        err << "no subcommand given; see --help\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lzext::cli
