#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace lzext::cli;

namespace {

RunConfig parse(std::vector<std::string> args)
{
    RunConfig cfg;
    auto app = build_app(cfg);
    args.insert(args.begin(), "lzext");
    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    app->parse(int(argv.size()), argv.data());
    return cfg;
}

std::string dump(const std::vector<std::string>& args)
{
    RunConfig cfg;
    auto app = build_app(cfg);
    std::vector<const char*> argv{"lzext"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    app->parse(int(argv.size()), argv.data());
    return app->config_to_str(true, false);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

std::pair<int, std::string> execute(const RunConfig& cfg)
{
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("config file round trip")
{
    std::vector<std::string> args{"--p", "5", "--module", "Fp", "--s", "1..2", "--tmax", "44",
                                  "--format", "json", "--workers", "3", "--seed", "17", "--basis-cap", "1000"};
    auto path = write_temp("lzext_roundtrip.ini", dump(args));
    RunConfig a = parse(args);
    RunConfig b = parse({"--config", path.string()});
    CHECK(a.p == b.p);
    CHECK(a.module == b.module);
    CHECK(a.s_range == b.s_range);
    CHECK(a.tmax == b.tmax);
    CHECK(a.format == b.format);
    CHECK(a.workers == b.workers);
    CHECK(a.seed == b.seed);
    CHECK(a.basis_cap == b.basis_cap);
    CHECK(dump({"--config", path.string()}) == dump(args));
}

TEST_CASE("flags win over the config file, which wins over the environment")
{
    auto path = write_temp("lzext_precedence.ini", "p=5\ntmax=30\n");
    ::setenv("LZEXT_P", "7", 1);
    ::setenv("LZEXT_SEED", "99", 1);
    RunConfig c = parse({"--config", path.string(), "--tmax", "12"});
    CHECK(c.p == 5);
    CHECK(c.tmax == 12);
    CHECK(c.seed == 99);
    CHECK(parse({}).p == 7);
    ::unsetenv("LZEXT_P");
    ::unsetenv("LZEXT_SEED");
}

TEST_CASE("subcommands and their arguments")
{
    RunConfig c = parse({"adem", "--p", "3", "l1_4 l1_1"});
    CHECK(c.command == "adem");
    CHECK(c.p == 3);
    REQUIRE(c.args.size() == 1);
    auto [code, text] = execute(c);
    CHECK(code == 0);
    CHECK(text == "l1_4 l1_1\n");
    CHECK(execute(parse({"project", "--p", "3", "l0_-1 l0_-1 l0_-1"})).second == "Q[0] Q[0] Q[0]\n");
}

TEST_CASE("invalid settings are diagnosed")
{
    for (auto args : std::vector<std::vector<std::string>>{{"--p", "4", "ext"},
                                                            {"--s", "2..1", "ext"},
                                                            {"--format", "xml", "ext"},
                                                            {"--module", "Z", "ext"},
                                                            {"--workers", "0", "ext"},
                                                            {"verify", "nosuch"},
                                                            {"adem", "l1_-1"}}) {
        auto [code, text] = execute(parse(args));
        CHECK(code != 0);
        CHECK_FALSE(text.empty());
    }
}

TEST_CASE("memory guard exits with a diagnostic")
{
    auto [code, text] = execute(parse({"ext", "--p", "3", "--s", "3", "--tmax", "80", "--basis-cap", "10"}));
    CHECK(code != 0);
    CHECK(text.find("memory guard") != std::string::npos);
}

TEST_CASE("chart output is deterministic and independent of the worker count")
{
    auto one = execute(parse({"ext", "--p", "3", "--module", "P", "--s", "0..1", "--tmax", "40"}));
    auto three = execute(parse({"ext", "--p", "3", "--module", "P", "--s", "0..1", "--tmax", "40", "--workers", "3"}));
    CHECK(one.first == 0);
    CHECK(one.second == three.second);
    CHECK(one.second.rfind("p,module,s,t,dim,names\n", 0) == 0);
    CHECK(one.second.find("3,P,0,3,1,hhat_0\n") != std::string::npos);
    CHECK(one.second.find("3,P,1,10,1,2*khat_0(1)\n") != std::string::npos);
    auto lz1 = execute(parse({"lz", "--p", "3", "--module", "Fp", "--s", "3", "--tmax", "20", "--format", "json"}));
    auto lz2 = execute(parse({"lz", "--p", "3", "--module", "Fp", "--s", "3", "--tmax", "20", "--format", "json",
                              "--workers", "2"}));
    CHECK(lz1.first == 0);
    CHECK(lz1.second == lz2.second);
    CHECK(lz1.second.find("\"image\": \"-Q[0] Q[0] Q[0]\"") != std::string::npos);
}
