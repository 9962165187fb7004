#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace lzext::cli {

/* Settings shared by every subcommand. Flags win over the config file, which wins
 * over LZEXT_* environment variables. */
struct RunConfig {
    int p = 3;
    std::string module = "P";
    std::string s_range = "0..1";
    int tmax = 60;
    std::string format = "csv";
    std::string out;
    int workers = 1;
    std::uint64_t seed = 1;
    std::size_t basis_cap = 4'000'000;
    bool print_config = false;

    std::string command;
    std::vector<std::string> args;

    int s_min() const;
    int s_max() const;
    /* Throws lzext::Error on an invalid combination. */
    void validate() const;
};

/* The full command-line interface bound to `cfg`. */
std::unique_ptr<CLI::App> build_app(RunConfig& cfg);

/* Runs the selected subcommand; returns the process exit code. */
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lzext::cli
