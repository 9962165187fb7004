#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    lzext::cli::RunConfig cfg;
    auto app = lzext::cli::build_app(cfg);
    try {
        app->parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app->exit(e);
    }
    if (cfg.print_config) {
        std::cout << app->config_to_str(true, false);
        return 0;
    }
    if (cfg.command.empty()) {
        std::cout << app->help();
        return 2;
    }
    return lzext::cli::run(cfg, std::cout, std::cerr);
}
