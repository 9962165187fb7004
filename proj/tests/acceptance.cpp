// One line per acceptance criterion, in order; exit status 1 if any fails.
// Runtime limits are pinned inside the suites as ordinary checks.
#include <cstdio>
#include <iostream>

#include "lzext/prime_field.hpp"
#include "lzext/suites.hpp"

int main(int argc, char** argv)
{
    lzext::SuiteOptions options;
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    if (verbose)
        options.on_check = [](const lzext::SuiteCheck& c) {
            std::cerr << (c.passed ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": ") << c.detail
                      << "\n";
        };
    int failed = 0;
    for (const lzext::SuiteInfo& info : lzext::suite_catalog()) {
        std::string line;
        try {
            lzext::SuiteReport r = lzext::run_suite(info.name, options);
            failed += !r.passed();
            line = (r.passed() ? "PASS (" : "FAIL (") + info.name + ", " + std::to_string(int(r.seconds + 0.5)) +
                   " s) " + r.summary();
        } catch (const std::exception& e) {
            ++failed;
            line = "FAIL (" + info.name + ") exception: " + e.what();
        }
        std::cout << "criterion " << info.criterion << ": " << line << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
