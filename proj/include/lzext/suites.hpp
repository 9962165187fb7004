#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lzext/complex.hpp"

namespace lzext {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    int criterion = 0;
    std::vector<SuiteCheck> checks;
    double seconds = 0;
    bool passed() const;
    /* First failing check, or the check count when everything passed. */
    std::string summary() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /* Called after every check, e.g. to stream per-check status. */
    std::function<void(const SuiteCheck&)> on_check;
};

struct SuiteInfo {
    std::string name;
    int criterion;
    std::string description;
};

/* ddzero ext0 ext1 fixtures rank3 phi0 phi1 power p2 oracles, in criterion order. */
const std::vector<SuiteInfo>& suite_catalog();

/* Throws Error for an unknown name. */
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

std::unique_ptr<Complex> make_complex(int p, ModuleKind kind);

}  // namespace lzext
