#pragma once

#include <string>
#include <vector>

#include "lzext/complex.hpp"

namespace lzext {

/* Integer parameters of a congruence d(X) = Y mod F^n in the complex of P. */
struct FixtureParams {
    long i = 0, j = 0, k = 0, l = 0, m = 0, r = 0;
    std::string describe(const std::string& used) const;
};

struct FixtureResult {
    std::string name;
    int instances = 0;
    int held = 0;
    /* Failing instances where d(X) = cY mod F^n for some other unit c. */
    int held_up_to_unit = 0;
    std::vector<std::string> failures;
    /* Terms of d(X) - Y above the filtration at the first failing instance. */
    std::string residual;
    bool holds() const { return instances > 0 && held == instances; }
};

/* Checks every congruence d(X) = Y mod F^n, where F^n is spanned by the terms whose
 * module factor has degree <= n, at every parameter choice whose chains exist and
 * have total degree <= tmax. Odd p only. */
std::vector<FixtureResult> run_fixtures(const Complex& cx, int tmax);

}  // namespace lzext
