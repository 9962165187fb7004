#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lzext/complex.hpp"

namespace lzext {

struct DSquareReport {
    long checked = 0;
    long failures = 0;
    std::vector<ChainKey> failing;
};

/* Evaluates d(d(l (x) h)) for every basis vector l (x) h with length s <= smax and
 * total degree t <= tmax. Work is organized per lambda monomial so that the
 * lambda-side products are shared by all module vectors paired with it. */
DSquareReport check_d_squared(const Complex& complex, int smax, int tmax,
                              const std::function<void(int s, long checked)>& progress = {});

}  // namespace lzext
