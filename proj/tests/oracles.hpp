// Independent reference computations shared by the unit tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lzext/lambda.hpp"

namespace oracle {

inline std::int64_t power_mod(std::int64_t a, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    a %= p;
    for (; e; e >>= 1, a = a * a % p)
        if (e & 1)
            r = r * a % p;
    return r;
}

/* C(n, k) mod p for 0 <= k <= n from factorials: p-adic valuation plus the unit parts. */
inline std::int64_t binom_factorial(std::int64_t n, std::int64_t k, std::int64_t p)
{
    if (k < 0 || k > n)
        return 0;
    auto fact = [p](std::int64_t m, std::int64_t& val) {
        std::int64_t unit = 1;
        for (std::int64_t i = 2; i <= m; ++i) {
            std::int64_t x = i;
            while (x % p == 0) {
                x /= p;
                ++val;
            }
            unit = unit * (x % p) % p;
        }
        return unit;
    };
    std::int64_t vn = 0, vk = 0, vr = 0;
    std::int64_t un = fact(n, vn), uk = fact(k, vk), ur = fact(n - k, vr);
    if (vn - vk - vr > 0)
        return 0;
    return un * power_mod(uk * ur % p, p - 2, p) % p;
}

/* Admissible index strings of length s and degree d, straight from the defining inequalities. */
inline long admissible_count(int p, int s, int d)
{
    struct G {
        int eps, i, deg;
    };
    std::vector<G> gens;
    if (p == 2) {
        for (int n = 0; n <= d; ++n)
            gens.push_back({0, n, n});
    } else {
        for (int i = 0; 2 * i * (p - 1) - 1 <= d; ++i)
            for (int e = 0; e <= 1; ++e)
                if ((e == 1 && i >= 1) || e == 0)
                    if (int deg = 2 * i * (p - 1) - e; deg <= d)
                        gens.push_back({e, i, deg});
    }
    long count = 0;
    std::vector<G> word;
    auto rec = [&](auto&& self, int left) -> void {
        if (int(word.size()) == s) {
            count += left == 0;
            return;
        }
        for (const G& g : gens) {
            if (g.deg > left)
                continue;
            if (!word.empty()) {
                const G& prev = word.back();
                bool ok = p == 2 ? prev.i <= 2 * g.i : p * g.i - g.eps >= prev.i;
                if (!ok)
                    continue;
            }
            word.push_back(g);
            self(self, left - g.deg);
            word.pop_back();
        }
    };
    rec(rec, d);
    return count;
}

/* A random word of legal generators, each of degree at most max_gen_degree. */
inline lzext::Monomial random_word(std::mt19937_64& rng, int p, int length, int max_gen_degree)
{
    lzext::Monomial m;
    for (int k = 0; k < length; ++k) {
        if (p == 2) {
            m.push_back(lzext::Gen(0, int(rng() % std::uint64_t(max_gen_degree + 1))));
            continue;
        }
        int max_i = (max_gen_degree + 1) / (2 * (p - 1));
        int i = int(rng() % std::uint64_t(max_i + 1));
        int e = i == 0 ? 0 : int(rng() % 2);
        m.push_back(lzext::Gen(e, i));
    }
    return m;
}

}  // namespace oracle
