#include "lzext/prime_field.hpp"

namespace lzext {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(int p) : p_(p)
{
    if (!is_prime(p))
        throw Error("not a prime: " + std::to_string(p));
    if (p > 46337)
        throw Error("prime too large for 32-bit residue products");
    if (p <= 1024) {
        auto t = std::make_shared<std::vector<Scalar>>(std::size_t(p) * std::size_t(p), 0);
        for (int n = 0; n < p; ++n) {
            (*t)[std::size_t(n * p)] = 1;
            for (int k = 1; k <= n; ++k)
                (*t)[std::size_t(n * p + k)] = add((*t)[std::size_t((n - 1) * p + k - 1)], (*t)[std::size_t((n - 1) * p + k)]);
        }
        pascal_ = std::move(t);
    }
}

Scalar Prime::inverse(Scalar a) const
{
    a %= p_;
    if (a == 0)
        throw Error("non-invertible");
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1, r1 = r2, s0 = s1, s1 = s2;
    }
    return reduce(s0);
}

Scalar Prime::small_binom(int n, int k) const
{
    /* 0 <= k <= n < p */
    if (pascal_)
        return (*pascal_)[std::size_t(n * p_ + k)];
    Scalar num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
        num = mul(num, Scalar(n - j));
        den = mul(den, Scalar(j + 1));
    }
    return mul(num, inverse(den));
}

Scalar Prime::binom(std::int64_t n, std::int64_t k) const
{
    if (k < 0)
        return 0;
    if (n < 0) {
        Scalar c = binom(k - n - 1, k);
        return (k & 1) ? neg(c) : c;
    }
    if (k > n)
        return 0;
    Scalar r = 1;
    while (k > 0) {
        int nd = int(n % p_), kd = int(k % p_);
        if (kd > nd)
            return 0;
        r = mul(r, small_binom(nd, kd));
        n /= p_;
        k /= p_;
    }
    return r;
}

}  // namespace lzext
