#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Residue in [0, p). */
using Scalar = std::uint32_t;

class Prime {
public:
    explicit Prime(int p);

    int value() const { return p_; }
    bool odd() const { return p_ != 2; }

    Scalar reduce(std::int64_t x) const
    {
        std::int64_t r = x % p_;
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const
    {
        Scalar s = a + b;
        return s >= static_cast<Scalar>(p_) ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>(std::uint64_t(a) * b % p_); }
    /* (-1)^e */
    Scalar sign(std::int64_t e) const { return (e & 1) ? Scalar(p_ - 1) : Scalar(1 % p_); }

    Scalar inverse(Scalar a) const;

    /* Coefficient of x^k in (1+x)^n, any integer n. */
    Scalar binom(std::int64_t n, std::int64_t k) const;

    bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
    Scalar small_binom(int n, int k) const;
    int p_;
    /* C(n, k) mod p for 0 <= k <= n < p, row-major p x p */
    std::shared_ptr<const std::vector<Scalar>> pascal_;
};

bool is_prime(int n);

}  // namespace lzext
