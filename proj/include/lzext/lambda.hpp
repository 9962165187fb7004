#pragma once

#include <array>
#include <cstddef>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <vector>

#include "lzext/lincomb.hpp"
#include "lzext/prime_field.hpp"

namespace lzext {

/* The generator printed as l^e_{i-1} is stored with index i.
 * At p = 2 the generator l_n stores index n and e = 0. */
class Gen {
public:
    constexpr Gen() = default;
    constexpr Gen(int eps, int idx) : code_((idx << 1) | eps) {}

    constexpr int eps() const { return code_ & 1; }
    constexpr int idx() const { return code_ >> 1; }
    constexpr std::int32_t code() const { return code_; }
    static constexpr Gen from_code(std::int32_t c)
    {
        Gen g;
        g.code_ = c;
        return g;
    }

    /* lexicographic on (index, eps) */
    constexpr auto operator<=>(const Gen&) const = default;

private:
    std::int32_t code_ = 0;
};

/* Up to kMaxLength generators packed as 16-bit codes. */
class Monomial {
public:
    static constexpr int kMaxLength = 10;
    static constexpr int kMaxIndex = (1 << 15) - 1;

    class Iterator {
    public:
        using value_type = Gen;
        using difference_type = std::ptrdiff_t;
        Iterator() = default;
        explicit Iterator(const std::uint16_t* p) : p_(p) {}
        Gen operator*() const { return Gen::from_code(*p_); }
        Iterator& operator++()
        {
            ++p_;
            return *this;
        }
        Iterator operator++(int)
        {
            Iterator r = *this;
            ++p_;
            return r;
        }
        bool operator==(const Iterator&) const = default;

    private:
        const std::uint16_t* p_ = nullptr;
    };

    Monomial() = default;
    Monomial(std::initializer_list<Gen> gens);

    int length() const { return n_; }
    bool empty() const { return n_ == 0; }
    Gen operator[](int k) const { return Gen::from_code(g_[std::size_t(k)]); }
    Gen front() const { return (*this)[0]; }
    Gen back() const { return (*this)[n_ - 1]; }
    Iterator begin() const { return Iterator(g_.data()); }
    Iterator end() const { return Iterator(g_.data() + n_); }

    void push_back(Gen g);
    Monomial slice(int from, int to) const;
    Monomial operator*(const Monomial& o) const;
    static Monomial prepend(Gen g, const Monomial& m);

    /* length first, then lexicographic */
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return n_ == o.n_ && g_ == o.g_; }

    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxLength> g_{};
    std::uint8_t n_ = 0;
};

struct GenHash {
    std::size_t operator()(Gen g) const { return std::hash<std::int32_t>()(g.code()); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using LambdaElement = LinComb<Monomial>;
using LambdaRef = std::shared_ptr<const LambdaElement>;

/* The lambda algebra in the opposite-algebra convention. Elements handed out by
 * normalize/multiply/differential are in the admissible basis. Instances share
 * their memo tables on copy; all methods are safe to call concurrently. */
class LambdaAlgebra {
public:
    explicit LambdaAlgebra(Prime p);

    const Prime& prime() const { return p_; }
    int p() const { return p_.value(); }
    bool odd() const { return p_.odd(); }

    bool legal(Gen g) const;
    int degree(Gen g) const;
    int degree(const Monomial& m) const;
    int excess(const Monomial& m) const;
    bool admissible(Gen left, Gen right) const;
    bool admissible(const Monomial& m) const;

    LambdaElement zero() const { return LambdaElement(p()); }
    LambdaElement unit() const { return LambdaElement(p(), Monomial{}); }
    LambdaElement element(const Monomial& m, Scalar c = 1) const { return LambdaElement(p(), m, c); }

    /* Single relation solved for an inadmissible pair; the right side may still be inadmissible. */
    LambdaElement rewrite_pair(Gen left, Gen right) const;

    LambdaElement normalize(const Monomial& raw) const;
    LambdaElement normalize(const LambdaElement& raw) const;
    /* Plain rewriting of the leftmost (resp. rightmost) inadmissible pair, without memo tables. */
    LambdaElement normalize_leftmost(const LambdaElement& raw) const;
    LambdaElement normalize_rightmost(const LambdaElement& raw) const;

    /* Normal form of w * g for admissible w. */
    LambdaRef right_multiply(const Monomial& w, Gen g) const;
    LambdaElement right_multiply(const LambdaElement& e, Gen g) const;

    LambdaElement multiply(const LambdaElement& a, const LambdaElement& b) const;

    LambdaElement generator_differential(Gen g) const;
    /* Raw Leibniz expansion of d(m), not normalized. */
    LambdaElement leibniz(const Monomial& m) const;
    /* d of an admissible monomial. */
    LambdaRef admissible_differential(const Monomial& m) const;
    LambdaElement differential(const Monomial& m) const;
    LambdaElement differential(const LambdaElement& e) const;

    /* Monomials of length <= depth get their products and differentials memoized. */
    void set_memo_depth(int depth);
    std::size_t memo_entries() const;
    void clear_memo() const;

    /* P0 at odd p, Sq0 at p = 2; false when the operation kills m. */
    bool power_op(const Monomial& m, Monomial& out) const;
    LambdaElement power_op(const LambdaElement& e) const;

    std::vector<Gen> generators_up_to(int degree) const;
    std::vector<Monomial> basis(int length, int degree) const;

private:
    struct Memo;
    const LambdaElement& pair_normal_form(Gen left, Gen right) const;
    LambdaElement compute_right_multiply(const Monomial& w, Gen g) const;
    LambdaElement compute_differential(const Monomial& m) const;

    Prime p_;
    std::shared_ptr<Memo> memo_;
};

}  // namespace lzext
