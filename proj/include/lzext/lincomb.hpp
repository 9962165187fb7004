#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lzext/prime_field.hpp"

namespace lzext {

/* Finite F_p-linear combination of keys, stored as a sorted vector of
 * (key, nonzero coefficient). */
template <class Key>
class LinComb {
public:
    using Term = std::pair<Key, Scalar>;
    using Terms = std::vector<Term>;

    LinComb() = default;
    explicit LinComb(int p) : p_(p) {}
    LinComb(int p, const Key& k, Scalar c = 1) : p_(p) { add(k, c); }

    /* Sums arbitrary (possibly repeated, unreduced) terms. */
    static LinComb collect(int p, Terms raw)
    {
        LinComb r(p);
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        Terms& out = r.terms_;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size();) {
            std::uint64_t s = 0;
            std::size_t j = i;
            for (; j < raw.size() && raw[j].first == raw[i].first; ++j)
                s += raw[j].second;
            if (Scalar c = Scalar(s % std::uint64_t(p)))
                out.emplace_back(raw[i].first, c);
            i = j;
        }
        return r;
    }

    int prime() const { return p_; }

    void add(const Key& k, Scalar c)
    {
        c %= Scalar(p_);
        if (c == 0)
            return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const Key& key) { return t.first < key; });
        if (it != terms_.end() && it->first == k) {
            Scalar s = (it->second + c) % Scalar(p_);
            if (s == 0)
                terms_.erase(it);
            else
                it->second = s;
        } else {
            terms_.insert(it, Term{k, c});
        }
    }

    void add(const LinComb& o, Scalar c = 1)
    {
        c %= Scalar(p_);
        if (c == 0 || o.terms_.empty())
            return;
        Terms merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = o.terms_.begin(), be = o.terms_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else {
                Scalar v = Scalar(std::uint64_t(b->second) * c % Scalar(p_));
                if (a != ae && a->first == b->first) {
                    v = (v + a->second) % Scalar(p_);
                    ++a;
                }
                if (v)
                    merged.emplace_back(b->first, v);
                ++b;
            }
        }
        terms_ = std::move(merged);
    }
    void sub(const LinComb& o) { add(o, Scalar(p_ - 1)); }

    LinComb scaled(Scalar c) const
    {
        LinComb r(p_);
        c %= Scalar(p_);
        if (c == 0)
            return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_)
            t.second = Scalar(std::uint64_t(t.second) * c % Scalar(p_));
        return r;
    }

    Scalar coeff(const Key& k) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const Key& key) { return t.first < key; });
        return it != terms_.end() && it->first == k ? it->second : 0;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Terms& terms() const { return terms_; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

private:
    int p_ = 2;
    Terms terms_;
};

}  // namespace lzext
