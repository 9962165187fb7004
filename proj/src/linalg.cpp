#include "lzext/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace lzext {

SparseVec unit_vector(int index)
{
    return {{index, 1}};
}

Echelon::Echelon(Prime p, int dim, int tag_dim)
    : p_(p), dim_(dim), tag_dim_(tag_dim), pivot_row_(std::size_t(dim), -1)
{
}

std::vector<int> Echelon::pivots() const
{
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
        if (pivot_row_[std::size_t(i)] >= 0)
            out.push_back(i);
    return out;
}

Echelon::Reduced Echelon::reduce(const SparseVec& v, const SparseVec& tag) const
{
    std::lock_guard lock(scratch_mu_);
    dense_.resize(std::size_t(dim_), 0);
    tag_dense_.resize(std::size_t(tag_dim_), 0);
    std::vector<int> support, tag_support;
    /* rows only touch indices at or after their pivot, so an ascending sweep suffices */
    std::priority_queue<int, std::vector<int>, std::greater<>> pending;
    auto touch = [&](int i, Scalar c) {
        if (i < 0 || i >= dim_)
            throw Error("vector index outside the echelon dimension");
        Scalar& d = dense_[std::size_t(i)];
        if (d == 0) {
            support.push_back(i);
            pending.push(i);
        }
        d = p_.add(d, c);
    };
    auto touch_tag = [&](int i, Scalar c) {
        if (i < 0 || i >= tag_dim_)
            throw Error("tag index outside the tag dimension");
        Scalar& d = tag_dense_[std::size_t(i)];
        if (d == 0)
            tag_support.push_back(i);
        d = p_.add(d, c);
    };
    for (auto [i, c] : v)
        touch(i, c);
    for (auto [i, c] : tag)
        touch_tag(i, c);
    int last = -1;
    while (!pending.empty()) {
        int i = pending.top();
        pending.pop();
        if (i == last)
            continue;
        last = i;
        Scalar c = dense_[std::size_t(i)];
        int r = pivot_row_[std::size_t(i)];
        if (c == 0 || r < 0)
            continue;
        Scalar m = p_.neg(c);
        const Row& row = rows_[std::size_t(r)];
        for (auto [j, x] : row.v)
            touch(j, p_.mul(x, m));
        for (auto [j, x] : row.tag)
            touch_tag(j, p_.mul(x, m));
    }
    auto take = [](std::vector<Scalar>& dense, std::vector<int>& sup) {
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        SparseVec out;
        for (int i : sup) {
            Scalar& c = dense[std::size_t(i)];
            if (c)
                out.emplace_back(i, c);
            c = 0;
        }
        return out;
    };
    Reduced out{take(dense_, support), take(tag_dense_, tag_support)};
    return out;
}

std::optional<SparseVec> Echelon::insert(const SparseVec& v, const SparseVec& tag)
{
    Reduced r = reduce(v, tag);
    if (r.remainder.empty())
        return std::move(r.tag);
    Scalar inv = p_.inverse(r.remainder.front().second);
    for (auto& [i, c] : r.remainder)
        c = p_.mul(c, inv);
    for (auto& [i, c] : r.tag)
        c = p_.mul(c, inv);
    int pivot = r.remainder.front().first;
    pivot_row_[std::size_t(pivot)] = int(rows_.size());
    rows_.push_back(Row{std::move(r.remainder), std::move(r.tag)});
    return std::nullopt;
}

KernelResult kernel_and_rank(Prime p, const std::vector<SparseVec>& columns, int target_dim)
{
    Echelon ech(p, target_dim, int(columns.size()));
    KernelResult out;
    for (int j = 0; j < int(columns.size()); ++j)
        if (auto k = ech.insert(columns[std::size_t(j)], unit_vector(j)))
            out.kernel.push_back(std::move(*k));
    out.rank = ech.rank();
    return out;
}

}  // namespace lzext
