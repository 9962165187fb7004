#pragma once

#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "lzext/prime_field.hpp"

namespace lzext {

/* Sorted (index, nonzero coefficient) pairs. */
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec unit_vector(int index);

/* Row echelon form over F_p with provenance tags: every stored row equals the
 * combination of inserted vectors recorded in its tag. */
class Echelon {
public:
    Echelon(Prime p, int dim, int tag_dim = 0);
    Echelon(const Echelon&) = delete;
    Echelon& operator=(const Echelon&) = delete;

    struct Reduced {
        SparseVec remainder;
        SparseVec tag;
    };

    /* remainder = v - sum c_r row_r, tag = tag - sum c_r tag_r. */
    Reduced reduce(const SparseVec& v, const SparseVec& tag = {}) const;

    /* Returns the reduced tag when v was dependent (a kernel vector for tagged inserts). */
    std::optional<SparseVec> insert(const SparseVec& v, const SparseVec& tag = {});

    bool contains(const SparseVec& v) const { return reduce(v).remainder.empty(); }
    int rank() const { return int(rows_.size()); }
    int dim() const { return dim_; }
    const Prime& prime() const { return p_; }
    /* Column indices that carry a pivot, ascending. */
    std::vector<int> pivots() const;

private:
    struct Row {
        SparseVec v;
        SparseVec tag;
    };
    Prime p_;
    int dim_;
    int tag_dim_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
    mutable std::mutex scratch_mu_;
    mutable std::vector<Scalar> dense_, tag_dense_;
};

struct KernelResult {
    int rank = 0;
    std::vector<SparseVec> kernel;
};

/* columns[j] is the image of the j-th source basis vector in a space of dimension target_dim. */
KernelResult kernel_and_rank(Prime p, const std::vector<SparseVec>& columns, int target_dim);

}  // namespace lzext
