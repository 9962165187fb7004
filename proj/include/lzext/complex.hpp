#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lzext/lambda.hpp"
#include "lzext/linalg.hpp"
#include "lzext/modules.hpp"

namespace lzext {

/* Basis vector lambda_I (x) h of the complex; also used for Q^I (x) l on the Dyer-Lashof side. */
struct ChainKey {
    Monomial lambda;
    ModuleBasis h;
    std::strong_ordering operator<=>(const ChainKey& o) const
    {
        if (auto c = lambda <=> o.lambda; c != 0)
            return c;
        return h <=> o.h;
    }
    bool operator==(const ChainKey& o) const { return lambda == o.lambda && h == o.h; }
};

struct ChainKeyHash {
    std::size_t operator()(const ChainKey& k) const
    {
        return k.lambda.hash() ^ (std::size_t(k.h.t * 2 + k.h.eps) * 0x9e3779b97f4a7c15ULL);
    }
};

using ChainElement = LinComb<ChainKey>;

struct Bidegree {
    int s = 0;
    int t = 0;
    auto operator<=>(const Bidegree&) const = default;
};

struct ExtClass {
    Bidegree bidegree;
    ChainElement representative;
    std::string name;
};

struct ExtGroup {
    Bidegree bidegree;
    int dimension = 0;
    int cycles = 0;
    int boundaries = 0;
    std::vector<ExtClass> classes;
};

/* Generator g paired with the operation b^eps P^k (Sq^k at p = 2) in the differential. */
struct Attachment {
    Gen g;
    int eps = 0;
    int k = 0;
    int degree = 0;
};

/* The cochain complex Lambda (x) M^#, graded by length s and total degree t. */
class Complex {
public:
    Complex(LambdaAlgebra algebra, std::shared_ptr<const RightModule> module);

    const LambdaAlgebra& algebra() const { return alg_; }
    const RightModule& module() const { return *mod_; }
    const Prime& prime() const { return alg_.prime(); }
    int p() const { return alg_.p(); }

    void set_basis_cap(std::size_t cap) { basis_cap_ = cap; }

    int total_degree(const ChainKey& k) const;
    Bidegree bidegree(const ChainElement& c) const;
    ChainElement zero() const { return ChainElement(p()); }
    ChainElement element(const ChainKey& k, Scalar c = 1) const { return ChainElement(p(), k, c); }

    std::vector<ChainKey> basis(int s, int t) const;

    ChainElement normalize(const ChainElement& raw) const;

    /* d(l (x) h) = d(l) (x) h + sum over attachments a with a.degree <= |h| of
     * sign * (l g_a) (x) (h b^eps P^k). */
    std::span<const Attachment> attachments(int max_degree) const;
    Scalar attachment_sign(int lambda_degree, int h_degree, const Attachment& a) const;
    ChainElement differential(const ChainKey& k) const;
    ChainElement differential(const ChainElement& c) const;
    /* Column j is d of the j-th basis vector of (s, t) in the basis of (s + 1, t - 1). */
    std::vector<SparseVec> differential_matrix(int s, int t) const;

    ExtGroup ext(int s, int t) const;
    std::optional<ChainElement> boundary_witness(const ChainElement& cycle) const;
    bool is_boundary(const ChainElement& cycle) const { return boundary_witness(cycle).has_value(); }
    /* Coordinates of the class of a cycle in the basis returned by ext(). */
    SparseVec ext_coordinates(const ChainElement& cycle) const;

    ChainElement power_op(const ChainElement& c) const;
    /* Keeps the terms whose module factor has degree > n. */
    ChainElement truncate(const ChainElement& c, int n) const;
    ChainElement product(const LambdaElement& l, const ChainElement& c) const;

    SparseVec coordinates(const ChainElement& c, Bidegree bd) const;
    ChainElement from_coordinates(const SparseVec& v, Bidegree bd) const;

private:
    struct Cell {
        std::vector<ChainKey> basis;
        std::unordered_map<ChainKey, int, ChainKeyHash> index;
        std::vector<ChainKey> source_basis;
        std::unique_ptr<Echelon> boundaries;
        std::unique_ptr<Echelon> classes;
        int cycles = 0;
        std::vector<ChainElement> reps;
    };
    const Cell& cell(int s, int t) const;
    const std::vector<ChainKey>& cached_basis(int s, int t) const;

    LambdaAlgebra alg_;
    std::shared_ptr<const RightModule> mod_;
    std::size_t basis_cap_ = 4'000'000;

    std::vector<Attachment> attachments_;
    mutable std::map<Bidegree, std::unique_ptr<Cell>> cells_;
    mutable std::map<Bidegree, std::unique_ptr<std::vector<ChainKey>>> bases_;
    mutable std::mutex cell_mu_;
};

}  // namespace lzext
