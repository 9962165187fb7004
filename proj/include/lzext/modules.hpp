#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lzext/lincomb.hpp"
#include "lzext/prime_field.hpp"

namespace lzext {

/* Dual basis vector a^eps b^[t] of H; the trivial module uses the single vector {0, 0}.
 * At p = 2 only eps = 0 occurs and b^[t] has degree t. */
struct ModuleBasis {
    int eps = 0;
    int t = 0;
    auto operator<=>(const ModuleBasis&) const = default;
};

using ModuleVector = LinComb<ModuleBasis>;

struct ModuleTerm {
    ModuleBasis v;
    Scalar coeff;
};

/* One operation b^e P^k at odd p; at p = 2, (0, k) is Sq^k and (1, 0) is Sq^1. */
struct SteenrodGen {
    int eps = 0;
    int k = 0;
};

enum class ModuleKind { Fp, P };

/* Finite-type right module over the Steenrod algebra, given on a dual basis. */
class RightModule {
public:
    explicit RightModule(Prime p) : p_(p) {}
    virtual ~RightModule() = default;

    const Prime& prime() const { return p_; }
    virtual ModuleKind kind() const = 0;
    virtual std::string name() const = 0;

    virtual std::vector<ModuleBasis> basis(int degree) const = 0;
    virtual int degree(const ModuleBasis& v) const = 0;
    virtual bool valid(const ModuleBasis& v) const = 0;

    /* v * b^eps P^k; zero is std::nullopt. */
    virtual std::optional<ModuleTerm> act(const ModuleBasis& v, int eps, int k) const = 0;
    /* Dual Kameko operation; zero is std::nullopt. */
    virtual std::optional<ModuleBasis> theta(const ModuleBasis& v) const = 0;

    ModuleVector act(const ModuleVector& v, int eps, int k) const;
    /* Applies the operations left to right. */
    ModuleVector act_monomial(const ModuleVector& v, const std::vector<SteenrodGen>& word) const;
    ModuleVector theta(const ModuleVector& v) const;

    /* Degree drop of b^eps P^k (Sq^k at p = 2). */
    int operation_degree(int eps, int k) const;

protected:
    Prime p_;
};

class TrivialModule final : public RightModule {
public:
    using RightModule::RightModule;
    ModuleKind kind() const override { return ModuleKind::Fp; }
    std::string name() const override { return "Fp"; }
    std::vector<ModuleBasis> basis(int degree) const override;
    int degree(const ModuleBasis&) const override { return 0; }
    bool valid(const ModuleBasis& v) const override { return v.eps == 0 && v.t == 0; }
    std::optional<ModuleTerm> act(const ModuleBasis& v, int eps, int k) const override;
    std::optional<ModuleBasis> theta(const ModuleBasis& v) const override { return v; }
    using RightModule::act;
    using RightModule::theta;
};

/* Reduced mod p homology of B Z/p. */
class LensHomology final : public RightModule {
public:
    using RightModule::RightModule;
    ModuleKind kind() const override { return ModuleKind::P; }
    std::string name() const override { return "P"; }
    std::vector<ModuleBasis> basis(int degree) const override;
    int degree(const ModuleBasis& v) const override;
    bool valid(const ModuleBasis& v) const override;
    std::optional<ModuleTerm> act(const ModuleBasis& v, int eps, int k) const override;
    std::optional<ModuleBasis> theta(const ModuleBasis& v) const override;
    using RightModule::act;
    using RightModule::theta;
};

std::unique_ptr<RightModule> make_module(ModuleKind kind, Prime p);
ModuleKind parse_module_kind(const std::string& s);

}  // namespace lzext
