#include "lzext/modules.hpp"

namespace lzext {

int RightModule::operation_degree(int eps, int k) const
{
    if (!p_.odd())
        return eps ? 1 : k;
    return 2 * k * (p_.value() - 1) + eps;
}

ModuleVector RightModule::act(const ModuleVector& v, int eps, int k) const
{
    ModuleVector out(p_.value());
    for (auto& [b, c] : v)
        if (auto r = act(b, eps, k))
            out.add(r->v, p_.mul(c, r->coeff));
    return out;
}

ModuleVector RightModule::act_monomial(const ModuleVector& v, const std::vector<SteenrodGen>& word) const
{
    ModuleVector cur = v;
    for (const SteenrodGen& g : word)
        cur = act(cur, g.eps, g.k);
    return cur;
}

ModuleVector RightModule::theta(const ModuleVector& v) const
{
    ModuleVector out(p_.value());
    for (auto& [b, c] : v)
        if (auto r = theta(b))
            out.add(*r, c);
    return out;
}

std::vector<ModuleBasis> TrivialModule::basis(int degree) const
{
    if (degree == 0)
        return {ModuleBasis{0, 0}};
    return {};
}

std::optional<ModuleTerm> TrivialModule::act(const ModuleBasis& v, int eps, int k) const
{
    if (eps == 0 && k == 0)
        return ModuleTerm{v, 1};
    return std::nullopt;
}

int LensHomology::degree(const ModuleBasis& v) const
{
    return p_.odd() ? 2 * v.t + v.eps : v.t;
}

bool LensHomology::valid(const ModuleBasis& v) const
{
    if (!p_.odd())
        return v.eps == 0 && v.t >= 1;
    return (v.eps == 0 || v.eps == 1) && v.t >= 0 && v.t + v.eps > 0;
}

std::vector<ModuleBasis> LensHomology::basis(int degree) const
{
    if (degree <= 0)
        return {};
    if (!p_.odd())
        return {ModuleBasis{0, degree}};
    return {ModuleBasis{degree % 2, degree / 2}};
}

std::optional<ModuleTerm> LensHomology::act(const ModuleBasis& v, int eps, int k) const
{
    if (eps == 0 && k == 0)
        return ModuleTerm{v, 1};
    if (!p_.odd()) {
        int kk = eps ? 1 : k;
        int t = v.t - kk;
        if (t <= 0)
            return std::nullopt;
        Scalar c = p_.binom(t, kk);
        if (c == 0)
            return std::nullopt;
        return ModuleTerm{ModuleBasis{0, t}, c};
    }
    if (v.eps == 1 && eps == 1)
        return std::nullopt;
    int t = v.t - (p_.value() - 1) * k - eps;
    ModuleBasis r{v.eps + eps, t};
    if (t < 0 || !valid(r))
        return std::nullopt;
    Scalar c = p_.binom(t, k);
    if (c == 0)
        return std::nullopt;
    return ModuleTerm{r, c};
}

std::optional<ModuleBasis> LensHomology::theta(const ModuleBasis& v) const
{
    if (!p_.odd())
        return ModuleBasis{0, 2 * v.t + 1};
    if (v.eps == 0)
        return std::nullopt;
    return ModuleBasis{1, p_.value() * (v.t + 1) - 1};
}

std::unique_ptr<RightModule> make_module(ModuleKind kind, Prime p)
{
    if (kind == ModuleKind::Fp)
        return std::make_unique<TrivialModule>(p);
    return std::make_unique<LensHomology>(p);
}

ModuleKind parse_module_kind(const std::string& s)
{
    if (s == "Fp" || s == "F" || s == "fp")
        return ModuleKind::Fp;
    if (s == "P" || s == "H" || s == "p")
        return ModuleKind::P;
    throw Error("unknown module '" + s + "' (expected Fp or P)");
}

}  // namespace lzext
