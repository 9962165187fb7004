#include "lzext/lz.hpp"

namespace lzext {

std::string Provenance::describe() const
{
    std::string out;
    auto add = [&](const char* w) {
        if (!out.empty())
            out += '+';
        out += w;
    };
    if (excess)
        add("excess");
    if (relation)
        add("relation");
    if (hit)
        add("hit");
    return out.empty() ? "none" : out;
}

Scalar LannesZarati::sign(int s) const
{
    const Prime& F = complex().prime();
    if (!F.odd() || s < 1)
        return 1;
    return F.sign((s - 1) * (s - 2) / 2);
}

QElement LannesZarati::image(const ChainElement& c) const
{
    if (c.empty())
        return c;
    return dl_.project(c).scaled(sign(c.begin()->first.lambda.length()));
}

namespace {

void finish(const DyerLashof& dl, LZEvaluation& ev)
{
    ev.zero = ev.image.empty();
    ev.annihilated = dl.annihilated(ev.image);
    if (!ev.zero)
        ev.provenance.hit = dl.hit(ev.image);
}

}  // namespace

LZEvaluation LannesZarati::phi(const ChainElement& cycle) const
{
    LZEvaluation ev;
    if (cycle.empty())
        return ev;
    ev.bidegree = complex().bidegree(cycle);
    if (!complex().differential(cycle).empty())
        throw Error("the Lannes-Zarati map is evaluated on cycles only");
    for (auto& [k, c] : cycle)
        if (!dl_.in_basis(k))
            ev.provenance.excess = true;
    ev.image = image(cycle);
    finish(dl_, ev);
    return ev;
}

LZEvaluation LannesZarati::phi_raw(const ChainElement& raw) const
{
    LZEvaluation ev = trace(raw);
    if (!raw.empty()) {
        ChainElement normal = complex().normalize(raw);
        if (!normal.empty() && !complex().differential(normal).empty())
            throw Error("the Lannes-Zarati map is evaluated on cycles only");
    }
    return ev;
}

LZEvaluation LannesZarati::trace(const ChainElement& raw) const
{
    LZEvaluation ev;
    if (raw.empty())
        return ev;
    const LambdaAlgebra& A = complex().algebra();
    const RightModule& M = complex().module();
    ChainElement survivors = complex().zero();
    for (auto& [k, c] : raw) {
        if (!k.lambda.empty() && A.excess(k.lambda) < M.degree(k.h))
            ev.provenance.excess = true;
        else
            survivors.add(k, c);
    }
    ChainElement normal = complex().normalize(raw);
    ev.bidegree = complex().bidegree(normal.empty() ? raw : normal);
    if (!survivors.empty() && dl_.reduce(survivors).empty())
        ev.provenance.relation = true;
    ev.image = image(normal);
    finish(dl_, ev);
    return ev;
}

LannesZarati::ExtMap LannesZarati::on_ext(int s, int t) const
{
    ExtMap out;
    out.bidegree = {s, t};
    ExtGroup g = complex().ext(s, t);
    const DualCell& cell = dl_.cell(s, t);
    out.ext_dim = g.dimension;
    out.target_dim = int(cell.annihilated.size());
    out.coinvariant_dim = cell.coinvariant_dim();
    out.dual_dim = int(cell.basis.size());
    const Prime& F = complex().prime();
    const int n = int(cell.basis.size());
    Echelon img(F, n, g.dimension);
    for (int j = 0; j < g.dimension; ++j) {
        QElement q = image(g.classes[std::size_t(j)].representative);
        if (!dl_.annihilated(q))
            out.images_annihilated = false;
        if (auto dep = img.insert(dl_.coordinates(q, {s, t}), unit_vector(j))) {
            ChainElement k = complex().zero();
            for (auto [i, c] : *dep)
                k.add(g.classes[std::size_t(i)].representative, c);
            out.kernel.push_back(std::move(k));
        }
        out.images.push_back(std::move(q));
    }
    out.rank = img.rank();
    for (const SparseVec& v : cell.annihilated)
        if (!img.contains(v)) {
            img.insert(v);
            out.cokernel.push_back(dl_.from_coordinates(v, {s, t}));
        }
    return out;
}

bool LannesZarati::power_square(const ChainElement& cycle) const
{
    QElement left = image(complex().power_op(cycle));
    QElement right = dl_.power_op(image(cycle));
    return left == right;
}

}  // namespace lzext
