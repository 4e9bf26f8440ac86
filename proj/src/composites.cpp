#include "opkit/composites.hpp"

namespace opkit {

CompositeSpace compose(const SModulePtr& m, const SModulePtr& n, int cap) {
    check(n->dim(0) == 0, "composition requires N(0) = 0");
    TreeBasis basis(TreeBasis::Family::two_level, {m, n}, cap);
    auto mod = std::make_shared<SModule>(basis.to_smodule());
    return CompositeSpace{std::move(basis), std::move(mod)};
}

CompositeSpace infinitesimal_composite(const SModulePtr& m, const SModulePtr& n,
                                       int cap) {
    TreeBasis basis(TreeBasis::Family::one_slot, {m, n}, cap);
    auto mod = std::make_shared<SModule>(basis.to_smodule());
    return CompositeSpace{std::move(basis), std::move(mod)};
}

SModulePtr with_unit(const SModulePtr& m) {
    return std::make_shared<SModule>(direct_sum(unit_module(m->cap), *m));
}

InfMorphism infinitesimal_morphism(const SModuleMorphism& f,
                                   const SModuleMorphism& g, int cap) {
    f.validate();
    g.validate();
    CompositeSpace source = compose(f.source, g.source, cap);
    auto mixed = std::make_shared<SModule>(direct_sum(*g.source, *g.target));
    CompositeSpace target = compose(f.target, mixed, cap);

    InfMorphism out{std::move(source), std::move(target), {}};
    const auto& src = out.source.basis;
    const auto& tgt = out.target.basis;
    for (int n = 0; n <= cap; ++n) {
        Matrix mat(tgt.dim(n), src.dim(n));
        for (int col = 0; col < src.dim(n); ++col) {
            const Tree& t = src.tree(n, col);
            int k = static_cast<int>(t.ch.size());
            int root_deg = treespace::decoration_degree(t, src.slots());
            Matrix froot = f.component(k);
            for (size_t j = 0; j < t.ch.size(); ++j) {
                // Koszul: g crosses the root and the earlier inputs
                int crossed = root_deg;
                for (size_t l = 0; l < j; ++l)
                    crossed += treespace::decoration_degree(t.ch[l], src.slots());
                int sign = ((g.degree & 1) && (crossed & 1)) ? -1 : 1;
                int a = static_cast<int>(t.ch[j].ch.size());
                Matrix gcomp = g.component(a);
                for (int r2 = 0; r2 < froot.rows(); ++r2) {
                    Rat cf = froot.at(r2, t.idx);
                    if (cf == 0) continue;
                    for (int c2 = 0; c2 < gcomp.rows(); ++c2) {
                        Rat cg = gcomp.at(c2, t.ch[j].idx);
                        if (cg == 0) continue;
                        Tree img = t;
                        img.idx = r2;
                        // untouched children embed as the N1 summand,
                        // child j lands in N2 behind the N1 block
                        for (size_t l = 0; l < img.ch.size(); ++l) {
                            if (l == j)
                                img.ch[l].idx = g.source->dim(a) + c2;
                        }
                        auto e = treespace::expand(img, tgt.slots());
                        Vec v = tgt.coords(n, e);
                        for (int r = 0; r < tgt.dim(n); ++r)
                            if (v[r] != 0) mat.add_at(r, col, v[r] * cf * cg * sign);
                    }
                }
            }
        }
        out.comp.push_back(std::move(mat));
    }
    return out;
}

}  // namespace opkit
