#pragma once

#include "opkit/treespace.hpp"

namespace opkit {

/// Two-level tree realization of a composite S-module, carrying both the
/// tree basis and its S-module view.
struct CompositeSpace {
    TreeBasis basis;
    SModulePtr mod;  // basis.to_smodule()

    int dim(int n) const { return basis.dim(n); }
};

/// (M ∘ N)(n): root decorated by M, inputs decorated by N; the S_k
/// coinvariants are realized by min-label-ordered canonical trees.
/// Requires N(0) = 0.
CompositeSpace compose(const SModulePtr& m, const SModulePtr& n, int cap);

/// M ∘_(1) N: exactly one input slot carries an N decoration, all others
/// the unit.
CompositeSpace infinitesimal_composite(const SModulePtr& m, const SModulePtr& n,
                                       int cap);

SModulePtr with_unit(const SModulePtr& m);

/// f ∘' g : M1 ∘ N1 -> M2 ∘ (N1 ⊕ N2), the sum over input slots with the
/// Koszul sign of moving g past the root and the earlier inputs.
struct InfMorphism {
    CompositeSpace source;  // M1 ∘ N1
    CompositeSpace target;  // M2 ∘ (N1 ⊕ N2)
    std::vector<Matrix> comp;
};
InfMorphism infinitesimal_morphism(const SModuleMorphism& f,
                                   const SModuleMorphism& g, int cap);

}  // namespace opkit
