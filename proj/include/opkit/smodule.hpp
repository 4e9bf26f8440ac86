#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opkit/matrix.hpp"
#include "opkit/perm.hpp"

namespace opkit {

/// Arity-graded basis with homological degrees, right symmetric-group
/// action stored on adjacent transpositions, and a degree -1 differential.
struct SModule {
    int cap = 0;  // arities 0..cap are stored
    std::vector<std::vector<int>> degs;           // [n][j]
    std::vector<std::vector<std::string>> names;  // [n][j]
    std::vector<std::vector<Matrix>> act;  // [n][i]: right action of (i+1, i+2)
    std::vector<Matrix> diff;              // [n]: d, square of size dim(n)

    SModule() = default;
    explicit SModule(int cap_);

    int dim(int n) const {
        return (n >= 0 && n <= cap) ? static_cast<int>(degs[n].size()) : 0;
    }
    int total_dim() const;
    void set_dims_ready();  // sizes act/diff containers after filling degs

    /// Composed right action of sigma on M(n); R(στ) = R(τ)R(σ).
    Matrix action(int n, const Permutation& sigma) const;

    /// Checks s_i^2 = id, braid and commutation relations, d^2 = 0,
    /// d equivariance, and degree homogeneity of d and actions.
    void validate() const;
};

using SModulePtr = std::shared_ptr<const SModule>;

SModule unit_module(int cap);  // I: one degree-0 element in arity 1
SModule direct_sum(const SModule& a, const SModule& b);
/// Degree shift by `shift`; basis and actions are kept, names prefixed.
SModule suspend(const SModule& m, int shift, const std::string& prefix);

/// Equivariant degree-homogeneous map between S-modules.
struct SModuleMorphism {
    SModulePtr source, target;
    int degree = 0;
    std::vector<Matrix> comp;  // [n]: dim target(n) x dim source(n)

    Matrix component(int n) const;
    void validate() const;  // equivariance + degree homogeneity
};

SModuleMorphism identity_morphism(const SModulePtr& m);

/// (M ⊗ N)(n) = ⊕_{i+j=n} M(i) ⊗ N(j) ⊗ K[Sh(i,j)]; the basis is
/// indexed by (a, b, first-block slot set), the action recomposes the
/// shuffle cosets. Degrees add.
struct TensorProduct {
    SModule mod;
    // basis element n -> (i, a, b, slots of the first block, sorted)
    struct Item {
        int i, a, b;
        std::vector<int> slots;
    };
    std::vector<std::vector<Item>> items;
};
TensorProduct tensor_product(const SModule& a, const SModule& b, int cap);

}  // namespace opkit
