#pragma once

#include <map>
#include <optional>

#include "opkit/smodule.hpp"
#include "opkit/tree.hpp"

namespace opkit {

/// Linear calculus of decorated leaf-labeled trees over a list of
/// decoration modules ("slots"): a vertex with slot s and index j stands
/// for the j-th basis element of slots[s] in the vertex arity.
///
/// Canonical monomials have every child list sorted by minimal leaf
/// label. Reordering children transforms the vertex decoration by the
/// right action of the sorting permutation and multiplies by the Koszul
/// sign of permuting the (graded) child subtree blocks. Tensor factors
/// are ordered by depth-first pre-order throughout; every Koszul sign is
/// computed against that word order.
namespace treespace {

using Slots = std::vector<SModulePtr>;

struct Term {
    Rat c;
    Tree t;
};
using Expansion = std::vector<Term>;

int tree_degree(const Tree& t, const Slots& slots);
int decoration_degree(const Tree& vertex_node, const Slots& slots);

/// Canonical expansion of an arbitrary planar decorated tree.
Expansion expand(const Tree& t, const Slots& slots);

Expansion scale(const Rat& c, Expansion e);
Expansion merge(Expansion e);  // combine equal monomials, drop zeros

/// Standard-convention graft of scion onto leaf i of host, including the
/// Koszul block sign for inserting the scion word at the leaf position.
Expansion graft_signed(const Tree& host, int i, const Tree& scion, const Slots& slots);

/// Right action by sigma: leaf labels move by sigma^{-1}, then canonicalize.
Expansion act(const Tree& t, const Permutation& sigma, const Slots& slots);

/// Differential: sum over vertices of the slot module differential with
/// Koszul prefix signs.
Expansion apply_diff(const Tree& t, const Slots& slots);

/// One pendant-subtree extraction: t = sign * relabel(graft(upper, slot_leaf,
/// lower), relmap) where relmap sends standard graft labels to t's labels.
struct Split {
    int sign;
    Tree upper;  // canonical, standard labels 1..m
    int at;      // which leaf of upper received the lower part
    Tree lower;  // canonical, standard labels 1..k
    std::vector<int> relmap;  // [standard label - 1] -> t's label
};
/// All splits at non-root vertices (reduced infinitesimal decomposition
/// of the cofree tree space).
std::vector<Split> splits(const Tree& t, const Slots& slots);

}  // namespace treespace

/// A concrete basis of canonical decorated trees per arity.
class TreeBasis {
public:
    enum class Family {
        free_trees,     // all trees over slot 0 (slot0 arity >= 2 required)
        two_level,      // root in slot 0, children are slot-1 corollas
        one_slot,       // root in slot 0, one slot-1 corolla, rest leaves
    };

    TreeBasis(Family f, treespace::Slots slots, int cap);

    const treespace::Slots& slots() const { return slots_; }
    int cap() const { return cap_; }
    int dim(int n) const;
    const std::vector<Tree>& basis(int n) const { return basis_[n]; }
    const Tree& tree(int n, int j) const { return basis_[n][j]; }
    int weight(int n, int j) const { return basis_[n][j].vertex_count(); }
    int index_of(int n, const Tree& canonical) const;  // -1 if absent

    Vec coords(int n, const treespace::Expansion& e) const;
    treespace::Expansion expansion_of(int n, const Vec& v) const;

    /// Underlying S-module view with degrees, actions, differential.
    SModule to_smodule() const;

private:
    Family family_;
    treespace::Slots slots_;
    int cap_;
    std::vector<std::vector<Tree>> basis_;
    std::vector<std::map<std::string, int>> index_;
};

}  // namespace opkit
