#pragma once

#include <string>
#include <vector>

#include "opkit/common.hpp"

namespace opkit {

/// Rooted planar tree node. A node is a leaf (no children) carrying a
/// label, or an internal vertex carrying a decoration (slot, idx) and an
/// ordered list of child subtrees. Shapes use label 0 and idx -1.
struct Tree {
    int label = 0;
    int slot = 0;
    int idx = -1;
    std::vector<Tree> ch;

    bool is_leaf() const { return ch.empty(); }
    int leaf_count() const;
    int vertex_count() const;
    int min_label() const;
    std::vector<int> leaf_labels() const;  // in planar (left-to-right) order
    std::string encode() const;

    bool operator==(const Tree& o) const;
    bool operator<(const Tree& o) const { return encode() < o.encode(); }

    static Tree leaf(int label) {
        Tree t;
        t.label = label;
        return t;
    }
    static Tree vertex(int slot, int idx, std::vector<Tree> children) {
        Tree t;
        t.slot = slot;
        t.idx = idx;
        t.ch = std::move(children);
        return t;
    }
    /// Corolla on labels lo..hi with the given decoration.
    static Tree corolla(int slot, int idx, int lo, int hi);
};

/// All planar rooted trees with n leaves and internal vertices of arity
/// >= 2, in a deterministic order. If k >= 0, only trees with exactly k
/// vertices are returned. Shapes carry label 0 and decoration -1.
std::vector<Tree> enumerate_planar(int n, int k = -1);

/// Grafts scion onto leaf i of host (1-based over host's labels). Labels
/// are re-indexed by the standard convention: host labels < i keep their
/// value, scion labels shift by i-1, host labels > i shift by the scion
/// leaf count minus one. Decorations are carried along unchanged.
Tree graft(const Tree& host, int i, const Tree& scion);

/// Simultaneous substitution of a tree into every vertex of t; the
/// assignment is indexed by depth-first pre-order vertex position and
/// each assigned tree's leaf count must equal the vertex arity.
Tree substitute(const Tree& t, const std::vector<Tree>& assignment);

enum class Sym { symmetric, antisymmetric, none };

/// Canonical representative of a leaf-labeled decorated tree under input
/// reordering at symmetric and antisymmetric vertices: children are
/// sorted by minimal leaf label, each swap at an antisymmetric vertex
/// flips the sign. Children of `none` vertices stay in place. Decoration
/// idx indexes into syms.
std::pair<Tree, int> canonical_form(const Tree& t, const std::vector<Sym>& syms);

/// Nested-term rendering, e.g. "mu(nu(1,3),2)"; gen_names indexes idx.
std::string render_tree(const Tree& t, const std::vector<std::string>& gen_names);

}  // namespace opkit
