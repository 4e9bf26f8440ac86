#include "opkit/treespace.hpp"

#include <algorithm>
#include <functional>

namespace opkit {
namespace treespace {

int decoration_degree(const Tree& v, const Slots& slots) {
    check(!v.is_leaf(), "leaf has no decoration");
    int k = static_cast<int>(v.ch.size());
    const SModule& m = *slots.at(v.slot);
    check(v.idx >= 0 && v.idx < m.dim(k), "decoration index out of range");
    return m.degs[k][v.idx];
}

int tree_degree(const Tree& t, const Slots& slots) {
    if (t.is_leaf()) return 0;
    int d = decoration_degree(t, slots);
    for (const auto& c : t.ch) d += tree_degree(c, slots);
    return d;
}

Expansion scale(const Rat& c, Expansion e) {
    for (auto& t : e) t.c *= c;
    return e;
}

Expansion merge(Expansion e) {
    std::map<std::string, size_t> seen;
    Expansion out;
    for (auto& term : e) {
        if (term.c == 0) continue;
        std::string key = term.t.encode();
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = out.size();
            out.push_back(std::move(term));
        } else {
            out[it->second].c += term.c;
        }
    }
    Expansion nz;
    for (auto& t : out)
        if (t.c != 0) nz.push_back(std::move(t));
    return nz;
}

Expansion expand(const Tree& t, const Slots& slots) {
    if (t.is_leaf()) return {{Rat(1), t}};
    std::vector<Expansion> ce;
    for (const auto& c : t.ch) ce.push_back(expand(c, slots));
    Expansion out;
    std::vector<size_t> pick(ce.size(), 0);
    bool more = true;
    while (more) {
        Rat coeff(1);
        std::vector<Tree> children;
        for (size_t j = 0; j < ce.size(); ++j) {
            coeff *= ce[j][pick[j]].c;
            children.push_back(ce[j][pick[j]].t);
        }
        // sort children by minimal label, tracking the swap word and the
        // Koszul sign of permuting graded subtree blocks
        int sign = 1;
        std::vector<int> word;
        bool moved = true;
        while (moved) {
            moved = false;
            for (size_t i = 0; i + 1 < children.size(); ++i) {
                if (children[i].min_label() > children[i + 1].min_label()) {
                    int da = tree_degree(children[i], slots);
                    int db = tree_degree(children[i + 1], slots);
                    if ((da & 1) && (db & 1)) sign = -sign;
                    std::swap(children[i], children[i + 1]);
                    word.push_back(static_cast<int>(i) + 1);
                    moved = true;
                }
            }
        }
        int k = static_cast<int>(children.size());
        const SModule& m = *slots.at(t.slot);
        Vec dec(m.dim(k), Rat(0));
        check(t.idx >= 0 && t.idx < m.dim(k), "decoration index out of range");
        dec[t.idx] = 1;
        for (int w : word) dec = m.act[k][w - 1].apply(dec);
        for (int j = 0; j < m.dim(k); ++j) {
            if (dec[j] == 0) continue;
            out.push_back({coeff * sign * dec[j], Tree::vertex(t.slot, j, children)});
        }
        more = false;
        for (size_t j = pick.size(); j-- > 0;) {
            if (++pick[j] < ce[j].size()) {
                more = true;
                break;
            }
            pick[j] = 0;
        }
    }
    return merge(std::move(out));
}

namespace {

// pre-order positions of internal vertices, with prefix degree sums and
// subtree degrees
struct VertexInfo {
    std::vector<int> path;  // child indices from root
    int prefix_deg = 0;
    int subtree_deg = 0;
};

void collect_vertices(const Tree& t, const Slots& slots, std::vector<int>& path,
                      int& running, std::vector<VertexInfo>& out) {
    if (t.is_leaf()) return;
    VertexInfo info;
    info.path = path;
    info.prefix_deg = running;
    info.subtree_deg = tree_degree(t, slots);
    out.push_back(info);
    running += decoration_degree(t, slots);
    for (size_t i = 0; i < t.ch.size(); ++i) {
        path.push_back(static_cast<int>(i));
        collect_vertices(t.ch[i], slots, path, running, out);
        path.pop_back();
    }
}

std::vector<VertexInfo> vertex_infos(const Tree& t, const Slots& slots) {
    std::vector<VertexInfo> out;
    std::vector<int> path;
    int running = 0;
    collect_vertices(t, slots, path, running, out);
    return out;
}

const Tree& subtree_at(const Tree& t, const std::vector<int>& path) {
    const Tree* cur = &t;
    for (int i : path) cur = &cur->ch[i];
    return *cur;
}

Tree replace_at(const Tree& t, const std::vector<int>& path, size_t depth,
                const Tree& repl) {
    if (depth == path.size()) return repl;
    Tree out = t;
    out.ch[path[depth]] = replace_at(out.ch[path[depth]], path, depth + 1, repl);
    return out;
}

int post_leaf_degree_full(const Tree& t, int lbl, const Slots& slots) {
    // walk in pre-order; once the leaf is passed, accumulate decoration
    // degrees of later vertices
    int acc = 0;
    bool passed = false;
    std::function<void(const Tree&)> walk = [&](const Tree& node) {
        if (node.is_leaf()) {
            if (node.label == lbl) passed = true;
            return;
        }
        if (passed) acc += decoration_degree(node, slots);
        for (const auto& c : node.ch) walk(c);
    };
    walk(t);
    return acc;
}

Tree relabel_tree(const Tree& t, const std::vector<int>& map1based) {
    Tree out = t;
    if (out.is_leaf()) {
        out.label = map1based[out.label - 1];
        return out;
    }
    for (auto& c : out.ch) c = relabel_tree(c, map1based);
    return out;
}

}  // namespace

Expansion graft_signed(const Tree& host, int i, const Tree& scion,
                       const Slots& slots) {
    int sd = tree_degree(scion, slots);
    int post = post_leaf_degree_full(host, i, slots);
    int sign = ((sd & 1) && (post & 1)) ? -1 : 1;
    Tree g = graft(host, i, scion);
    return scale(Rat(sign), expand(g, slots));
}

Expansion act(const Tree& t, const Permutation& sigma, const Slots& slots) {
    Permutation inv = sigma.inverse();
    std::vector<int> map(sigma.size());
    for (int l = 1; l <= sigma.size(); ++l) map[l - 1] = inv(l);
    return expand(relabel_tree(t, map), slots);
}

Expansion apply_diff(const Tree& t, const Slots& slots) {
    Expansion out;
    for (const auto& info : vertex_infos(t, slots)) {
        const Tree& v = subtree_at(t, info.path);
        int k = static_cast<int>(v.ch.size());
        const SModule& m = *slots.at(v.slot);
        const Matrix& d = m.diff[k];
        int sign = (info.prefix_deg & 1) ? -1 : 1;
        for (int j = 0; j < m.dim(k); ++j) {
            Rat c = d.at(j, v.idx);
            if (c == 0) continue;
            Tree nv = v;
            nv.idx = j;
            Tree whole = replace_at(t, info.path, 0, nv);
            for (auto& term : expand(whole, slots))
                out.push_back({term.c * c * sign, term.t});
        }
    }
    return merge(std::move(out));
}

std::vector<Split> splits(const Tree& t, const Slots& slots) {
    std::vector<Split> out;
    auto infos = vertex_infos(t, slots);
    int total = tree_degree(t, slots);
    std::vector<int> tlabels = t.leaf_labels();
    for (const auto& info : infos) {
        if (info.path.empty()) continue;  // root split is the trivial one
        const Tree& lower_raw = subtree_at(t, info.path);
        std::vector<int> sub = lower_raw.leaf_labels();
        std::vector<int> sorted = sub;
        std::sort(sorted.begin(), sorted.end());
        int mn = sorted.front();
        // upper with the subtree replaced by a leaf labeled min(S)
        Tree upper_raw = replace_at(t, info.path, 0, Tree::leaf(mn));
        // standardize: upper labels (complement + mn) -> 1..m order-preserving
        std::vector<int> upper_labels = upper_raw.leaf_labels();
        std::vector<int> upper_sorted = upper_labels;
        std::sort(upper_sorted.begin(), upper_sorted.end());
        auto rank_up = [&](int l) {
            return static_cast<int>(std::lower_bound(upper_sorted.begin(),
                                                     upper_sorted.end(), l) -
                                    upper_sorted.begin()) +
                   1;
        };
        std::vector<int> upmap(*std::max_element(upper_sorted.begin(),
                                                 upper_sorted.end()),
                               0);
        for (int l : upper_sorted) upmap[l - 1] = rank_up(l);
        Tree upper = relabel_tree(upper_raw, upmap);
        auto rank_low = [&](int l) {
            return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), l) -
                                    sorted.begin()) +
                   1;
        };
        std::vector<int> lowmap(*std::max_element(sorted.begin(), sorted.end()), 0);
        for (int l : sorted) lowmap[l - 1] = rank_low(l);
        Tree lower = relabel_tree(lower_raw, lowmap);
        int at = rank_up(mn);
        // Koszul sign for extracting the lower block past the tail of the word
        int post = total - info.prefix_deg - info.subtree_deg;
        int sign = ((info.subtree_deg & 1) && (post & 1)) ? -1 : 1;
        // relabel map from standard-graft labels to t's labels, leaf by leaf
        Tree std_graft = graft(upper, at, lower);
        std::vector<int> glabels = std_graft.leaf_labels();
        check(glabels.size() == tlabels.size(), "split label count mismatch");
        int n = static_cast<int>(tlabels.size());
        std::vector<int> relmap(n, 0);
        for (int p = 0; p < n; ++p) relmap[glabels[p] - 1] = tlabels[p];
        out.push_back(Split{sign, upper, at, lower, relmap});
    }
    return out;
}

}  // namespace treespace

namespace {

using treespace::Slots;

// ordered-by-min set partitions of `labels` (sorted) into k nonempty blocks
void partitions_rec(const std::vector<int>& labels, int k,
                    std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (labels.empty()) {
        if (k == 0) out.push_back(cur);
        return;
    }
    if (k == 0 || static_cast<int>(labels.size()) < k) return;
    // first block contains labels[0]; choose the rest of it
    int rest = static_cast<int>(labels.size()) - 1;
    std::vector<int> tail(labels.begin() + 1, labels.end());
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> block = {labels[0]};
        std::vector<int> remain;
        for (int b = 0; b < rest; ++b) {
            if (mask & (1u << b))
                block.push_back(tail[b]);
            else
                remain.push_back(tail[b]);
        }
        cur.push_back(block);
        partitions_rec(remain, k - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::vector<int>>> min_ordered_partitions(
    const std::vector<int>& labels, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    partitions_rec(labels, k, cur, out);
    return out;
}

void free_trees_on(const std::vector<int>& labels, const SModulePtr& m,
                   std::vector<Tree>& out) {
    // all decorated trees with >= 1 vertex on the given sorted label set
    int n = static_cast<int>(labels.size());
    if (n < 2) return;
    for (int k = 2; k <= n; ++k) {
        if (m->dim(k) == 0) continue;
        for (const auto& part : min_ordered_partitions(labels, k)) {
            // for each block: leaf (size 1) or any subtree
            std::vector<std::vector<Tree>> choices;
            bool ok = true;
            for (const auto& block : part) {
                std::vector<Tree> opts;
                if (block.size() == 1) {
                    opts.push_back(Tree::leaf(block[0]));
                } else {
                    free_trees_on(block, m, opts);
                }
                if (opts.empty()) {
                    ok = false;
                    break;
                }
                choices.push_back(std::move(opts));
            }
            if (!ok) continue;
            std::vector<size_t> pick(choices.size(), 0);
            bool more = true;
            while (more) {
                std::vector<Tree> children;
                for (size_t j = 0; j < choices.size(); ++j)
                    children.push_back(choices[j][pick[j]]);
                for (int dec = 0; dec < m->dim(k); ++dec)
                    out.push_back(Tree::vertex(0, dec, children));
                more = false;
                for (size_t j = pick.size(); j-- > 0;) {
                    if (++pick[j] < choices[j].size()) {
                        more = true;
                        break;
                    }
                    pick[j] = 0;
                }
            }
        }
    }
}

}  // namespace

TreeBasis::TreeBasis(Family f, treespace::Slots slots, int cap)
    : family_(f), slots_(std::move(slots)), cap_(cap) {
    basis_.resize(cap + 1);
    index_.resize(cap + 1);
    for (int n = 1; n <= cap; ++n) {
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
        std::vector<Tree>& out = basis_[n];
        if (family_ == Family::free_trees) {
            const SModulePtr& m = slots_.at(0);
            check(m->dim(0) == 0 && m->dim(1) == 0,
                  "free tree space needs a module trivial in arities 0 and 1");
            if (n == 1) out.push_back(Tree::leaf(1));
            free_trees_on(labels, m, out);
        } else if (family_ == Family::two_level) {
            const SModulePtr& m = slots_.at(0);
            const SModulePtr& nmod = slots_.at(1);
            for (int k = 1; k <= n; ++k) {
                if (m->dim(k) == 0) continue;
                for (const auto& part : min_ordered_partitions(labels, k)) {
                    bool ok = true;
                    for (const auto& block : part)
                        if (nmod->dim(static_cast<int>(block.size())) == 0) ok = false;
                    if (!ok) continue;
                    // corolla choices per block
                    std::vector<int> dims;
                    for (const auto& block : part)
                        dims.push_back(nmod->dim(static_cast<int>(block.size())));
                    std::vector<int> pick(part.size(), 0);
                    bool more = true;
                    while (more) {
                        for (int dec = 0; dec < m->dim(k); ++dec) {
                            std::vector<Tree> children;
                            for (size_t j = 0; j < part.size(); ++j) {
                                std::vector<Tree> leaves;
                                for (int l : part[j]) leaves.push_back(Tree::leaf(l));
                                children.push_back(Tree::vertex(1, pick[j], leaves));
                            }
                            out.push_back(Tree::vertex(0, dec, children));
                        }
                        more = false;
                        for (size_t j = pick.size(); j-- > 0;) {
                            if (++pick[j] < dims[j]) {
                                more = true;
                                break;
                            }
                            pick[j] = 0;
                        }
                    }
                }
            }
        } else {  // one_slot: root in slot 0, one slot-1 corolla, rest leaves
            const SModulePtr& m = slots_.at(0);
            const SModulePtr& nmod = slots_.at(1);
            for (int j = 1; j <= n; ++j) {  // arity of the marked corolla
                if (nmod->dim(j) == 0) continue;
                int k = n - j + 1;
                if (k < 1 || m->dim(k) == 0) continue;
                // choose the marked label set
                std::vector<int> sel(j);
                std::function<void(int, int)> choose = [&](int start, int got) {
                    if (got == j) {
                        std::vector<Tree> leavesm;
                        for (int l : sel) leavesm.push_back(Tree::leaf(l));
                        for (int nd = 0; nd < nmod->dim(j); ++nd) {
                            Tree corolla = Tree::vertex(1, nd, leavesm);
                            // children: singleton leaves + corolla, sorted by min
                            std::vector<Tree> children;
                            for (int l = 1; l <= n; ++l) {
                                bool in_sel =
                                    std::find(sel.begin(), sel.end(), l) != sel.end();
                                if (in_sel) {
                                    if (l == sel[0]) children.push_back(corolla);
                                } else {
                                    children.push_back(Tree::leaf(l));
                                }
                            }
                            for (int dec = 0; dec < m->dim(k); ++dec)
                                out.push_back(Tree::vertex(0, dec, children));
                        }
                        return;
                    }
                    for (int l = start; l <= n; ++l) {
                        sel[got] = l;
                        choose(l + 1, got + 1);
                    }
                };
                choose(1, 0);
            }
        }
        for (size_t j = 0; j < out.size(); ++j) index_[n][out[j].encode()] = static_cast<int>(j);
    }
}

int TreeBasis::dim(int n) const {
    return (n >= 1 && n <= cap_) ? static_cast<int>(basis_[n].size()) : 0;
}

int TreeBasis::index_of(int n, const Tree& canonical) const {
    if (n < 1 || n > cap_) return -1;
    auto it = index_[n].find(canonical.encode());
    return it == index_[n].end() ? -1 : it->second;
}

Vec TreeBasis::coords(int n, const treespace::Expansion& e) const {
    Vec v(dim(n), Rat(0));
    for (const auto& term : e) {
        int j = index_of(n, term.t);
        check(j >= 0, "expansion term outside basis: " + term.t.encode());
        v[j] += term.c;
    }
    return v;
}

treespace::Expansion TreeBasis::expansion_of(int n, const Vec& v) const {
    check(static_cast<int>(v.size()) == dim(n), "coordinate size mismatch");
    treespace::Expansion e;
    for (int j = 0; j < dim(n); ++j)
        if (v[j] != 0) e.push_back({v[j], basis_[n][j]});
    return e;
}

SModule TreeBasis::to_smodule() const {
    SModule m(cap_);
    for (int n = 1; n <= cap_; ++n) {
        for (const auto& t : basis_[n]) {
            m.degs[n].push_back(t.is_leaf() ? 0 : treespace::tree_degree(t, slots_));
            m.names[n].push_back(t.encode());
        }
    }
    m.set_dims_ready();
    for (int n = 1; n <= cap_; ++n) {
        int d = dim(n);
        for (int i = 0; i < n - 1; ++i) {
            Matrix a(d, d);
            Permutation s = Permutation::transposition(n, i + 1);
            for (int j = 0; j < d; ++j) {
                if (basis_[n][j].is_leaf()) {
                    a.set(j, j, 1);
                    continue;
                }
                Vec col = coords(n, treespace::act(basis_[n][j], s, slots_));
                for (int r = 0; r < d; ++r)
                    if (col[r] != 0) a.set(r, j, col[r]);
            }
            m.act[n][i] = a;
        }
        Matrix dm(d, d);
        for (int j = 0; j < d; ++j) {
            if (basis_[n][j].is_leaf()) continue;
            Vec col = coords(n, treespace::apply_diff(basis_[n][j], slots_));
            for (int r = 0; r < d; ++r)
                if (col[r] != 0) dm.set(r, j, col[r]);
        }
        m.diff[n] = dm;
    }
    return m;
}

}  // namespace opkit
