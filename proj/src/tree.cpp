#include "opkit/tree.hpp"

#include <algorithm>
#include <functional>

namespace opkit {

int Tree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : ch) n += c.leaf_count();
    return n;
}

int Tree::vertex_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : ch) n += c.vertex_count();
    return n;
}

int Tree::min_label() const {
    if (is_leaf()) return label;
    int m = ch[0].min_label();
    for (size_t i = 1; i < ch.size(); ++i) m = std::min(m, ch[i].min_label());
    return m;
}

std::vector<int> Tree::leaf_labels() const {
    std::vector<int> out;
    if (is_leaf()) {
        out.push_back(label);
        return out;
    }
    for (const auto& c : ch) {
        auto sub = c.leaf_labels();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::string Tree::encode() const {
    if (is_leaf()) return "L" + std::to_string(label);
    std::string s = "V" + std::to_string(slot) + ":" + std::to_string(idx) + "(";
    for (size_t i = 0; i < ch.size(); ++i) {
        if (i) s += ",";
        s += ch[i].encode();
    }
    return s + ")";
}

bool Tree::operator==(const Tree& o) const {
    if (label != o.label || slot != o.slot || idx != o.idx || ch.size() != o.ch.size())
        return false;
    for (size_t i = 0; i < ch.size(); ++i)
        if (!(ch[i] == o.ch[i])) return false;
    return true;
}

Tree Tree::corolla(int slot, int idx, int lo, int hi) {
    std::vector<Tree> leaves;
    for (int l = lo; l <= hi; ++l) leaves.push_back(Tree::leaf(l));
    return Tree::vertex(slot, idx, std::move(leaves));
}

namespace {

void enumerate_rec(int n, std::vector<Tree>& out);

// all ways to write n = n_1 + ... + n_m with m >= 2 parts, each >= 1
void compositions(int n, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 1) {
        if (n >= 1) {
            cur.push_back(n);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= n - (m - 1); ++first) {
        cur.push_back(first);
        compositions(n - first, m - 1, cur, out);
        cur.pop_back();
    }
}

void enumerate_rec(int n, std::vector<Tree>& out) {
    if (n == 1) {
        out.push_back(Tree::leaf(0));
        return;
    }
    for (int m = 2; m <= n; ++m) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, m, cur, comps);
        for (const auto& comp : comps) {
            std::vector<std::vector<Tree>> choices;
            for (int part : comp) {
                std::vector<Tree> sub;
                enumerate_rec(part, sub);
                choices.push_back(std::move(sub));
            }
            std::vector<size_t> pick(comp.size(), 0);
            bool more = true;
            while (more) {
                std::vector<Tree> children;
                for (size_t j = 0; j < comp.size(); ++j) children.push_back(choices[j][pick[j]]);
                out.push_back(Tree::vertex(0, -1, std::move(children)));
                more = false;
                for (size_t j = comp.size(); j-- > 0;) {
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

std::vector<Tree> enumerate_planar(int n, int k) {
    check(n >= 1, "leaf count must be positive");
    std::vector<Tree> all;
    enumerate_rec(n, all);
    if (k < 0) return all;
    std::vector<Tree> filtered;
    for (auto& t : all)
        if (t.vertex_count() == k) filtered.push_back(std::move(t));
    return filtered;
}

namespace {

Tree shift_labels(const Tree& t, int from_exclusive, int delta) {
    Tree out = t;
    if (out.is_leaf()) {
        if (out.label > from_exclusive) out.label += delta;
        return out;
    }
    for (auto& c : out.ch) c = shift_labels(c, from_exclusive, delta);
    return out;
}

bool graft_at(Tree& host, int i, const Tree& scion_shifted) {
    if (host.is_leaf()) {
        if (host.label == i) {
            host = scion_shifted;
            return true;
        }
        return false;
    }
    for (auto& c : host.ch)
        if (graft_at(c, i, scion_shifted)) return true;
    return false;
}

}  // namespace

Tree graft(const Tree& host, int i, const Tree& scion) {
    int m = host.leaf_count();
    check(i >= 1 && i <= m, "graft leaf index out of range");
    int k = scion.leaf_count();
    Tree h = shift_labels(host, i, k - 1);
    Tree s = shift_labels(scion, 0, i - 1);
    bool ok = graft_at(h, i, s);
    check(ok, "graft target leaf not found (labels must contain i)");
    return h;
}

namespace {

// pre-order vertex walk
const Tree* vertex_at(const Tree& t, int& countdown) {
    if (t.is_leaf()) return nullptr;
    if (countdown == 0) return &t;
    --countdown;
    for (const auto& c : t.ch) {
        const Tree* v = vertex_at(c, countdown);
        if (v) return v;
    }
    return nullptr;
}

Tree substitute_rec(const Tree& t, const std::vector<Tree>& assignment, int& next) {
    if (t.is_leaf()) return t;
    int my = next++;
    check(my < static_cast<int>(assignment.size()), "assignment too short");
    const Tree& a = assignment[my];
    int arity = static_cast<int>(t.ch.size());
    check(a.leaf_count() == arity, "assigned tree leaf count must equal vertex arity");
    std::vector<Tree> subbed;
    for (const auto& c : t.ch) subbed.push_back(substitute_rec(c, assignment, next));
    // attach substituted children at the leaves of a, in planar order
    Tree result = a;
    // relabel a's leaves 1..arity in planar order so grafting is addressable
    int lbl = 0;
    std::function<void(Tree&)> relabel = [&](Tree& node) {
        if (node.is_leaf()) {
            node.label = ++lbl;
            return;
        }
        for (auto& c : node.ch) relabel(c);
    };
    relabel(result);
    std::function<Tree(const Tree&)> attach = [&](const Tree& node) -> Tree {
        if (node.is_leaf()) return subbed[node.label - 1];
        Tree v = node;
        for (auto& c : v.ch) c = attach(c);
        return v;
    };
    return attach(result);
}

}  // namespace

Tree substitute(const Tree& t, const std::vector<Tree>& assignment) {
    check(static_cast<int>(assignment.size()) == t.vertex_count(),
          "assignment size must equal vertex count");
    int next = 0;
    return substitute_rec(t, assignment, next);
}

namespace {

std::pair<Tree, int> canon_rec(const Tree& t, const std::vector<Sym>& syms) {
    if (t.is_leaf()) return {t, 1};
    Tree out = t;
    int sign = 1;
    for (auto& c : out.ch) {
        auto [cc, cs] = canon_rec(c, syms);
        c = cc;
        sign *= cs;
    }
    check(out.idx >= 0 && out.idx < static_cast<int>(syms.size()),
          "decoration without declared symmetry");
    Sym s = syms[out.idx];
    if (s == Sym::none) return {out, sign};
    // stable bubble sort by minimal leaf label; sibling label sets are
    // disjoint so keys never tie
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < out.ch.size(); ++i) {
            if (out.ch[i].min_label() > out.ch[i + 1].min_label()) {
                std::swap(out.ch[i], out.ch[i + 1]);
                if (s == Sym::antisymmetric) sign = -sign;
                moved = true;
            }
        }
    }
    return {out, sign};
}

}  // namespace

std::pair<Tree, int> canonical_form(const Tree& t, const std::vector<Sym>& syms) {
    return canon_rec(t, syms);
}

std::string render_tree(const Tree& t, const std::vector<std::string>& gen_names) {
    if (t.is_leaf()) return std::to_string(t.label);
    std::string name = (t.idx >= 0 && t.idx < static_cast<int>(gen_names.size()))
                           ? gen_names[t.idx]
                           : "?";
    std::string s = name + "(";
    for (size_t i = 0; i < t.ch.size(); ++i) {
        if (i) s += ",";
        s += render_tree(t.ch[i], gen_names);
    }
    return s + ")";
}

}  // namespace opkit
