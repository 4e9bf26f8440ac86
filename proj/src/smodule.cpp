#include "opkit/smodule.hpp"

#include <algorithm>

namespace opkit {

SModule::SModule(int cap_) : cap(cap_) {
    degs.resize(cap + 1);
    names.resize(cap + 1);
    act.resize(cap + 1);
    diff.resize(cap + 1);
}

int SModule::total_dim() const {
    int t = 0;
    for (int n = 0; n <= cap; ++n) t += dim(n);
    return t;
}

void SModule::set_dims_ready() {
    for (int n = 0; n <= cap; ++n) {
        int d = dim(n);
        if (static_cast<int>(act[n].size()) != std::max(0, n - 1))
            act[n].assign(std::max(0, n - 1), Matrix::identity(d));
        if (diff[n].rows() != d || diff[n].cols() != d) diff[n] = Matrix::zero(d, d);
    }
}

Matrix SModule::action(int n, const Permutation& sigma) const {
    check(sigma.size() == n, "action permutation size mismatch");
    Matrix m = Matrix::identity(dim(n));
    for (int i : sigma.adjacent_word()) m = act[n][i - 1] * m;
    return m;
}

void SModule::validate() const {
    for (int n = 0; n <= cap; ++n) {
        int d = dim(n);
        check(static_cast<int>(names[n].size()) == d || names[n].empty(),
              "name table size mismatch");
        check(static_cast<int>(act[n].size()) == std::max(0, n - 1),
              "action table size mismatch");
        Matrix id = Matrix::identity(d);
        for (int i = 0; i < n - 1; ++i) {
            const Matrix& s = act[n][i];
            check(s.rows() == d && s.cols() == d, "action matrix size mismatch");
            check(s * s == id, "s_i^2 != id");
            // degree preservation
            for (int c = 0; c < d; ++c)
                for (const auto& [r, v] : s.transpose().row(c))
                    check(degs[n][r] == degs[n][c], "action not degree homogeneous");
        }
        for (int i = 0; i + 1 < n - 1; ++i) {
            const Matrix& a = act[n][i];
            const Matrix& b = act[n][i + 1];
            check(a * b * a == b * a * b, "braid relation fails");
        }
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 2; j < n - 1; ++j)
                check(act[n][i] * act[n][j] == act[n][j] * act[n][i],
                      "distant transpositions do not commute");
        const Matrix& dd = diff[n];
        check(dd.rows() == d && dd.cols() == d, "differential size mismatch");
        check((dd * dd).is_zero(), "d^2 != 0");
        for (int c = 0; c < d; ++c)
            for (const auto& [r, v] : dd.transpose().row(c))
                check(degs[n][r] == degs[n][c] - 1, "differential is not degree -1");
        for (int i = 0; i < n - 1; ++i)
            check(dd * act[n][i] == act[n][i] * dd, "differential not equivariant");
    }
}

SModule unit_module(int cap) {
    SModule m(cap);
    if (cap >= 1) {
        m.degs[1] = {0};
        m.names[1] = {"1"};
    }
    m.set_dims_ready();
    return m;
}

SModule direct_sum(const SModule& a, const SModule& b) {
    int cap = std::max(a.cap, b.cap);
    SModule m(cap);
    for (int n = 0; n <= cap; ++n) {
        for (int j = 0; j < a.dim(n); ++j) {
            m.degs[n].push_back(a.degs[n][j]);
            m.names[n].push_back(a.names[n].empty() ? "" : a.names[n][j]);
        }
        for (int j = 0; j < b.dim(n); ++j) {
            m.degs[n].push_back(b.degs[n][j]);
            m.names[n].push_back(b.names[n].empty() ? "" : b.names[n][j]);
        }
        for (int i = 0; i < n - 1; ++i) {
            Matrix sa = n <= a.cap ? a.act[n][i] : Matrix(0, 0);
            Matrix sb = n <= b.cap ? b.act[n][i] : Matrix(0, 0);
            m.act[n].push_back(Matrix::block_diag(sa, sb));
        }
        Matrix da = n <= a.cap ? a.diff[n] : Matrix(0, 0);
        Matrix db = n <= b.cap ? b.diff[n] : Matrix(0, 0);
        m.diff[n] = Matrix::block_diag(da, db);
    }
    return m;
}

SModule suspend(const SModule& src, int shift, const std::string& prefix) {
    SModule m = src;
    for (int n = 0; n <= m.cap; ++n) {
        for (auto& d : m.degs[n]) d += shift;
        for (auto& nm : m.names[n]) nm = prefix + nm;
    }
    return m;
}

Matrix SModuleMorphism::component(int n) const {
    if (n < static_cast<int>(comp.size())) return comp[n];
    return Matrix::zero(target->dim(n), source->dim(n));
}

void SModuleMorphism::validate() const {
    int cap = std::min(source->cap, target->cap);
    for (int n = 0; n <= cap; ++n) {
        Matrix f = component(n);
        check(f.rows() == target->dim(n) && f.cols() == source->dim(n),
              "morphism component size mismatch");
        for (int i = 0; i < n - 1; ++i)
            check(f * source->act[n][i] == target->act[n][i] * f,
                  "morphism not equivariant");
        for (int c = 0; c < source->dim(n); ++c)
            for (const auto& [r, v] : f.transpose().row(c))
                check(target->degs[n][r] == source->degs[n][c] + degree,
                      "morphism not degree homogeneous");
    }
}

SModuleMorphism identity_morphism(const SModulePtr& m) {
    SModuleMorphism f;
    f.source = m;
    f.target = m;
    f.degree = 0;
    for (int n = 0; n <= m->cap; ++n) f.comp.push_back(Matrix::identity(m->dim(n)));
    return f;
}

TensorProduct tensor_product(const SModule& a, const SModule& b, int cap) {
    TensorProduct tp;
    tp.mod = SModule(cap);
    tp.items.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            if (a.dim(i) == 0 || b.dim(j) == 0) continue;
            for (const auto& sh : shuffles(i, j)) {
                std::vector<int> slots;
                for (int r = 1; r <= i; ++r) slots.push_back(sh.inverse()(r));
                std::sort(slots.begin(), slots.end());
                for (int x = 0; x < a.dim(i); ++x)
                    for (int y = 0; y < b.dim(j); ++y) {
                        tp.items[n].push_back({i, x, y, slots});
                        tp.mod.degs[n].push_back(a.degs[i][x] + b.degs[j][y]);
                        tp.mod.names[n].push_back("");
                    }
            }
        }
    }
    tp.mod.set_dims_ready();
    // actions: relabel the slot set, permuting each block internally
    for (int n = 0; n <= cap; ++n) {
        int d = tp.mod.dim(n);
        for (int t = 0; t < n - 1; ++t) {
            Permutation s = Permutation::transposition(n, t + 1);
            Matrix m(d, d);
            for (int col = 0; col < d; ++col) {
                const auto& it = tp.items[n][col];
                // slot ℓ of the result reads input s(ℓ) after acting; the
                // element keeps block contents, slots move by s^{-1} = s
                std::vector<int> new_slots;
                for (int sl : it.slots) new_slots.push_back(s.inverse()(sl));
                std::sort(new_slots.begin(), new_slots.end());
                // induced permutations of the two blocks
                auto induced = [&](const std::vector<int>& old_sl,
                                   const std::vector<int>& nw) {
                    // old block position r held slot old_sl[r]; it moves to
                    // slot s^{-1}(old_sl[r]) which has some rank in nw
                    int k = static_cast<int>(old_sl.size());
                    std::vector<int> img(k);
                    for (int r = 0; r < k; ++r) {
                        int target_slot = s.inverse()(old_sl[r]);
                        int rank = static_cast<int>(
                            std::lower_bound(nw.begin(), nw.end(), target_slot) -
                            nw.begin());
                        img[rank] = r + 1;
                    }
                    return Permutation(img);
                };
                std::vector<int> old_other, new_other;
                for (int l = 1; l <= n; ++l) {
                    if (!std::binary_search(it.slots.begin(), it.slots.end(), l))
                        old_other.push_back(l);
                    if (!std::binary_search(new_slots.begin(), new_slots.end(), l))
                        new_other.push_back(l);
                }
                Permutation pa = induced(it.slots, new_slots);
                Permutation pb = induced(old_other, new_other);
                Matrix ma = a.action(it.i, pa);
                Matrix mb = b.action(n - it.i, pb);
                // locate target basis indices
                for (int x2 = 0; x2 < a.dim(it.i); ++x2) {
                    Rat ca = ma.at(x2, it.a);
                    if (ca == 0) continue;
                    for (int y2 = 0; y2 < b.dim(n - it.i); ++y2) {
                        Rat cb = mb.at(y2, it.b);
                        if (cb == 0) continue;
                        for (int row = 0; row < d; ++row) {
                            const auto& jt = tp.items[n][row];
                            if (jt.i == it.i && jt.a == x2 && jt.b == y2 &&
                                jt.slots == new_slots) {
                                m.add_at(row, col, ca * cb);
                                break;
                            }
                        }
                    }
                }
            }
            tp.mod.act[n][t] = m;
        }
        // differential: d_a ⊗ id + (-1)^{|a|} id ⊗ d_b
        Matrix dm(d, d);
        for (int col = 0; col < d; ++col) {
            const auto& it = tp.items[n][col];
            int j = n - it.i;
            for (int x2 = 0; x2 < a.dim(it.i); ++x2) {
                Rat c = a.diff[it.i].at(x2, it.a);
                if (c == 0) continue;
                for (int row = 0; row < d; ++row) {
                    const auto& jt = tp.items[n][row];
                    if (jt.i == it.i && jt.a == x2 && jt.b == it.b && jt.slots == it.slots)
                        dm.add_at(row, col, c);
                }
            }
            int sign = (a.degs[it.i][it.a] % 2 == 0) ? 1 : -1;
            for (int y2 = 0; y2 < b.dim(j); ++y2) {
                Rat c = b.diff[j].at(y2, it.b);
                if (c == 0) continue;
                for (int row = 0; row < d; ++row) {
                    const auto& jt = tp.items[n][row];
                    if (jt.i == it.i && jt.a == it.a && jt.b == y2 && jt.slots == it.slots)
                        dm.add_at(row, col, sign * c);
                }
            }
        }
        tp.mod.diff[n] = dm;
    }
    return tp;
}

}  // namespace opkit
