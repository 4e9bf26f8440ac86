#include "opkit/perm.hpp"

#include <algorithm>
#include <numeric>

namespace opkit {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        check(v >= 1 && v <= size() && !seen[v - 1], "not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.img = std::move(v);
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    check(i >= 1 && i < n, "transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(img.size());
    for (int i = 0; i < size(); ++i) p.img[img[i] - 1] = i + 1;
    return p;
}

Permutation Permutation::operator*(const Permutation& b) const {
    check(size() == b.size(), "permutation size mismatch");
    Permutation p;
    p.img.resize(img.size());
    for (int i = 1; i <= size(); ++i) p.img[i - 1] = img[b.img[i - 1] - 1];
    return p;
}

int Permutation::sign() const {
    int s = 1;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img[i] > img[j]) s = -s;
    return s;
}

std::vector<int> Permutation::adjacent_word() const {
    // Multiplying on the right by s_i swaps image entries i, i+1; sort the
    // image word with adjacent swaps, then reverse the collected indices.
    std::vector<int> w = img;
    std::vector<int> steps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                steps.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
        }
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::vector<Permutation> shuffles(int p, int q) {
    check(p >= 0 && q >= 0, "negative shuffle block");
    int n = p + q;
    // σ in Sh(p,q): the one-line word carries 1..p as a subsequence and
    // p+1..p+q as a subsequence; enumerate the slots of the first block
    // in lexicographic order.
    std::vector<Permutation> out;
    std::vector<int> slots(p);
    std::iota(slots.begin(), slots.end(), 1);
    auto emit = [&]() {
        std::vector<int> word(n, 0);
        for (int r = 0; r < p; ++r) word[slots[r] - 1] = r + 1;
        int next = p + 1;
        for (int i = 0; i < n; ++i)
            if (word[i] == 0) word[i] = next++;
        out.emplace_back(std::move(word));
    };
    if (p == 0 || q == 0) {
        out.push_back(Permutation::identity(n));
        return out;
    }
    while (true) {
        emit();
        int i = p - 1;
        while (i >= 0 && slots[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++slots[i];
        for (int j = i + 1; j < p; ++j) slots[j] = slots[j - 1] + 1;
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.img = v;
        out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace opkit
