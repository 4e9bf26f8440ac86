#pragma once

#include <vector>

#include "opkit/common.hpp"

namespace opkit {

/// Permutation of {1..n}, stored as images [σ(1),...,σ(n)].
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i);  // (i, i+1), 1 <= i < n

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool is_identity() const;

    Permutation inverse() const;
    /// (a * b)(i) = a(b(i)).
    Permutation operator*(const Permutation& b) const;
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }

    int sign() const;
    /// Adjacent-transposition word w with this = s_{w front} * ... applied
    /// left to right, i.e. this = s_{w[0]} s_{w[1]} ... as a product.
    std::vector<int> adjacent_word() const;
};

/// All (p+q choose p) permutations increasing on {1..p} and {p+1..p+q},
/// in deterministic lexicographic order of the chosen first-block slots.
std::vector<Permutation> shuffles(int p, int q);

std::vector<Permutation> all_permutations(int n);

}  // namespace opkit
