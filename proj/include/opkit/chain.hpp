#pragma once

#include <map>

#include "opkit/matrix.hpp"

namespace opkit {

/// Finite chain complex presentation: d_n maps degree n to degree n-1.
/// Dimensions are declared over a contiguous degree range; differentials
/// outside the range are zero.
struct ChainComplex {
    std::map<int, int> dims;      // degree -> dimension
    std::map<int, Matrix> diffs;  // n -> d_n, rows = dim(n-1), cols = dim(n)

    int dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    const Matrix* diff(int n) const {
        auto it = diffs.find(n);
        return it == diffs.end() ? nullptr : &it->second;
    }

    /// Throws on dimension mismatches or d∘d != 0.
    void validate() const;
    std::map<int, int> homology_dims() const;
    int total_dim() const;
};

/// Cochain complex: d^n maps degree n to degree n+1. Stored directly;
/// cohomology uses the same rank bookkeeping with raised indices.
struct CochainComplex {
    std::map<int, int> dims;
    std::map<int, Matrix> diffs;  // n -> d^n, rows = dim(n+1), cols = dim(n)

    int dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    const Matrix* diff(int n) const {
        auto it = diffs.find(n);
        return it == diffs.end() ? nullptr : &it->second;
    }

    void validate() const;
    std::map<int, int> cohomology_dims() const;
};

}  // namespace opkit
