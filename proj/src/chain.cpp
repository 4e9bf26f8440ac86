#include "opkit/chain.hpp"

namespace opkit {

void ChainComplex::validate() const {
    for (const auto& [n, d] : diffs) {
        check(d.cols() == dim(n), "d_" + std::to_string(n) + " column count mismatch");
        check(d.rows() == dim(n - 1), "d_" + std::to_string(n) + " row count mismatch");
        const Matrix* next = diff(n + 1);
        if (next && !(d * *next).is_zero())
            throw Error("d∘d != 0 between degrees " + std::to_string(n + 1) + " and " +
                        std::to_string(n - 1));
    }
}

std::map<int, int> ChainComplex::homology_dims() const {
    validate();
    std::map<int, int> h;
    for (const auto& [n, dn] : dims) {
        const Matrix* d = diff(n);
        int ker = d ? dn - d->rank() : dn;
        const Matrix* dnext = diff(n + 1);
        int im = dnext ? dnext->rank() : 0;
        h[n] = ker - im;
    }
    return h;
}

int ChainComplex::total_dim() const {
    int t = 0;
    for (const auto& [n, d] : dims) t += d;
    return t;
}

void CochainComplex::validate() const {
    for (const auto& [n, d] : diffs) {
        check(d.cols() == dim(n), "d^" + std::to_string(n) + " column count mismatch");
        check(d.rows() == dim(n + 1), "d^" + std::to_string(n) + " row count mismatch");
        const Matrix* next = diff(n + 1);
        if (next && !(*next * d).is_zero())
            throw Error("d∘d != 0 between degrees " + std::to_string(n) + " and " +
                        std::to_string(n + 2));
    }
}

std::map<int, int> CochainComplex::cohomology_dims() const {
    validate();
    std::map<int, int> h;
    for (const auto& [n, dn] : dims) {
        const Matrix* d = diff(n);
        int ker = d ? dn - d->rank() : dn;
        const Matrix* dprev = diff(n - 1);
        int im = dprev ? dprev->rank() : 0;
        h[n] = ker - im;
    }
    return h;
}

}  // namespace opkit
