#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opkit/chain.hpp"
#include "opkit/matrix.hpp"

using namespace opkit;

namespace {

// Deterministic LCG for property tests; avoids platform-dependent
// distribution implementations.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

Matrix random_matrix(Rng& rng, int rows, int cols, int density_pct = 60) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.uniform(0, 99) < density_pct)
                m.set(r, c, Rat(rng.uniform(-4, 4)));
    return m;
}

Matrix random_invertible(Rng& rng, int n) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, 70);
        if (m.rank() == n) return m;
    }
}

Matrix inverse(const Matrix& m) {
    REQUIRE(m.rows() == m.cols());
    std::vector<Vec> cols;
    for (int c = 0; c < m.cols(); ++c) {
        Vec e(m.rows(), Rat(0));
        e[c] = 1;
        auto x = m.solve(e);
        REQUIRE(x.has_value());
        cols.push_back(*x);
    }
    return Matrix::from_columns(cols, m.rows());
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-4") == Rat(-4));
    CHECK(rat_parse("0") == 0);
    CHECK_THROWS_AS(rat_parse("1/0"), Error);
    CHECK_THROWS_AS(rat_parse("x"), Error);
}

TEST_CASE("kernel basis on pinned examples") {
    // identity 2x2: injective, empty kernel
    CHECK(Matrix::identity(2).kernel_basis().empty());

    // zero 2x3: all three standard basis vectors
    auto k = Matrix::zero(2, 3).kernel_basis();
    REQUIRE(k.size() == 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
    }

    // [[1,1],[2,2]]: kernel spanned by (1,-1)
    Matrix m = Matrix::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2);
    auto k2 = m.kernel_basis();
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] * Rat(-1) == k2[0][1]);
    CHECK(is_zero(m.apply(k2[0])));
}

TEST_CASE("rank + nullity = cols (property)") {
    Rng rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = rng.uniform(1, 7), c = rng.uniform(1, 7);
        Matrix m = random_matrix(rng, r, c);
        CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == c);
        for (const auto& v : m.kernel_basis()) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("quotient basis") {
    CHECK(quotient_basis({}, 3).size() == 3);
    std::vector<Vec> full = {{Rat(1), Rat(0), Rat(0)},
                             {Rat(0), Rat(1), Rat(0)},
                             {Rat(0), Rat(0), Rat(1)}};
    CHECK(quotient_basis(full, 3).empty());
    auto reps = quotient_basis({{Rat(1), Rat(1), Rat(0)}}, 3);
    CHECK(reps.size() == 2);
    // representatives together with the subspace span the ambient space
    Subspace s({{Rat(1), Rat(1), Rat(0)}}, 3);
    for (const auto& r : reps) s.add(r);
    CHECK(s.dim() == 3);
    CHECK_THROWS_AS(quotient_basis({{Rat(1)}}, 3), Error);
}

TEST_CASE("solve") {
    Matrix m = Matrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}, 2);
    auto x = m.solve({Rat(5), Rat(11)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Rat(5), Rat(11)});
    Matrix sing = Matrix::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2);
    CHECK(!sing.solve({Rat(0), Rat(1)}).has_value());
}

TEST_CASE("subspace operations") {
    Subspace s(4);
    s.add({Rat(1), Rat(2), Rat(0), Rat(0)});
    s.add({Rat(0), Rat(0), Rat(1), Rat(1)});
    s.add({Rat(1), Rat(2), Rat(1), Rat(1)});  // dependent
    CHECK(s.dim() == 2);
    CHECK(s.contains({Rat(2), Rat(4), Rat(3), Rat(3)}));
    CHECK(!s.contains({Rat(1), Rat(0), Rat(0), Rat(0)}));

    Subspace a({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
    Subspace b({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3);
    Subspace i = intersect(a, b);
    CHECK(i.dim() == 1);
    CHECK(i.contains({Rat(0), Rat(1), Rat(0)}));
}

TEST_CASE("homology of pinned complexes") {
    // all-zero differentials, dims (2,3)
    ChainComplex c;
    c.dims[0] = 2;
    c.dims[1] = 3;
    c.diffs[1] = Matrix::zero(2, 3);
    auto h = c.homology_dims();
    CHECK(h[0] == 2);
    CHECK(h[1] == 3);

    // 0 -> K -(id)-> K -> 0: acyclic
    ChainComplex ac;
    ac.dims[0] = 1;
    ac.dims[1] = 1;
    ac.diffs[1] = Matrix::identity(1);
    auto ha = ac.homology_dims();
    CHECK(ha[0] == 0);
    CHECK(ha[1] == 0);

    // 0 -> K -(0)-> K -> 0
    ChainComplex z;
    z.dims[0] = 1;
    z.dims[1] = 1;
    z.diffs[1] = Matrix::zero(1, 1);
    auto hz = z.homology_dims();
    CHECK(hz[0] == 1);
    CHECK(hz[1] == 1);
}

TEST_CASE("homology rejects d∘d != 0") {
    ChainComplex c;
    c.dims[0] = 1;
    c.dims[1] = 1;
    c.dims[2] = 1;
    c.diffs[1] = Matrix::identity(1);
    c.diffs[2] = Matrix::identity(1);
    CHECK_THROWS_AS(c.homology_dims(), Error);
}

TEST_CASE("homology invariant under basis change (property)") {
    Rng rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        // build a random valid 3-term complex C2 -> C1 -> C0 with d1∘d2 = 0:
        // pick d1 random, then d2 with image inside ker(d1).
        int n0 = rng.uniform(1, 4), n1 = rng.uniform(1, 5), n2 = rng.uniform(1, 4);
        Matrix d1 = random_matrix(rng, n0, n1);
        auto kb = d1.kernel_basis();
        Matrix d2(n1, n2);
        if (!kb.empty()) {
            for (int c = 0; c < n2; ++c) {
                Vec col(n1, Rat(0));
                for (const auto& k : kb)
                    col = vec_add(col, vec_scale(Rat(rng.uniform(-2, 2)), k));
                for (int r = 0; r < n1; ++r) d2.set(r, c, col[r]);
            }
        }
        ChainComplex c;
        c.dims[0] = n0;
        c.dims[1] = n1;
        c.dims[2] = n2;
        c.diffs[1] = d1;
        c.diffs[2] = d2;
        auto h = c.homology_dims();

        Matrix p0 = random_invertible(rng, n0);
        Matrix p1 = random_invertible(rng, n1);
        Matrix p2 = random_invertible(rng, n2);
        ChainComplex conj;
        conj.dims = c.dims;
        conj.diffs[1] = p0 * d1 * inverse(p1);
        conj.diffs[2] = p1 * d2 * inverse(p2);
        CHECK(conj.homology_dims() == h);
    }
}

TEST_CASE("cochain complex cohomology") {
    CochainComplex c;
    c.dims[0] = 1;
    c.dims[1] = 2;
    c.dims[2] = 1;
    c.diffs[0] = Matrix::from_columns({{Rat(1), Rat(0)}}, 2);
    c.diffs[1] = Matrix::from_rows({{Rat(0), Rat(3)}}, 2);
    auto h = c.cohomology_dims();
    CHECK(h[0] == 0);
    CHECK(h[1] == 0);
    CHECK(h[2] == 0);
}
