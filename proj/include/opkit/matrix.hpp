#pragma once

#include <map>
#include <optional>
#include <vector>

#include "opkit/common.hpp"

namespace opkit {

/// Sparse exact rational matrix. Rows hold ordered (col -> nonzero entry)
/// maps; absent entries are zero and stored entries are kept nonzero.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add_at(int r, int c, const Rat& v);
    const std::map<int, Rat>& row(int r) const { return data_[r]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rat& c) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Vec column(int c) const;
    Matrix hstack(const Matrix& rhs) const;
    Matrix vstack(const Matrix& rhs) const;
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    /// Row-reduced echelon form. Pivoting is deterministic: leftmost
    /// column first, then smallest remaining row index.
    struct Echelon;
    Echelon echelon() const;

    int rank() const;
    std::vector<Vec> kernel_basis() const;
    /// One solution of A x = b, if consistent.
    std::optional<Vec> solve(const Vec& b) const;

private:
    int rows_, cols_;
    std::vector<std::map<int, Rat>> data_;
};

struct Matrix::Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
};

/// Row-echelon model of a subspace of Q^dim. Supports membership,
/// canonical reduction and completion to a full basis.
class Subspace {
public:
    explicit Subspace(int ambient_dim) : dim_(ambient_dim) {}
    Subspace(const std::vector<Vec>& spanning, int ambient_dim);

    int ambient_dim() const { return dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    void add(const Vec& v);
    bool contains(const Vec& v) const;
    /// Canonical representative of v modulo this subspace.
    Vec reduce(Vec v) const;
    bool same_space(const Subspace& other) const;

private:
    int dim_;
    std::vector<Vec> basis_;   // reduced echelon rows
    std::vector<int> pivots_;  // pivot column per basis row, increasing
};

/// Standard basis vectors completing `sub` to a basis of the ambient
/// space; count = ambient_dim - rank(sub).
std::vector<Vec> quotient_basis(const std::vector<Vec>& sub, int ambient_dim);

Subspace intersect(const Subspace& a, const Subspace& b);

/// Coordinates of v in the given spanning set, if it lies in the span.
std::optional<Vec> coords_in(const std::vector<Vec>& spanning, const Vec& v,
                             int ambient_dim);

}  // namespace opkit
