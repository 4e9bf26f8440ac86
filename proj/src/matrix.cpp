#include "opkit/matrix.hpp"

#include <algorithm>

namespace opkit {

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(s);
            r.canonicalize();
            return r;
        }
        std::string den = s.substr(slash + 1);
        check(!den.empty() && den != "0", "rational with zero denominator: " + s);
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + s);
    }
}

Vec vec_add(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    check(rows >= 0 && cols >= 0, "negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        check(static_cast<int>(rows[r].size()) == cols, "row length mismatch");
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.data_[r][c] = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        check(static_cast<int>(cols[c].size()) == rows, "column length mismatch");
        for (int r = 0; r < rows; ++r)
            if (cols[c][r] != 0) m.data_[r][c] = cols[c][r];
    }
    return m;
}

Rat Matrix::at(int r, int c) const {
    check(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rat(0) : it->second;
}

void Matrix::set(int r, int c, const Rat& v) {
    check(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void Matrix::add_at(int r, int c, const Rat& v) {
    if (v == 0) return;
    check(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        data_[r][c] = v;
    } else {
        it->second += v;
        if (it->second == 0) data_[r].erase(it);
    }
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check(cols_ == rhs.rows_, "matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : rhs.data_[k]) out.add_at(r, c, v * w);
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum dimension mismatch");
    Matrix out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.data_[r]) out.add_at(r, c, v);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    return *this + rhs.scaled(-1);
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix out(rows_, cols_);
    if (c == 0) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [col, v] : data_[r]) out.data_[r][col] = c * v;
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    check(static_cast<int>(v.size()) == cols_, "matrix apply dimension mismatch");
    Vec out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, w] : data_[r]) out[r] += w * v[c];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.data_[c][r] = v;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Vec Matrix::column(int c) const {
    Vec out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    check(rows_ == rhs.rows_, "hstack row mismatch");
    Matrix out(rows_, cols_ + rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        out.data_[r] = data_[r];
        for (const auto& [c, v] : rhs.data_[r]) out.data_[r][cols_ + c] = v;
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    check(cols_ == rhs.cols_, "vstack column mismatch");
    Matrix out(rows_ + rhs.rows_, cols_);
    for (int r = 0; r < rows_; ++r) out.data_[r] = data_[r];
    for (int r = 0; r < rhs.rows_; ++r) out.data_[rows_ + r] = rhs.data_[r];
    return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r];
    for (int r = 0; r < b.rows_; ++r)
        for (const auto& [c, v] : b.data_[r]) out.data_[a.rows_ + r][a.cols_ + c] = v;
    return out;
}

Matrix::Echelon Matrix::echelon() const {
    Matrix m = *this;
    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < cols_ && next_row < rows_; ++col) {
        int pivot = -1;
        for (int r = next_row; r < rows_; ++r) {
            auto it = m.data_[r].find(col);
            if (it != m.data_[r].end()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.data_[pivot], m.data_[next_row]);
        Rat inv = 1 / m.data_[next_row][col];
        if (inv != 1) {
            std::map<int, Rat> scaled;
            for (const auto& [c, v] : m.data_[next_row]) scaled[c] = inv * v;
            m.data_[next_row] = std::move(scaled);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == next_row) continue;
            auto it = m.data_[r].find(col);
            if (it == m.data_[r].end()) continue;
            Rat factor = it->second;
            for (const auto& [c, v] : m.data_[next_row]) {
                auto jt = m.data_[r].find(c);
                if (jt == m.data_[r].end()) {
                    m.data_[r][c] = -factor * v;
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) m.data_[r].erase(jt);
                }
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

int Matrix::rank() const { return static_cast<int>(echelon().pivot_cols.size()); }

std::vector<Vec> Matrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols_, Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.rref.at(static_cast<int>(r), free_col);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    check(static_cast<int>(b.size()) == rows_, "solve rhs dimension mismatch");
    Matrix aug = hstack(Matrix::from_columns({b}, rows_));
    Echelon e = aug.echelon();
    Vec x(cols_, Rat(0));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
        int p = e.pivot_cols[r];
        if (p == cols_) return std::nullopt;  // pivot in the rhs column
        x[p] = e.rref.at(static_cast<int>(r), cols_);
    }
    return x;
}

Subspace::Subspace(const std::vector<Vec>& spanning, int ambient_dim)
    : dim_(ambient_dim) {
    for (const auto& v : spanning) add(v);
}

void Subspace::add(const Vec& v) {
    check(static_cast<int>(v.size()) == dim_, "subspace vector dimension mismatch");
    Vec w = reduce(v);
    int lead = -1;
    for (int i = 0; i < dim_; ++i)
        if (w[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) return;
    Rat inv = 1 / w[lead];
    for (auto& x : w) x *= inv;
    // back-substitute into existing rows, keep rows sorted by pivot
    for (auto& row : basis_) {
        if (row[lead] != 0) {
            Rat f = row[lead];
            for (int i = 0; i < dim_; ++i) row[i] -= f * w[i];
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    basis_.insert(basis_.begin() + static_cast<long>(idx), std::move(w));
}

Vec Subspace::reduce(Vec v) const {
    check(static_cast<int>(v.size()) == dim_, "subspace vector dimension mismatch");
    for (size_t r = 0; r < basis_.size(); ++r) {
        Rat f = v[pivots_[r]];
        if (f == 0) continue;
        for (int i = 0; i < dim_; ++i) v[i] -= f * basis_[r][i];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::same_space(const Subspace& other) const {
    return dim_ == other.dim_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

std::vector<Vec> quotient_basis(const std::vector<Vec>& sub, int ambient_dim) {
    Subspace s(sub, ambient_dim);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int p : s.pivots()) is_pivot[p] = true;
    std::vector<Vec> reps;
    for (int i = 0; i < ambient_dim; ++i) {
        if (is_pivot[i]) continue;
        Vec e(ambient_dim, Rat(0));
        e[i] = 1;
        reps.push_back(std::move(e));
    }
    return reps;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check(a.ambient_dim() == b.ambient_dim(), "intersect ambient mismatch");
    int n = a.ambient_dim();
    // x = A^T u = B^T v; solve A^T u - B^T v = 0 for (u, v).
    Matrix at = Matrix::from_rows(a.basis(), n).transpose();
    Matrix bt = Matrix::from_rows(b.basis(), n).transpose();
    Matrix sys = at.hstack(bt.scaled(-1));
    Subspace out(n);
    for (const auto& k : sys.kernel_basis()) {
        Vec u(k.begin(), k.begin() + a.dim());
        out.add(at.apply(u));
    }
    return out;
}

std::optional<Vec> coords_in(const std::vector<Vec>& spanning, const Vec& v,
                             int ambient_dim) {
    Matrix m = Matrix::from_columns(spanning, ambient_dim);
    return m.solve(v);
}

}  // namespace opkit
