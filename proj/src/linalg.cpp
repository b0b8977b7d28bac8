#include "eacp/linalg.hpp"

#include <algorithm>
#include <utility>

namespace eacp {

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one_of(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged rows: expected " + std::to_string(cols) +
                                                         " entries, row " + std::to_string(i) + " has " +
                                                         std::to_string(rows[i].size()));
        m.set_row(i, rows[i]);
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

void Matrix::set_row(std::size_t i, std::span<const Scalar> v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Field Matrix::field() const {
    Field f = Field::rational();
    for (const auto& s : data_) f = join(f, s.field());
    return f;
}

Matrix Matrix::lift(const Field& f) const {
    Matrix m = *this;
    for (auto& s : m.data_) s = s.lift(f);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Scalar& a = x(i, k);
            if (a.exact() && a.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += a * y(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
    return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + Scalar(-1) * y; }

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.data_) e = s * e;
    return out;
}

bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

Vector operator*(std::span<const Scalar> row, const Matrix& m) {
    if (row.size() != m.rows()) throw DimensionError("row vector length mismatch");
    Vector out(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].exact() && row[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[i] * m(i, j);
    }
    return out;
}

Vector operator*(const Matrix& m, std::span<const Scalar> col) {
    if (col.size() != m.cols()) throw DimensionError("column vector length mismatch");
    Vector out(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * col[j];
    return out;
}

Vector add(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw DimensionError("vector length mismatch");
    Vector out(x.begin(), x.end());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> x) {
    Vector out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back(s * e);
    return out;
}

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw DimensionError("vector length mismatch");
    Scalar acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

bool is_zero(std::span<const Scalar> x) {
    return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); });
}

Echelon rref(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::optional<std::size_t> best;
        long double best_mod = -1;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            if (m(i, c).exact()) {
                best = i;
                break;
            }
            long double mod = std::abs(m(i, c).approx_value());
            if (mod > best_mod) {
                best_mod = mod;
                best = i;
            }
        }
        if (!best) continue;
        if (*best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(*best, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) {
                if (i != r) m(i, c) = Scalar::zero_of(m(i, c).field());
                continue;
            }
            Scalar factor = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= factor * m(r, j);
            m(i, c) = Scalar::zero_of(m(i, c).field());
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
    return {reduced, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar determinant(const Matrix& input) {
    if (input.rows() != input.cols()) throw DimensionError("determinant of a non-square matrix");
    Matrix m = input;
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar::zero_of(input.field());
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Field f = m.field();
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, Scalar::zero_of(f));
        v[free] = Scalar::one_of(f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> left_kernel(const Matrix& m) { return nullspace(m.transpose()); }

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    return rref(Matrix::from_rows(vectors, dim)).reduced.row_list();
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const Scalar> v) {
    const std::size_t k = basis.size(), dim = v.size();
    if (k == 0) {
        if (is_zero(v)) return Vector{};
        return std::nullopt;
    }
    Matrix aug(dim, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != dim) throw DimensionError("basis vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i) aug(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug(i, k) = v[i];
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    Vector c(k, Scalar(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) c[e.pivots[r]] = e.reduced(r, k);
    return c;
}

bool in_span(const std::vector<Vector>& basis, std::span<const Scalar> v) { return coordinates(basis, v).has_value(); }

bool same_span(const std::vector<Vector>& x, const std::vector<Vector>& y, std::size_t dim) {
    std::vector<Vector> all = x;
    all.insert(all.end(), y.begin(), y.end());
    std::size_t rx = span_basis(x, dim).size(), ry = span_basis(y, dim).size();
    return rx == ry && span_basis(all, dim).size() == rx;
}

bool independent(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return true;
    return rank(Matrix::from_rows(vectors)) == vectors.size();
}

std::vector<Vector> intersect(const std::vector<Vector>& x, const std::vector<Vector>& y, std::size_t dim) {
    std::vector<Vector> bx = span_basis(x, dim), by = span_basis(y, dim);
    if (bx.empty() || by.empty()) return {};
    std::vector<Vector> stacked = bx;
    for (const auto& v : by) stacked.push_back(scale(Scalar(-1), v));
    std::vector<Vector> out;
    for (const auto& c : left_kernel(Matrix::from_rows(stacked))) {
        Vector w(dim, Scalar(0));
        for (std::size_t k = 0; k < bx.size(); ++k) w = add(w, scale(c[k], bx[k]));
        out.push_back(std::move(w));
    }
    return span_basis(out, dim);
}

Vector normalize_leading(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return scale(s.inverse(), v);
    return Vector(v.begin(), v.end());
}

int compare_vectors(std::span<const Scalar> x, std::span<const Scalar> y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (int c = Scalar::order(x[i], y[i]); c != 0) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

}  // namespace eacp
