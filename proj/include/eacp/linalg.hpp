#ifndef EACP_LINALG_HPP
#define EACP_LINALG_HPP

#include "eacp/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eacp {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Scalar. Row vectors are the working
/// convention: subspaces are row spaces, operators act as x -> x * T.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero_of(f)) {}

    static Matrix identity(std::size_t n, const Field& f = Field::rational());
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_list() const;
    void set_row(std::size_t i, std::span<const Scalar> v);

    Matrix transpose() const;
    Field field() const;  // join of all entry fields
    Matrix lift(const Field& f) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& x, const Matrix& y);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Vector operator*(std::span<const Scalar> row, const Matrix& m);  // row vector times matrix
Vector operator*(const Matrix& m, std::span<const Scalar> col);  // matrix times column vector
Vector add(std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(const Scalar& s, std::span<const Scalar> x);
Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero(std::span<const Scalar> x);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per row
};

/// Reduced row echelon form with leftmost pivots. Exact fields pivot on the
/// first nonzero entry; Float picks the largest modulus in the column.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis (as rows) of {x : m * x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// Basis (as rows) of {y : y * m = 0}.
std::vector<Vector> left_kernel(const Matrix& m);

/// Canonical basis of the row space of the given vectors (rref rows).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, std::span<const Scalar> v);
/// Coordinates c with sum c_k basis_k = v, if v lies in the span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const Scalar> v);
bool same_span(const std::vector<Vector>& x, const std::vector<Vector>& y, std::size_t dim);
bool independent(const std::vector<Vector>& vectors);
/// Basis of span(x) ∩ span(y).
std::vector<Vector> intersect(const std::vector<Vector>& x, const std::vector<Vector>& y, std::size_t dim);

/// Scale so the first nonzero coordinate is 1.
Vector normalize_leading(std::span<const Scalar> v);
/// Lexicographic order on coordinate vectors using Scalar::order.
int compare_vectors(std::span<const Scalar> x, std::span<const Scalar> y);

}  // namespace eacp

#endif  // EACP_LINALG_HPP
