#ifndef EACP_ALGEBRA_HPP
#define EACP_ALGEBRA_HPP

#include "eacp/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eacp {

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the hypotheses it needs.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// M = A ⊕ b: row i holds the structure constants of h_i r.
struct StructuralMatrix {
    Matrix A;  // n x n
    Vector b;  // length n

    std::size_t n() const { return A.rows(); }
    Field field() const;
    /// The n x (n+1) matrix [A | b].
    Matrix rect() const;
    /// (n+1) x (n+1) with a zero last row.
    Matrix padded() const;
    static StructuralMatrix from_padded(const Matrix& p);

    friend bool operator==(const StructuralMatrix& x, const StructuralMatrix& y) {
        return x.A == y.A && x.b == y.b;
    }
};

/// x = sum alpha_i h_i + beta r in the natural basis.
class Element {
public:
    Element() = default;
    Element(Vector alpha, Scalar beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    static Element zero(std::size_t n);
    static Element h(std::size_t n, std::size_t i);  // 1-based
    static Element r(std::size_t n);
    static Element from_coords(std::span<const Scalar> coords);  // (alpha..., beta)

    std::size_t n() const { return alpha_.size(); }
    const Vector& alpha() const { return alpha_; }
    const Scalar& beta() const { return beta_; }
    /// Coefficient of h_i (1-based) or of r for i == n+1.
    const Scalar& coeff(std::size_t i) const { return i == n() + 1 ? beta_ : alpha_.at(i - 1); }
    Vector coords() const;
    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(const Scalar& s, const Element& x);
    friend bool operator==(const Element& x, const Element& y) {
        return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
    }

private:
    Vector alpha_;
    Scalar beta_{0};
};

/// An evolution algebra of a "chicken" population: commutative, on the
/// natural basis {h_1..h_n, r} with h_i h_j = 0, r r = 0 and
/// h_i r = sum_j a_ij h_j + b_i r. Immutable.
class Algebra {
public:
    Algebra(StructuralMatrix m, std::optional<std::string> label = std::nullopt);

    std::size_t n() const { return m_.n(); }
    std::size_t dim() const { return m_.n() + 1; }
    const StructuralMatrix& structure() const { return m_; }
    const Matrix& A() const { return m_.A; }
    const Vector& b() const { return m_.b; }
    const Scalar& a(std::size_t i, std::size_t j) const { return m_.A(i - 1, j - 1); }  // 1-based
    Field field() const { return field_; }
    const std::optional<std::string>& label() const { return label_; }

    Element h(std::size_t i) const { return Element::h(n(), i); }
    Element r() const { return Element::r(n()); }
    Element zero() const { return Element::zero(n()); }
    /// h_1..h_n, r in order.
    std::vector<Element> generators() const;

    /// Same structure with every entry carried in field f.
    Algebra lift(const Field& f) const;

    /// Same structure constants; the label is ignored.
    friend bool operator==(const Algebra& x, const Algebra& y) { return x.m_ == y.m_; }

private:
    StructuralMatrix m_;
    Field field_;
    std::optional<std::string> label_;
};

/// Validates shapes and fields; rational entries lift into the common
/// field, two different non-rational fields are rejected.
Algebra new_algebra(const std::vector<Vector>& A, const Vector& b, std::optional<std::string> label = std::nullopt);

Element multiply(const Algebra& alg, const Element& x, const Element& y);
Element principal_power(const Algebra& alg, const Element& x, unsigned k);
Element plenary_power(const Algebra& alg, const Element& x, unsigned m);
/// R_a^m(x), where R_a(x) = x a.
Element right_operator_iterate(const Algebra& alg, const Element& x, const Element& a, unsigned m);

/// Generator reference: h_1..h_n are 1..n, r is n+1.
struct GeneratorIndex {
    bool is_r = false;
    std::size_t i = 0;
    static GeneratorIndex h(std::size_t i) { return {false, i}; }
    static GeneratorIndex r() { return {true, 0}; }
};
bool occurs(const Element& x, GeneratorIndex index);

/// Matrix of y -> y x acting on coefficient row vectors (y * T).
Matrix right_operator_matrix(const Algebra& alg, const Element& x);

/// MH = AB ⊕ Ac for M = A ⊕ b, H = B ⊕ c. HM is the call with swapped arguments.
StructuralMatrix matrix_oplus_product(const StructuralMatrix& M, const StructuralMatrix& H);
/// M^m = A^m ⊕ A^(m-1) b.
StructuralMatrix matrix_oplus_power(const StructuralMatrix& M, unsigned m);

/// Exact repeated squaring; m = 0 gives the identity.
Matrix matrix_power(const Matrix& A, unsigned m);

}  // namespace eacp

#endif  // EACP_ALGEBRA_HPP
