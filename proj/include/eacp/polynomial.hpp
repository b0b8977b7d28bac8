#ifndef EACP_POLYNOMIAL_HPP
#define EACP_POLYNOMIAL_HPP

#include "eacp/linalg.hpp"

#include <vector>

namespace eacp {

/// Univariate polynomial over Scalar, coefficients in ascending order.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Vector ascending);

    static Polynomial monomial(const Scalar& c, std::size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Vector& coeffs() const { return c_; }
    const Scalar& lead() const { return c_.back(); }
    bool all_rational() const;
    Field field() const;

    Scalar operator()(const Scalar& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    /// Quotient and remainder; throws on division by zero polynomial.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);
    static Polynomial gcd(Polynomial p, Polynomial q);

private:
    Vector c_;
    void trim();
};

/// det(t I - m), monic, by Faddeev-LeVerrier (characteristic 0).
Polynomial characteristic_polynomial(const Matrix& m);

struct Root {
    Scalar value;
    bool exact = true;
};

struct RootSet {
    std::vector<Root> roots;     // distinct roots, deterministic order
    bool numeric_fallback = false;  // an exact polynomial needed numeric roots
};

/// Distinct roots over the algebraic closure. Exact for rational roots and
/// for quadratic factors whose square roots live in `context` (or, when
/// `context` is Rational, in a freshly chosen Q(sqrt d)); remaining factors
/// get numerically polished roots flagged inexact.
RootSet find_roots(const Polynomial& p, const Field& context = Field::rational(),
                   const Rational& eps = Field::default_eps());

}  // namespace eacp

#endif  // EACP_POLYNOMIAL_HPP
