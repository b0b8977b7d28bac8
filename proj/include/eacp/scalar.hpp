#ifndef EACP_SCALAR_HPP
#define EACP_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace eacp {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<long double>;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Gaussian, Quadratic, Float };

/// Ground field tag. Gaussian is the quadratic field with d = -1 and keeps
/// its own kind so files round-trip with the `gaussian` field name.
struct Field {
    FieldKind kind = FieldKind::Rational;
    long d = 0;             // radicand for Gaussian/Quadratic
    Rational eps = 0;       // tolerance for Float

    static Field rational() { return {}; }
    static Field gaussian() { return {FieldKind::Gaussian, -1, 0}; }
    static Field quadratic(long d);
    static Field certified_float(const Rational& eps = default_eps());
    static Rational default_eps();

    bool exact() const { return kind != FieldKind::Float; }
    bool has_radical() const { return kind == FieldKind::Gaussian || kind == FieldKind::Quadratic; }
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b);
};

/// Smallest field containing both, or FieldError when two distinct
/// quadratic extensions meet.
Field join(const Field& a, const Field& b);

/// Element of the ground field. Exact values are a + b*sqrt(d) with a, b
/// rational (b = 0 for the Rational field); Float values are complex long
/// doubles compared against zero with tolerance eps.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT: integers convert implicitly
    Scalar(int v) : a_(v) {}   // NOLINT
    Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }  // NOLINT

    static Scalar rational(const Rational& v) { return Scalar(v); }
    static Scalar from_string(const std::string& text);  // "p/q" or "p"
    static Scalar quadratic(const Rational& a, const Rational& b, long d);
    static Scalar gaussian(const Rational& re, const Rational& im);
    static Scalar approx(Complex z, const Rational& eps = Field::default_eps());
    static Scalar zero_of(const Field& f);
    static Scalar one_of(const Field& f);

    const Field& field() const { return field_; }
    bool exact() const { return field_.exact(); }

    /// Rational part / radical coefficient; only meaningful for exact values.
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Complex approx_value() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // exact and b == 0
    /// Rational value; throws FieldError if not rational.
    const Rational& to_rational() const;

    /// Same value carried in field f (f must contain this value's field).
    Scalar lift(const Field& f) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(const Integer& e) const;
    Scalar conjugate() const;  // a - b*sqrt(d); complex conjugate for floats

    /// Exact square root inside the current field if one exists.
    std::optional<Scalar> sqrt_in_field() const;

    /// Sign of a real value: exact for Rational and real quadratic fields,
    /// nullopt for values that are not known to be real.
    std::optional<int> real_sign() const;

    /// Total order used only for deterministic output ordering.
    static int order(const Scalar& x, const Scalar& y);

    std::string to_string() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y);

private:
    Field field_;
    Rational a_ = 0;
    Rational b_ = 0;
    Complex z_{};

    void normalize();
};

/// Squarefree part of an integer (sign kept). Trial division up to 10^6;
/// a larger cofactor is accepted as-is.
Integer squarefree_part(const Integer& v, Integer* square_root_factor = nullptr);

/// sqrt(q) for a rational q: exact rational if q is a square, otherwise
/// an element of Q(sqrt(d)) with d the squarefree part of q.
Scalar sqrt_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace eacp

#endif  // EACP_SCALAR_HPP
