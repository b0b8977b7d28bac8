#include "eacp/scalar.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace eacp {

namespace {

bool is_rational_square(const Rational& q, Rational* root) {
    if (sgn(q) < 0) return false;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    if (root) {
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rational(rn, rd);
        root->canonicalize();
    }
    return true;
}

long double to_ld(const Rational& q) {
    // mpq -> double loses range for huge values; good enough for the
    // numeric fallback, which only ever sees moderate magnitudes.
    return static_cast<long double>(q.get_d());
}

}  // namespace

Rational Field::default_eps() { return Rational(1, Integer("1000000000000")); }

Field Field::quadratic(long d) {
    if (d == -1) return gaussian();
    if (d == 0 || d == 1) throw FieldError("quadratic field needs a non-square radicand, got " + std::to_string(d));
    Integer root;
    if (squarefree_part(Integer(d), &root) != Integer(d))
        throw FieldError("quadratic field radicand must be squarefree, got " + std::to_string(d));
    return {FieldKind::Quadratic, d, 0};
}

Field Field::certified_float(const Rational& eps) {
    if (sgn(eps) <= 0) throw FieldError("certified float tolerance must be positive");
    return {FieldKind::Float, 0, eps};
}

std::string Field::name() const {
    switch (kind) {
        case FieldKind::Rational: return "rational";
        case FieldKind::Gaussian: return "gaussian";
        case FieldKind::Quadratic: return "quadratic(" + std::to_string(d) + ")";
        case FieldKind::Float: return "float";
    }
    return "?";
}

bool operator==(const Field& a, const Field& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == FieldKind::Quadratic) return a.d == b.d;
    if (a.kind == FieldKind::Float) return a.eps == b.eps;
    return true;
}

Field join(const Field& a, const Field& b) {
    if (a.kind == FieldKind::Float || b.kind == FieldKind::Float) {
        Rational eps = 0;
        if (a.kind == FieldKind::Float) eps = a.eps;
        if (b.kind == FieldKind::Float && b.eps > eps) eps = b.eps;
        return Field::certified_float(eps);
    }
    if (a.kind == FieldKind::Rational) return b;
    if (b.kind == FieldKind::Rational) return a;
    if (a.d != b.d)
        throw FieldError("cannot combine " + a.name() + " and " + b.name() + " values");
    return a;
}

Integer squarefree_part(const Integer& v, Integer* square_root_factor) {
    Integer rest = abs(v);
    Integer out = 1;
    Integer root = 1;
    if (rest == 0) {
        if (square_root_factor) *square_root_factor = 0;
        return 0;
    }
    for (unsigned long p = 2; p <= 1000000UL; ++p) {
        Integer pp = Integer(p) * p;
        if (pp > rest) break;
        int count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++count;
        }
        for (int k = 0; k + 1 < count; k += 2) root *= p;
        if (count % 2 == 1) out *= p;
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        root *= r;
    } else {
        out *= rest;
    }
    if (square_root_factor) *square_root_factor = root;
    return sgn(v) < 0 ? Integer(-out) : out;
}

Scalar sqrt_rational(const Rational& q) {
    Rational root;
    if (is_rational_square(q, &root)) return Scalar(root);
    Integer nd = q.get_num() * q.get_den();
    Integer factor;
    Integer d = squarefree_part(nd, &factor);
    Rational coeff(factor, q.get_den());
    coeff.canonicalize();
    if (!d.fits_slong_p()) throw FieldError("radicand too large for a quadratic field: " + d.get_str());
    return Scalar::quadratic(0, coeff, d.get_si());
}

Scalar Scalar::from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long d) {
    Scalar s;
    s.field_ = Field::quadratic(d);
    s.a_ = a;
    s.b_ = b;
    s.normalize();
    return s;
}

Scalar Scalar::gaussian(const Rational& re, const Rational& im) { return quadratic(re, im, -1); }

Scalar Scalar::approx(Complex z, const Rational& eps) {
    Scalar s;
    s.field_ = Field::certified_float(eps);
    s.z_ = z;
    return s;
}

Scalar Scalar::zero_of(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one_of(const Field& f) {
    Scalar s = zero_of(f);
    if (f.exact())
        s.a_ = 1;
    else
        s.z_ = 1;
    return s;
}

void Scalar::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (field_.kind == FieldKind::Rational) b_ = 0;
}

Complex Scalar::approx_value() const {
    if (!exact()) return z_;
    long double a = to_ld(a_);
    if (sgn(b_) == 0) return {a, 0};
    long double b = to_ld(b_);
    if (field_.d > 0) return {a + b * std::sqrt(static_cast<long double>(field_.d)), 0};
    return {a, b * std::sqrt(static_cast<long double>(-field_.d))};
}

bool Scalar::is_zero() const {
    if (exact()) return sgn(a_) == 0 && sgn(b_) == 0;
    return std::abs(z_) <= to_ld(field_.eps);
}

bool Scalar::is_one() const {
    if (exact()) return a_ == 1 && sgn(b_) == 0;
    return std::abs(z_ - Complex(1)) <= to_ld(field_.eps);
}

bool Scalar::is_rational() const { return exact() && sgn(b_) == 0; }

const Rational& Scalar::to_rational() const {
    if (!is_rational()) throw FieldError("value " + to_string() + " is not rational");
    return a_;
}

Scalar Scalar::lift(const Field& f) const {
    if (field_ == f) return *this;
    Field j = join(field_, f);
    if (!(j == f)) throw FieldError("cannot carry " + field_.name() + " value into " + f.name());
    Scalar s = zero_of(f);
    if (f.exact()) {
        s.a_ = a_;
        s.b_ = b_;
    } else {
        s.z_ = approx_value();
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.a_ = -a_;
    s.b_ = -b_;
    s.z_ = -z_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Field f = join(field_, o.field_);
    if (!(f == field_)) *this = lift(f);
    if (f.exact()) {
        a_ += o.a_;
        b_ += o.b_;
    } else {
        z_ += o.lift(f).z_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Field f = join(field_, o.field_);
    if (!(f == field_)) *this = lift(f);
    if (f.exact()) {
        Rational na = a_ * o.a_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        if (f.has_radical()) na += Rational(f.d) * b_ * o.b_;
        a_ = na;
        b_ = nb;
        normalize();
    } else {
        z_ *= o.lift(f).z_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (!exact()) return approx(Complex(1) / z_, field_.eps);
    Scalar s = *this;
    Rational norm = a_ * a_ - Rational(field_.has_radical() ? field_.d : 0) * b_ * b_;
    s.a_ = a_ / norm;
    s.b_ = -b_ / norm;
    s.normalize();
    return s;
}

Scalar Scalar::pow(const Integer& e) const {
    if (sgn(e) < 0) return inverse().pow(-e);
    Scalar result = one_of(field_);
    Scalar base = *this;
    Integer k = e;
    while (sgn(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result *= base;
        k >>= 1;
        if (sgn(k) > 0) base *= base;
    }
    return result;
}

Scalar Scalar::conjugate() const {
    Scalar s = *this;
    s.b_ = -b_;
    s.z_ = std::conj(z_);
    return s;
}

std::optional<Scalar> Scalar::sqrt_in_field() const {
    if (!exact()) return approx(std::sqrt(z_), field_.eps);
    Rational root;
    if (sgn(b_) == 0) {
        if (is_rational_square(a_, &root)) return Scalar(root).lift(field_);
        if (field_.has_radical()) {
            // a = y^2 d  ->  sqrt(a) = y sqrt(d)
            Rational ratio = a_ / Rational(field_.d);
            if (is_rational_square(ratio, &root)) {
                Scalar s = zero_of(field_);
                s.b_ = root;
                return s;
            }
        }
        return std::nullopt;
    }
    // (x + y sqrt d)^2 = a + b sqrt d  <=>  x^2 + d y^2 = a, 2xy = b
    Rational norm = a_ * a_ - Rational(field_.d) * b_ * b_;
    Rational s;
    if (!is_rational_square(norm, &s)) return std::nullopt;
    for (const Rational& x2 : {Rational((a_ + s) / 2), Rational((a_ - s) / 2)}) {
        Rational x;
        if (sgn(x2) == 0 || !is_rational_square(x2, &x)) continue;
        Scalar cand = zero_of(field_);
        cand.a_ = x;
        cand.b_ = b_ / (2 * x);
        cand.normalize();
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::optional<int> Scalar::real_sign() const {
    if (!exact()) {
        if (std::abs(z_.imag()) > to_ld(field_.eps)) return std::nullopt;
        if (std::abs(z_.real()) <= to_ld(field_.eps)) return 0;
        return z_.real() > 0 ? 1 : -1;
    }
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (field_.d < 0) return std::nullopt;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_, rhs = Rational(field_.d) * b_ * b_;
    return lhs > rhs ? sa : sb;
}

int Scalar::order(const Scalar& x, const Scalar& y) {
    if (x.exact() != y.exact()) return x.exact() ? -1 : 1;
    if (x.exact()) {
        if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? -1 : 1;
        if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? -1 : 1;
        return 0;
    }
    Complex a = x.z_, b = y.z_;
    if (a.real() != b.real()) return a.real() < b.real() ? -1 : 1;
    if (a.imag() != b.imag()) return a.imag() < b.imag() ? -1 : 1;
    return 0;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.exact() && y.exact()) {
        if (sgn(x.b_) == 0 && sgn(y.b_) == 0) return x.a_ == y.a_;
        if (!x.field_.has_radical() || !y.field_.has_radical() || x.field_.d != y.field_.d) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    Field f = join(x.field_, y.field_);
    return (x.lift(f) - y.lift(f)).is_zero();
}

std::string Scalar::to_string() const {
    if (!exact()) {
        std::ostringstream os;
        os << std::setprecision(18);
        long double eps = to_ld(field_.eps);
        long double re = std::abs(z_.real()) <= eps ? 0.0L : z_.real();
        long double im = std::abs(z_.imag()) <= eps ? 0.0L : z_.imag();
        os << re;
        if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
        return os.str();
    }
    if (sgn(b_) == 0) return a_.get_str();
    std::string radical = field_.kind == FieldKind::Gaussian ? "i" : "sqrt(" + std::to_string(field_.d) + ")";
    std::string coeff;
    Rational bb = abs(b_);
    if (bb != 1) coeff = bb.get_str() + "*";
    std::string out;
    if (sgn(a_) != 0) {
        out = a_.get_str() + (sgn(b_) < 0 ? " - " : " + ");
    } else if (sgn(b_) < 0) {
        out = "-";
    }
    return out + coeff + radical;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace eacp
