#include "eacp/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace eacp {

Polynomial::Polynomial(Vector ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
    Vector v(k + 1, Scalar(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

bool Polynomial::all_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Field Polynomial::field() const {
    Field f = Field::rational();
    for (const auto& s : c_) f = join(f, s.field());
    return f;
}

Scalar Polynomial::operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    Vector d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * c_[k]);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return Polynomial(scale(lead().inverse(), c_));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Vector v(std::max(p.c_.size(), q.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < p.c_.size(); ++k) v[k] += p.c_[k];
    for (std::size_t k = 0; k < q.c_.size(); ++k) v[k] += q.c_[k];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p + Polynomial(scale(Scalar(-1), q.c_));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    Vector v(p.c_.size() + q.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Vector rem = p.c_;
    const int dq = q.degree();
    if (p.degree() < dq) return {Polynomial{}, p};
    Vector quot(static_cast<std::size_t>(p.degree() - dq + 1), Scalar(0));
    Scalar inv = q.lead().inverse();
    for (int k = p.degree() - dq; k >= 0; --k) {
        Scalar c = rem[static_cast<std::size_t>(k + dq)] * inv;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= c * q.c_[static_cast<std::size_t>(j)];
        rem[static_cast<std::size_t>(k + dq)] = Scalar::zero_of(rem[static_cast<std::size_t>(k + dq)].field());
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial p, Polynomial q) {
    while (!q.is_zero()) {
        auto r = divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Vector c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    Matrix Mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = m * Mk;
        for (std::size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
        Matrix AM = m * Mk;
        Scalar tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

namespace {

using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

std::vector<Complex> numeric_roots(const Polynomial& p) {
    const int deg = p.degree();
    std::vector<Complex> c;
    for (const auto& s : p.coeffs()) c.push_back(s.approx_value());
    std::vector<Complex> out;
    if (deg <= 0) return out;
    CMat comp = CMat::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<CMat> solver(comp, false);
    for (int i = 0; i < deg; ++i) {
        Complex z = solver.eigenvalues()(i);
        for (int it = 0; it < 8; ++it) {  // Newton polish
            Complex f = 0, df = 0;
            for (int k = deg; k >= 0; --k) {
                df = df * z + f;
                f = f * z + c[static_cast<std::size_t>(k)];
            }
            if (std::abs(df) == 0) break;
            z -= f / df;
        }
        out.push_back(z);
    }
    return out;
}

std::vector<Integer> divisors(const Integer& v) {
    std::vector<std::pair<Integer, int>> factors;
    Integer rest = abs(v);
    for (unsigned long p = 2; Integer(p) * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        if (e) factors.emplace_back(Integer(p), e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

Integer round_ld(long double x) {
    long double r = std::nearbyint(x);
    return Integer(static_cast<double>(r));
}

std::optional<Rational> rational_root(const Polynomial& g) {
    Integer lcm = 1;
    for (const auto& s : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.to_rational().get_den().get_mpz_t());
    Integer lead = abs(Integer(g.lead().to_rational() * lcm));
    std::vector<Rational> candidates;
    for (Complex z : numeric_roots(g)) {
        if (std::abs(z.imag()) > 1e-6L * (1 + std::abs(z.real()))) continue;
        const long double x = z.real();
        if (std::abs(x) > 1e15L) continue;
        if (lead <= Integer("1000000000000")) {
            for (const auto& q : divisors(lead)) {
                if (q > Integer("1000000000000")) continue;
                Integer p0 = round_ld(x * q.get_d());
                for (int delta = -1; delta <= 1; ++delta) candidates.emplace_back(p0 + delta, q);
            }
        } else {
            // continued-fraction convergents of the numeric root
            long double y = x;
            Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
            for (int it = 0; it < 40; ++it) {
                Integer a = round_ld(std::floor(y));
                Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
                candidates.emplace_back(h2, k2);
                h0 = h1; h1 = h2; k0 = k1; k1 = k2;
                long double frac = y - std::floor(y);
                if (frac < 1e-18L) break;
                y = 1 / frac;
            }
        }
    }
    for (auto& c : candidates) {
        c.canonicalize();
        if (g(Scalar(c)).is_zero()) return c;
    }
    return std::nullopt;
}

void push_numeric(RootSet& out, const Polynomial& g, const Rational& eps) {
    for (Complex z : numeric_roots(g)) {
        bool dup = false;
        for (const auto& r : out.roots)
            if (!r.exact && std::abs(r.value.approx_value() - z) < 1e-7L) dup = true;
        if (!dup) out.roots.push_back({Scalar::approx(z, eps), false});
    }
}

}  // namespace

RootSet find_roots(const Polynomial& p, const Field& context, const Rational& eps) {
    RootSet out;
    if (p.degree() <= 0) return out;
    const bool exact_input = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& s) { return s.exact(); });
    if (!exact_input) {
        push_numeric(out, p, eps);
        std::sort(out.roots.begin(), out.roots.end(),
                  [](const Root& x, const Root& y) { return Scalar::order(x.value, y.value) < 0; });
        return out;
    }
    Polynomial g = Polynomial::divmod(p, Polynomial::gcd(p, p.derivative())).first.monic();
    if (g.coeffs().front().is_zero()) {
        out.roots.push_back({Scalar(0), true});
        g = Polynomial::divmod(g, Polynomial::monomial(Scalar(1), 1)).first;
    }
    while (g.degree() >= 3 && g.all_rational()) {
        auto r = rational_root(g);
        if (!r) break;
        out.roots.push_back({Scalar(*r), true});
        g = Polynomial::divmod(g, Polynomial(Vector{Scalar(-*r), Scalar(1)})).first;
    }
    if (g.degree() == 1) {
        out.roots.push_back({-g.coeffs()[0] / g.coeffs()[1], true});
    } else if (g.degree() == 2) {
        const auto& c = g.coeffs();
        Scalar disc = c[1] * c[1] - Scalar(4) * c[2] * c[0];
        std::optional<Scalar> s;
        try {
            Field f = join(disc.field(), context);
            if (f.kind == FieldKind::Rational)
                s = sqrt_rational(disc.to_rational());
            else
                s = disc.lift(f).sqrt_in_field();
        } catch (const FieldError&) {
            s.reset();
        }
        if (s) {
            Scalar two_a = Scalar(2) * c[2];
            out.roots.push_back({(-c[1] + *s) / two_a, true});
            out.roots.push_back({(-c[1] - *s) / two_a, true});
        } else {
            out.numeric_fallback = true;
            push_numeric(out, g, eps);
        }
    } else if (g.degree() >= 3) {
        out.numeric_fallback = true;
        push_numeric(out, g, eps);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Root& x, const Root& y) { return Scalar::order(x.value, y.value) < 0; });
    return out;
}

}  // namespace eacp
