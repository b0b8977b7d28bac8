#include "eacp/algebra.hpp"

namespace eacp {

namespace {

void check_same(const Element& x, std::size_t n, const char* what) {
    if (x.n() != n)
        throw AlgebraMismatch(std::string(what) + ": element has " + std::to_string(x.n()) +
                              " hen coefficients, algebra has n = " + std::to_string(n));
}

}  // namespace

Field StructuralMatrix::field() const {
    Field f = A.field();
    for (const auto& s : b) f = join(f, s.field());
    return f;
}

Matrix StructuralMatrix::rect() const {
    const std::size_t n = A.rows();
    Matrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = A(i, j);
        m(i, n) = b[i];
    }
    return m;
}

Matrix StructuralMatrix::padded() const {
    const std::size_t n = A.rows();
    Matrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = A(i, j);
        m(i, n) = b[i];
    }
    return m;
}

StructuralMatrix StructuralMatrix::from_padded(const Matrix& p) {
    const std::size_t n = p.rows() - 1;
    StructuralMatrix s{Matrix(n, n), Vector(n, Scalar(0))};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.A(i, j) = p(i, j);
        s.b[i] = p(i, n);
    }
    return s;
}

Element Element::zero(std::size_t n) { return Element(Vector(n, Scalar(0)), Scalar(0)); }

Element Element::h(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw std::out_of_range("generator h" + std::to_string(i) + " out of range 1.." + std::to_string(n));
    Element e = zero(n);
    e.alpha_[i - 1] = Scalar(1);
    return e;
}

Element Element::r(std::size_t n) { return Element(Vector(n, Scalar(0)), Scalar(1)); }

Element Element::from_coords(std::span<const Scalar> coords) {
    if (coords.empty()) throw DimensionError("element needs at least the r coefficient");
    return Element(Vector(coords.begin(), coords.end() - 1), coords.back());
}

Vector Element::coords() const {
    Vector v = alpha_;
    v.push_back(beta_);
    return v;
}

bool Element::is_zero() const { return beta_.is_zero() && eacp::is_zero(alpha_); }

Element& Element::operator+=(const Element& o) {
    check_same(o, n(), "element sum");
    for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] += o.alpha_[i];
    beta_ += o.beta_;
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += Scalar(-1) * o; }

Element operator*(const Scalar& s, const Element& x) { return Element(scale(s, x.alpha_), s * x.beta_); }

Algebra::Algebra(StructuralMatrix m, std::optional<std::string> label) : m_(std::move(m)), label_(std::move(label)) {
    if (m_.A.rows() == 0) throw DimensionError("an EACP needs at least one hen generator (n >= 1)");
    if (m_.A.rows() != m_.A.cols()) throw DimensionError("A must be square");
    if (m_.b.size() != m_.A.rows()) throw DimensionError("b must have length n");
    field_ = m_.field();
    m_.A = m_.A.lift(field_);
    for (auto& s : m_.b) s = s.lift(field_);
}

std::vector<Element> Algebra::generators() const {
    std::vector<Element> g;
    for (std::size_t i = 1; i <= n(); ++i) g.push_back(h(i));
    g.push_back(r());
    return g;
}

Algebra Algebra::lift(const Field& f) const {
    StructuralMatrix m = m_;
    m.A = m.A.lift(f);
    for (auto& s : m.b) s = s.lift(f);
    return Algebra(std::move(m), label_);
}

Algebra new_algebra(const std::vector<Vector>& A, const Vector& b, std::optional<std::string> label) {
    const std::size_t n = A.size();
    if (n == 0) throw DimensionError("A must have at least one row");
    for (std::size_t i = 0; i < n; ++i)
        if (A[i].size() != n)
            throw DimensionError("A must be square: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(A[i].size()) + " entries, expected " + std::to_string(n));
    if (b.size() != n)
        throw DimensionError("b has length " + std::to_string(b.size()) + ", expected " + std::to_string(n));
    // join() throws on two different radicands; mixing exact and float is
    // rejected here as well.
    Field f = Field::rational();
    bool saw_float = false, saw_exact_radical = false;
    auto visit = [&](const Scalar& s) {
        if (!s.exact()) saw_float = true;
        if (s.exact() && !s.is_rational()) saw_exact_radical = true;
        f = join(f, s.field());
    };
    for (const auto& row : A)
        for (const auto& s : row) visit(s);
    for (const auto& s : b) visit(s);
    if (saw_float && saw_exact_radical) throw FieldError("mixed backends: float entries next to exact irrational entries");
    return Algebra(StructuralMatrix{Matrix::from_rows(A), b}, std::move(label));
}

Element multiply(const Algebra& alg, const Element& x, const Element& y) {
    const std::size_t n = alg.n();
    check_same(x, n, "multiply");
    check_same(y, n, "multiply");
    Vector w(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) w[i] = x.alpha()[i] * y.beta() + x.beta() * y.alpha()[i];
    Vector alpha = std::span<const Scalar>(w) * alg.A();
    Scalar beta = dot(w, alg.b());
    return Element(std::move(alpha), std::move(beta));
}

Element principal_power(const Algebra& alg, const Element& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("principal power needs k >= 1 (the algebra has no unit)");
    Element p = x;
    for (unsigned i = 1; i < k; ++i) p = multiply(alg, p, x);
    return p;
}

Element plenary_power(const Algebra& alg, const Element& x, unsigned m) {
    if (m == 0) throw std::invalid_argument("plenary power needs m >= 1");
    Element p = x;
    for (unsigned i = 0; i < m; ++i) p = multiply(alg, p, p);
    return p;
}

Element right_operator_iterate(const Algebra& alg, const Element& x, const Element& a, unsigned m) {
    Element p = x;
    for (unsigned i = 0; i < m; ++i) p = multiply(alg, p, a);
    return p;
}

bool occurs(const Element& x, GeneratorIndex index) {
    if (index.is_r) return !x.beta().is_zero();
    if (index.i < 1 || index.i > x.n())
        throw std::out_of_range("generator index " + std::to_string(index.i) + " out of range 1.." + std::to_string(x.n()));
    return !x.alpha()[index.i - 1].is_zero();
}

Matrix right_operator_matrix(const Algebra& alg, const Element& x) {
    const std::size_t d = alg.dim();
    Matrix T(d, d);
    auto gens = alg.generators();
    for (std::size_t k = 0; k < d; ++k) T.set_row(k, multiply(alg, gens[k], x).coords());
    return T;
}

StructuralMatrix matrix_oplus_product(const StructuralMatrix& M, const StructuralMatrix& H) {
    if (M.n() != H.n()) throw DimensionError("⊕-product needs equal n");
    return StructuralMatrix{M.A * H.A, M.A * std::span<const Scalar>(H.b)};
}

Matrix matrix_power(const Matrix& A, unsigned m) {
    Matrix result = Matrix::identity(A.rows(), A.field());
    Matrix base = A;
    while (m > 0) {
        if (m & 1U) result = result * base;
        m >>= 1U;
        if (m > 0) base = base * base;
    }
    return result;
}

StructuralMatrix matrix_oplus_power(const StructuralMatrix& M, unsigned m) {
    if (m == 0) throw std::invalid_argument("⊕-power needs m >= 1");
    Matrix prev = matrix_power(M.A, m - 1);
    return StructuralMatrix{prev * M.A, prev * std::span<const Scalar>(M.b)};
}

}  // namespace eacp
