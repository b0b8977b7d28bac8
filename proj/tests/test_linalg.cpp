#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eacp/eigen.hpp"
#include "support.hpp"

using namespace eacp;

namespace {

Matrix random_matrix(testkit::Gen& g, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = g.sparse(0.4);
    return m;
}

Polynomial poly(std::initializer_list<long> ascending) {
    Vector v;
    for (long c : ascending) v.push_back(Scalar(c));
    return Polynomial(v);
}

}  // namespace

TEST_CASE("rank-nullity and kernels") {
    testkit::Gen g(3);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = g.range(1, 5), c = g.range(1, 5);
        Matrix m = random_matrix(g, r, c);
        auto N = nullspace(m);
        CHECK(rank(m) + N.size() == c);
        for (const auto& v : N) CHECK(is_zero(m * std::span<const Scalar>(v)));
        auto L = left_kernel(m);
        CHECK(rank(m) + L.size() == r);
        for (const auto& v : L) CHECK(is_zero(std::span<const Scalar>(v) * m));
    }
}

TEST_CASE("inverse and determinant") {
    testkit::Gen g(4);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = g.range(1, 4);
        Matrix m = random_matrix(g, n, n);
        auto inv = inverse(m);
        CHECK(inv.has_value() == !determinant(m).is_zero());
        if (inv) CHECK(m * *inv == Matrix::identity(n));
    }
}

TEST_CASE("spans, coordinates and intersections") {
    testkit::Gen g(5);
    for (int t = 0; t < 100; ++t) {
        std::size_t d = g.range(2, 4);
        std::vector<Vector> X, Y;
        for (int k = g.range(1, 3); k > 0; --k) X.push_back(g.vec(d));
        for (int k = g.range(1, 3); k > 0; --k) Y.push_back(g.vec(d));
        auto BX = span_basis(X, d), BY = span_basis(Y, d);
        CHECK(same_span(BX, X, d));
        Vector v = add(scale(g.small(), X[0]), scale(g.small(), X.back()));
        CHECK(in_span(BX, v));
        auto c = coordinates(BX, v);
        REQUIRE(c.has_value());
        Vector back(d, Scalar(0));
        for (std::size_t k = 0; k < BX.size(); ++k) back = add(back, scale((*c)[k], BX[k]));
        CHECK(back == v);
        auto I = intersect(BX, BY, d);
        for (const auto& w : I) CHECK((in_span(BX, w) && in_span(BY, w)));
        std::vector<Vector> sum = BX;
        sum.insert(sum.end(), BY.begin(), BY.end());
        CHECK(I.size() + span_basis(sum, d).size() == BX.size() + BY.size());
    }
}

TEST_CASE("characteristic polynomial vanishes at the matrix") {
    testkit::Gen g(6);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = g.range(1, 4);
        Matrix m = random_matrix(g, n, n);
        Polynomial p = characteristic_polynomial(m);
        CHECK(p.degree() == static_cast<int>(n));
        Matrix acc(n, n), power = Matrix::identity(n);
        for (const auto& c : p.coeffs()) {
            acc = acc + c * power;
            power = power * m;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("rational and quadratic roots are exact") {
    // (t - 1/2)(t + 2)(t^2 - 2)
    Polynomial p = (poly({-1, 2}) * poly({2, 1})) * poly({-2, 0, 1});
    RootSet rs = find_roots(p);
    CHECK_FALSE(rs.numeric_fallback);
    CHECK(rs.roots.size() == 4);
    for (const auto& r : rs.roots) {
        CHECK(r.exact);
        CHECK(p(r.value).is_zero());
    }
    // t^2 + 1 needs i
    RootSet ri = find_roots(poly({1, 0, 1}));
    CHECK(ri.roots.size() == 2);
    for (const auto& r : ri.roots) CHECK(r.exact);
}

TEST_CASE("irreducible cubic falls back to flagged numeric roots") {
    Polynomial p = poly({-2, 0, 0, 1});
    RootSet rs = find_roots(p);
    CHECK(rs.numeric_fallback);
    CHECK(rs.roots.size() == 3);
    for (const auto& r : rs.roots) {
        CHECK_FALSE(r.exact);
        auto z = r.value.approx_value();
        CHECK(std::abs(z * z * z - Complex(2)) < 1e-9L);
    }
}

TEST_CASE("common eigenvectors of a commuting family") {
    // diag(1, 2, 2) and a matrix acting on the second block
    Matrix T1(3, 3), T2(3, 3);
    T1(0, 0) = 1, T1(1, 1) = 2, T1(2, 2) = 2;
    T2(0, 0) = 5, T2(1, 1) = 1, T2(1, 2) = 1, T2(2, 2) = 1;
    EigenSearch es = common_left_eigenspaces({T1, T2}, 3);
    CHECK(es.certified);
    for (const auto& s : es.spaces)
        for (const auto& v : s.basis) {
            Vector w1 = std::span<const Scalar>(v) * T1, w2 = std::span<const Scalar>(v) * T2;
            CHECK(w1 == scale(s.eigenvalues[0], v));
            CHECK(w2 == scale(s.eigenvalues[1], v));
        }
    // e1 and e3 are common left eigenvectors; e2 is not (e2 T2 = e2 + e3)
    std::size_t total = 0;
    for (const auto& s : es.spaces) total += s.basis.size();
    CHECK(total == 2);
}
