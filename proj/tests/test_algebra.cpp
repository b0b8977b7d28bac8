#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace eacp;

TEST_CASE("product agrees with the structure-constant oracle") {
    testkit::Gen g(21);
    for (int t = 0; t < 200; ++t) {
        Algebra alg = g.algebra(g.range(1, 4));
        Element x = g.element(alg.n()), y = g.element(alg.n());
        CHECK(multiply(alg, x, y) == testkit::tensor_product(alg, x, y));
    }
}

TEST_CASE("commutative and bilinear") {
    testkit::Gen g(22);
    for (int t = 0; t < 200; ++t) {
        Algebra alg = g.algebra(g.range(1, 4));
        const std::size_t n = alg.n();
        Element x = g.element(n), y = g.element(n), z = g.element(n);
        Scalar c = g.small();
        CHECK(multiply(alg, x, y) == multiply(alg, y, x));
        CHECK(multiply(alg, c * x + y, z) == c * multiply(alg, x, z) + multiply(alg, y, z));
    }
}

TEST_CASE("multiplication table") {
    Algebra alg = new_algebra({{1, 2}, {0, Rational(1, 2)}}, {Scalar(3), Scalar(-1)});
    CHECK(multiply(alg, alg.h(1), alg.h(2)).is_zero());
    CHECK(multiply(alg, alg.r(), alg.r()).is_zero());
    CHECK(multiply(alg, alg.h(1), alg.r()) == Element({1, 2}, 3));
    CHECK(multiply(alg, alg.r(), alg.h(2)) == Element({0, Rational(1, 2)}, -1));
}

TEST_CASE("square of y + beta r is 2 beta (y^T A, y^T b)") {
    testkit::Gen g(23);
    for (int t = 0; t < 200; ++t) {
        Algebra alg = g.algebra(g.range(1, 4));
        Element x = g.element(alg.n());
        Vector yA = std::span<const Scalar>(x.alpha()) * alg.A();
        CHECK(multiply(alg, x, x) == (Scalar(2) * x.beta()) * Element(yA, dot(x.alpha(), alg.b())));
    }
}

TEST_CASE("powers") {
    testkit::Gen g(24);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 3));
        Element x = g.element(alg.n());
        Element p = x;
        for (unsigned k = 2; k <= 4; ++k) {
            p = testkit::tensor_product(alg, p, x);
            CHECK(principal_power(alg, x, k) == p);
        }
        Element q = x;
        for (unsigned m = 1; m <= 3; ++m) {
            q = testkit::tensor_product(alg, q, q);
            CHECK(plenary_power(alg, x, m) == q);
        }
        CHECK(right_operator_iterate(alg, x, alg.r(), 0) == x);
    }
    Algebra alg = g.algebra(2);
    CHECK_THROWS(principal_power(alg, alg.r(), 0));
    CHECK_THROWS(plenary_power(alg, alg.r(), 0));
}

TEST_CASE("iterating R_r on h_i walks the rows of A^m and A^(m-1) b") {
    testkit::Gen g(25);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 4));
        const std::size_t n = alg.n();
        for (std::size_t i = 1; i <= n; ++i)
            for (unsigned m = 1; m <= 4; ++m) {
                StructuralMatrix Mm = matrix_oplus_power(alg.structure(), m);
                Element expect(Mm.A.row(i - 1), Mm.b[i - 1]);
                CHECK(right_operator_iterate(alg, alg.h(i), alg.r(), m) == expect);
            }
    }
}

TEST_CASE("oplus product is the A-block product with the column carried along") {
    testkit::Gen g(26);
    for (int t = 0; t < 50; ++t) {
        Algebra x = g.algebra(3), y = g.algebra(3);
        StructuralMatrix p = matrix_oplus_product(x.structure(), y.structure());
        CHECK(p.A == x.A() * y.A());
        CHECK(p.b == x.A() * std::span<const Scalar>(y.b()));
        CHECK(matrix_power(x.A(), 3) == x.A() * x.A() * x.A());
        CHECK(matrix_power(x.A(), 0) == Matrix::identity(3));
    }
}

TEST_CASE("right operator matrix acts on coefficient rows") {
    testkit::Gen g(27);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 3));
        Element a = g.element(alg.n()), y = g.element(alg.n());
        Matrix T = right_operator_matrix(alg, a);
        Vector yc = y.coords();
        CHECK(Element::from_coords(std::span<const Scalar>(yc) * T) == multiply(alg, y, a));
    }
}

TEST_CASE("occurs and bad shapes") {
    Element x({0, 1}, 0);
    CHECK(occurs(x, GeneratorIndex::h(2)));
    CHECK_FALSE(occurs(x, GeneratorIndex::h(1)));
    CHECK_FALSE(occurs(x, GeneratorIndex::r()));
    CHECK_THROWS_AS(occurs(x, GeneratorIndex::h(3)), std::out_of_range);
    CHECK_THROWS_AS(new_algebra({{1, 2}, {3}}, {Scalar(0), Scalar(0)}), DimensionError);
    CHECK_THROWS_AS(new_algebra({{1}}, {Scalar(0), Scalar(0)}), DimensionError);
    Algebra a = new_algebra({{1}}, {Scalar(0)});
    Algebra b = new_algebra({{1, 0}, {0, 1}}, {Scalar(0), Scalar(0)});
    CHECK_THROWS_AS(multiply(a, a.h(1), b.h(1)), AlgebraMismatch);
}
