#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace eacp;

TEST_CASE("rationals are stored in lowest terms") {
    Scalar s = Scalar::from_string("-6/4");
    CHECK(s.to_string() == "-3/2");
    CHECK(Scalar::from_string(" 4 ").to_string() == "4");
    CHECK(Scalar::from_string("010/09") == Scalar(Rational(10, 9)));  // decimal, never octal
    CHECK_THROWS(Scalar::from_string("1/0"));
    CHECK_THROWS(Scalar::from_string("1/2/3"));
    CHECK_THROWS(Scalar::from_string("1/-2"));
    CHECK_THROWS(Scalar::from_string(""));
}

TEST_CASE("field axioms on random rationals") {
    testkit::Gen g(11);
    for (int t = 0; t < 200; ++t) {
        Scalar x = g.small(5), y = g.small(5), z = g.small(5);
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
    CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("quadratic extension arithmetic") {
    const long d = 2;
    Scalar s = Scalar::quadratic(0, 1, d);  // sqrt 2
    CHECK(s * s == Scalar(2));
    Scalar x = Scalar::quadratic(1, 1, d);
    CHECK(x * x.conjugate() == Scalar(-1));
    CHECK(x * x.inverse() == Scalar::one_of(Field::quadratic(d)));
    CHECK(x.real_sign() == std::optional<int>(1));
    CHECK(Scalar::quadratic(1, -1, d).real_sign() == std::optional<int>(-1));
    CHECK_THROWS_AS(Field::quadratic(4), FieldError);
    CHECK_THROWS_AS(Field::quadratic(12), FieldError);
    CHECK_THROWS_AS(Scalar::quadratic(0, 1, 3) + Scalar::quadratic(0, 1, 5), FieldError);
}

TEST_CASE("gaussian rationals") {
    Scalar i = Scalar::gaussian(0, 1);
    CHECK(i * i == Scalar(-1));
    CHECK(i.real_sign() == std::nullopt);
    CHECK((Scalar(Rational(1, 2)) + i).to_string().find('i') != std::string::npos);
}

TEST_CASE("square roots inside the field") {
    CHECK(Scalar(Rational(9, 4)).sqrt_in_field() == std::optional<Scalar>(Scalar(Rational(3, 2))));
    CHECK_FALSE(Scalar(2).sqrt_in_field().has_value());
    auto r = Scalar(-1).lift(Field::gaussian()).sqrt_in_field();
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(-1));
    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    auto q = Scalar::quadratic(3, 2, 2).sqrt_in_field();
    REQUIRE(q.has_value());
    CHECK(*q * *q == Scalar::quadratic(3, 2, 2));
    CHECK(sqrt_rational(Rational(8)) * sqrt_rational(Rational(8)) == Scalar(8));
}

TEST_CASE("float values compare with tolerance") {
    Rational eps(1, 1000000);
    Scalar a = Scalar::approx({0.5L, 0.0L}, eps);
    Scalar b = Scalar::approx({0.5L + 1e-9L, 0.0L}, eps);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK_FALSE(Scalar::approx({0.5L, 0.0L}, eps) == Scalar::approx({0.6L, 0.0L}, eps));
    CHECK_FALSE(a.exact());
    CHECK(Scalar(Rational(1, 2)).lift(a.field()) == a);
}
