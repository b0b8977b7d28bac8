#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eacp/periodicity.hpp"
#include "support.hpp"

using namespace eacp;
using Kind = PeriodResult::Kind;

namespace {

const Algebra& c6() {
    static const Algebra alg = build_canonical(CatalogId::parse("3D:C6(1,1)"));
    return alg;
}

void check_right(const Algebra& alg, unsigned cap) {
    for (std::size_t i = 1; i <= alg.n(); ++i) {
        PeriodResult p = right_period(alg, i, cap);
        auto brute = testkit::brute_right_period(alg, i, 12);
        INFO("i = " << i << ", p = " << p.to_string());
        switch (p.kind) {
            case Kind::Finite: CHECK(brute == std::optional<unsigned>(p.value)); break;
            case Kind::Infinite: CHECK_FALSE(brute.has_value()); break;
            case Kind::Unknown: CHECK((!brute || *brute > cap)); break;
        }
    }
}

void check_plenary(const Algebra& alg, unsigned cap) {
    for (std::size_t i = 1; i <= alg.n(); ++i) {
        PeriodResult q = plenary_period(alg, i, cap);
        auto brute = testkit::brute_plenary_period(alg, i, 10);
        INFO("i = " << i << ", q = " << q.to_string());
        switch (q.kind) {
            case Kind::Finite: CHECK(brute.first == std::optional<unsigned>(q.value)); break;
            case Kind::Infinite: CHECK_FALSE(brute.first.has_value()); break;
            case Kind::Unknown: CHECK((!brute.first || *brute.first > cap)); break;
        }
    }
}

}  // namespace

TEST_CASE("periods of the simple three-dimensional algebra") {
    CHECK(right_period(c6(), 1).is_finite(1));
    CHECK(right_period(c6(), 2).is_finite(2));
    CHECK(plenary_period(c6(), 1).is_finite(1));
    CHECK(plenary_period(c6(), 2).kind == Kind::Infinite);
    CHECK_THROWS_AS(right_period(c6(), 3), std::out_of_range);
    CHECK_THROWS_AS(plenary_period(c6(), 0), std::out_of_range);
}

TEST_CASE("right period matches the brute-force oracle") {
    testkit::Gen g(31);
    for (int t = 0; t < 150; ++t) check_right(g.algebra(g.range(1, 4), 0.55), 8);
}

TEST_CASE("plenary period matches the brute-force oracle") {
    testkit::Gen g(32);
    for (int t = 0; t < 150; ++t) check_plenary(g.algebra(g.range(1, 3), 0.5), 5);
}

TEST_CASE("nonnegative matrices use the shortest closed walk") {
    testkit::Gen g(33);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = g.range(1, 4);
        std::vector<Vector> A(n);
        for (auto& row : A)
            for (std::size_t j = 0; j < n; ++j) row.push_back(g.coin(0.6) ? Scalar(0) : Scalar(Rational(g.range(1, 3), g.range(1, 2))));
        Algebra alg = new_algebra(A, Vector(n, Scalar(0)));
        for (std::size_t i = 1; i <= n; ++i) {
            PeriodResult p = right_period(alg, i, 16);
            CHECK(p.kind != Kind::Unknown);
            auto brute = testkit::brute_right_period(alg, i, 2 * static_cast<unsigned>(n));
            if (p.kind == Kind::Finite) CHECK(brute == std::optional<unsigned>(p.value));
            else CHECK_FALSE(brute.has_value());
        }
    }
}

TEST_CASE("cancellation defeats the walk bound but not the search") {
    // A^2 has a zero diagonal entry even though h1 -> h2 -> h1 is a walk
    Algebra alg = new_algebra({{1, 1}, {-1, -1}}, {Scalar(0), Scalar(0)});
    PeriodResult p = right_period(alg, 1, 8);
    CHECK(p.is_finite(1));
    // A^2 = 0 here, so only m = 1 could work for h1, and a_11 = 1
    Algebra sq = new_algebra({{1, 1}, {-1, -1}}, {Scalar(1), Scalar(0)});
    CHECK(plenary_period(sq, 1, 8).kind == Kind::Infinite);
    CHECK_FALSE(testkit::brute_plenary_period(sq, 1, 10).first.has_value());
    // no walk back to h1
    Algebra z = new_algebra({{0, 1}, {0, 0}}, {Scalar(1), Scalar(0)});
    CHECK(right_period(z, 1).kind == Kind::Infinite);
    CHECK(plenary_period(z, 2).kind == Kind::Infinite);
}

TEST_CASE("closed form equals repeated squaring") {
    testkit::Gen g(34);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 3));
        for (std::size_t i = 1; i <= alg.n(); ++i) {
            Element direct = multiply(alg, alg.h(i), alg.r());
            for (unsigned m = 1; m <= 4; ++m) {
                direct = testkit::tensor_product(alg, direct, direct);
                CHECK(plenary_power_closed_form(alg, i, m).total() == direct);
            }
        }
    }
}

TEST_CASE("gamma recurrence") {
    testkit::Gen g(35);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 3));
        const std::size_t i = g.range(1, static_cast<int>(alg.n()));
        Vector v = alg.b();  // A^m b
        Scalar gamma = plenary_power_closed_form(alg, i, 1).coeff.expand();
        CHECK(gamma == Scalar(2) * alg.b()[i - 1]);
        for (unsigned m = 1; m <= 5; ++m) {
            v = alg.A() * std::span<const Scalar>(v);
            Scalar next = plenary_power_closed_form(alg, i, m + 1).coeff.expand();
            CHECK(next == Scalar(2) * gamma * gamma * v[i - 1]);
            gamma = next;
        }
    }
}

TEST_CASE("gamma ledger keeps exponents and caps expansion") {
    GammaLedger g = GammaLedger::first(1, Scalar(3));
    for (int k = 0; k < 3; ++k) g = g.next(Scalar(2));
    CHECK(g.m() == 4);
    CHECK(g.power_of_two == 15);
    CHECK(g.terms.front().second == 8);
    CHECK(g.terms.back().second == 1);
    for (int k = 0; k < 10; ++k) g = g.next(Scalar(1));
    CHECK_THROWS_AS(g.expand(), std::overflow_error);
}

TEST_CASE("corollary on canonical forms") {
    testkit::Gen g(36);
    for (int t = 0; t < 100; ++t) {
        Algebra alg = g.algebra(g.range(1, 3));
        Canonical c = canonicalize(alg);
        for (std::size_t i = 1; i <= alg.n(); ++i) {
            CorollaryCheck k = corollary_plenary_range(c.algebra, i);
            if (k.q.kind != Kind::Unknown) CHECK(k.holds);
        }
    }
    CHECK_THROWS_AS(corollary_plenary_range(new_algebra({{1}}, {Scalar(2)}), 1), PreconditionError);
}
