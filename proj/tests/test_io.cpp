#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eacp/io.hpp"
#include "support.hpp"

using namespace eacp;

TEST_CASE("element syntax") {
    CHECK(parse_element("1/2 h1 + r", 2) == Element({Rational(1, 2), 0}, 1));
    CHECK(parse_element("-h2 - 3*r", 2) == Element({0, -1}, -3));
    CHECK(parse_element("h", 1) == Element({1}, 0));
    CHECK(parse_element("0", 3).is_zero());
    CHECK(parse_element("h1 + h1", 2) == Element({2, 0}, 0));
    CHECK(parse_element("087/010 r", 2) == Element({0, 0}, Rational(87, 10)));
    CHECK(parse_element("  2 / 4h2", 2) == Element({0, Rational(1, 2)}, 0));
    for (const char* bad : {"", "h", "h3", "h0", "1/0 h1", "h1 r", "2", "x", "h1 +", "* h1", "h1h2", "rr", "1/ h1"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_element(bad, 2), InputError);
    }
}

TEST_CASE("formatting") {
    CHECK(format_element(Element({Rational(1, 2)}, Rational(1, 2))) == "1/2 h + 1/2 r");
    CHECK(format_element(Element({0, -1}, 2)) == "-h2 + 2 r");
    CHECK(format_element(Element({0, 0}, 0)) == "0");
}

TEST_CASE("format and parse are inverse on random elements") {
    testkit::Gen g(71);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = g.range(1, 4);
        Element x = g.element(n);
        CHECK(parse_element(format_element(x), n) == x);
    }
}

TEST_CASE("parser never crashes on random strings") {
    testkit::Gen g(72);
    const std::string alphabet = "hr0123456789/*+- .x";
    for (int t = 0; t < 3000; ++t) {
        std::string s;
        for (int k = g.range(0, 12); k > 0; --k) s.push_back(alphabet[g.range(0, static_cast<int>(alphabet.size()) - 1)]);
        try {
            Element x = parse_element(s, 3);
            // anything accepted must print to something that parses to the same value
            CHECK(parse_element(format_element(x), 3) == x);
        } catch (const InputError&) {
        }
    }
}

TEST_CASE("algebra JSON round trip") {
    testkit::Gen g(73);
    for (int t = 0; t < 50; ++t) {
        Algebra alg = g.algebra(g.range(1, 4));
        Json j = algebra_to_json(alg);
        CHECK(algebra_from_json(j) == alg);
        CHECK(algebra_from_json(Json::parse(j.dump())) == alg);
        Element x = g.element(alg.n());
        CHECK(element_from_json(element_to_json(x), alg.field(), alg.n()) == x);
    }
    Algebra gauss = new_algebra({{Scalar::gaussian(0, 1), 0}, {0, 1}}, {Scalar(1), Scalar(0)});
    CHECK(algebra_from_json(algebra_to_json(gauss)) == gauss);
    Algebra quad = new_algebra({{Scalar::quadratic(1, 2, 5)}}, {Scalar(1)});
    CHECK(algebra_from_json(algebra_to_json(quad)) == quad);
    Algebra fl = quad.lift(Field::certified_float(Rational(1, 1000000)));
    Algebra back = algebra_from_json(algebra_to_json(fl));
    CHECK(back == fl);
}

TEST_CASE("file parser rejects bad input with a pointer") {
    auto where = [](const char* text) {
        try {
            algebra_from_json(Json::parse(text));
        } catch (const InputError& e) {
            return e.where();
        }
        return std::string("accepted");
    };
    CHECK(where(R"({"n":2,"A":[["1","2"],["3"]],"b":["0","0"]})") == "/A/1");
    CHECK(where(R"({"n":1,"A":[["1/0"]],"b":["0"]})") == "/A/0/0");
    CHECK(where(R"({"n":1,"A":[["1"]],"b":["x"]})") == "/b/0");
    CHECK(where(R"({"n":3,"A":[["1"]],"b":["0"]})") == "/n");
    CHECK(where(R"({"A":[["1"]],"b":["0","1"]})") == "/b");
    CHECK(where(R"({"field":"octonion","A":[["1"]],"b":["0"]})") == "/field");
    CHECK(where(R"({"field":"rational","A":[[{"re":"1","im":"1"}]],"b":["0"]})") == "/A/0/0");
    CHECK(where(R"({"b":["0"]})").empty());
    CHECK(where(R"({"n":1,"field":"gaussian","A":[[{"re":"1/2","im":"-1"}]],"b":["1"]})") == "accepted");
}
