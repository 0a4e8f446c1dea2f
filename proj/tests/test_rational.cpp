#include "doctest.h"

#include "hyperalg/error.hpp"
#include "hyperalg/rational.hpp"

using namespace hyperalg;

TEST_SUITE_BEGIN("rational");

TEST_CASE("canonical form") {
    Rational a(Integer(2), Integer(6));
    CHECK(a.num() == 1);
    CHECK(a.den() == 3);
    Rational b(Integer(-2), Integer(-6));
    CHECK(b == a);
    Rational c(Integer(2), Integer(-6));
    CHECK(c == -a);
    CHECK(c.den() == 3);
}

TEST_CASE("parse and print") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK(Rational::parse("17").str() == "17");
    CHECK_THROWS_AS(Rational::parse("x/y"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("arithmetic") {
    Rational half(Integer(1), Integer(2));
    Rational third(Integer(1), Integer(3));
    CHECK((half + third).str() == "5/6");
    CHECK((half - third).str() == "1/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half / third).str() == "3/2");
    CHECK_THROWS_AS(half / Rational(0), Error);
    CHECK(half.pow(3).str() == "1/8");
    CHECK(Rational(-2).pow(3) == Rational(-8));
}

TEST_CASE("floor and ceil") {
    Rational q(Integer(7), Integer(2));
    CHECK(q.floor() == 3);
    CHECK(q.ceil() == 4);
    Rational n(Integer(-7), Integer(2));
    CHECK(n.floor() == -4);
    CHECK(n.ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("simplest rational in an interval") {
    auto simplest = [](const char* lo, const char* hi) {
        return Rational::simplest_in(Rational::parse(lo), Rational::parse(hi)).str();
    };
    CHECK(simplest("-1/3", "1/7") == "0");
    CHECK(simplest("3/2", "9/4") == "2");
    CHECK(simplest("7/5", "3/2") == "3/2");   // endpoint allowed
    CHECK(simplest("-3/2", "-7/5") == "-3/2");
    CHECK(simplest("13/10", "7/5") == "4/3"); // between 1.3 and 1.4
    CHECK(simplest("5/2", "5/2") == "5/2");
}

TEST_CASE("simplest_in has minimal denominator") {
    // Every rational in (0.315, 0.335) has denominator >= 3; 1/3 is inside.
    Rational r = Rational::simplest_in(Rational::parse("63/200"), Rational::parse("67/200"));
    CHECK(r == Rational(Integer(1), Integer(3)));
}

TEST_CASE("isqrt") {
    CHECK(isqrt(Integer(0)) == 0);
    CHECK(isqrt(Integer(15)) == 3);
    CHECK(isqrt(Integer(16)) == 4);
    Integer n("123456789123456789");
    Integer r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
}

TEST_SUITE_END();
