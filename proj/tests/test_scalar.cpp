#include "doctest.h"

#include "hyperalg/error.hpp"
#include "hyperalg/scalar.hpp"

#include <cmath>
#include <random>

using namespace hyperalg;

namespace {

Scalar sqrt2() { return Scalar(Rational(2)).sqrt(); }

// Brute-force sign-change root counter on the square-free part, used as an
// independent oracle for the Sturm machinery. Exact rational arithmetic,
// fixed dyadic resolution.
int bisection_root_count(const QPoly& p_in, int depth = 18) {
    QPoly p = square_free_part(p_in);
    if (p.degree() < 1) return 0;
    Rational bound = cauchy_root_bound(p);
    long segments = 1L << 12;
    Rational width = (bound * Rational(2)) / Rational(segments);
    int count = 0;
    Rational a = -bound;
    int sa = p.sign_at(a);
    for (long i = 1; i <= segments; ++i) {
        Rational b = -bound + width * Rational(i);
        int sb = p.sign_at(b);
        if (sb == 0) { // landed on a root; count and move past it
            ++count;
            sa = 0;
            continue;
        }
        if (sa != 0 && sa != sb) ++count;
        if (sa == 0) sa = sb; // re-seed after an exact hit
        else sa = sb;
    }
    (void)depth;
    return count;
}

std::mt19937_64 rng(20240817);

Rational random_rational(long num_range = 20, long den_range = 6) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

Scalar random_scalar() {
    std::uniform_int_distribution<int> kind(0, 2);
    if (kind(rng) == 0) {
        // sqrt of a nonnegative rational, shifted: hits RealAlgebraic often
        Rational r = random_rational(12, 4).abs();
        return Scalar(r).sqrt() + Scalar(random_rational(6, 3));
    }
    return Scalar(random_rational());
}

} // namespace

TEST_SUITE_BEGIN("scalar");

TEST_CASE("isolate x^2 - 2: two algebraic roots with disjoint intervals") {
    auto roots = isolate_real_roots(QPoly{-2, 0, 1});
    REQUIRE(roots.size() == 2);
    CHECK(!roots[0].is_rational());
    CHECK(!roots[1].is_rational());
    CHECK(roots[0] < roots[1]);
    CHECK(roots[0].algebraic().hi() <= roots[1].algebraic().lo());
    // interval squeeze oracle
    CHECK(std::abs(roots[1].to_double() - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(roots[0].to_double() + std::sqrt(2.0)) < 1e-12);
    // exact: the roots square to 2
    CHECK(roots[0] * roots[0] == Scalar(Rational(2)));
    CHECK(roots[1] * roots[1] == Scalar(Rational(2)));
}

TEST_CASE("isolate x^2 + 1: no real roots") {
    CHECK(isolate_real_roots(QPoly{1, 0, 1}).empty());
}

TEST_CASE("isolate x^3 - x: rationals -1, 0, 1") {
    auto roots = isolate_real_roots(QPoly{0, -1, 0, 1});
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(r.is_rational());
    CHECK(roots[0].rational() == Rational(-1));
    CHECK(roots[1].rational() == Rational(0));
    CHECK(roots[2].rational() == Rational(1));
}

TEST_CASE("zero polynomial errors") {
    CHECK_THROWS_WITH_AS(isolate_real_roots(QPoly()), doctest::Contains("ZeroPolynomial"), Error);
}

TEST_CASE("rational roots with non-dyadic denominators are detected") {
    // (3x - 1)(x^2 - 2): the rational root 1/3 is never a bisection midpoint
    QPoly p = QPoly{-1, 3} * QPoly{-2, 0, 1};
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[1].is_rational());
    CHECK(roots[1].rational() == Rational(Integer(1), Integer(3)));
    CHECK(!roots[0].is_rational());
    CHECK(!roots[2].is_rational());
}

TEST_CASE("add(sqrt2, -sqrt2) = 0 as a Rational") {
    Scalar s = sqrt2();
    Scalar z = s + (-s);
    CHECK(z.is_rational());
    CHECK(z.is_zero());
}

TEST_CASE("mul(sqrt2, sqrt2) = 2 as a Rational") {
    Scalar s = sqrt2();
    Scalar t = s * s;
    CHECK(t.is_rational());
    CHECK(t.rational() == Rational(2));
}

TEST_CASE("div(1, 2) = 1/2") {
    Scalar q = Scalar(Rational(1)) / Scalar(Rational(2));
    CHECK(q.rational() == Rational(Integer(1), Integer(2)));
    CHECK_THROWS_WITH_AS(Scalar(1) / Scalar(0), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("compare: sqrt2 vs 141/100 is GT") {
    CHECK(Scalar::compare(sqrt2(), Scalar(Rational(Integer(141), Integer(100)))) == Cmp::GT);
    CHECK(Scalar::compare(sqrt2(), Scalar(Rational(Integer(142), Integer(100)))) == Cmp::LT);
}

TEST_CASE("compare: 1/3 vs 1/3 is EQ; -sqrt2 vs 0 is LT") {
    Scalar third(Rational(Integer(1), Integer(3)));
    CHECK(Scalar::compare(third, third) == Cmp::EQ);
    CHECK(Scalar::compare(-sqrt2(), Scalar(0)) == Cmp::LT);
}

TEST_CASE("mixed sums stay canonical") {
    // (1 + sqrt2) + (1 - sqrt2) = 2
    Scalar a = Scalar(1) + sqrt2();
    Scalar b = Scalar(1) - sqrt2();
    Scalar s = a + b;
    CHECK(s.is_rational());
    CHECK(s.rational() == Rational(2));
    // (1 + sqrt2)(1 - sqrt2) = -1
    Scalar p = a * b;
    CHECK(p.is_rational());
    CHECK(p.rational() == Rational(-1));
}

TEST_CASE("golden ratio arithmetic") {
    // phi = (1 + sqrt5)/2 satisfies phi^2 = phi + 1
    Scalar phi = (Scalar(1) + Scalar(Rational(5)).sqrt()) / Scalar(2);
    CHECK(phi * phi == phi + Scalar(1));
    CHECK(phi.inv() == phi - Scalar(1));
}

TEST_CASE("sqrt of perfect squares is rational") {
    CHECK(Scalar(Rational(Integer(9), Integer(4))).sqrt().rational() ==
          Rational(Integer(3), Integer(2)));
    CHECK(Scalar(0).sqrt().is_zero());
    CHECK_THROWS_WITH_AS(Scalar(-1).sqrt(), doctest::Contains("NegativeSqrt"), Error);
}

TEST_CASE("sqrt of algebraic values") {
    Scalar r = sqrt2().sqrt(); // 2^(1/4)
    CHECK(r.pow(4) == Scalar(2));
    CHECK(r > Scalar(1));
}

TEST_CASE("round-trip: minpoly of every scalar vanishes through scalar_arith") {
    for (int i = 0; i < 40; ++i) {
        Scalar s = random_scalar();
        if (s.is_rational()) continue;
        const QPoly& m = s.algebraic().minpoly();
        Scalar acc(0);
        for (int d = m.degree(); d >= 0; --d)
            acc = scalar_arith(ScalarOp::Mul, acc, s) + Scalar(m.coeff(d));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field axioms on random triples (rational/algebraic mix)") {
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("order is compatible with arithmetic") {
    for (int i = 0; i < 60; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        if (a < b) {
            CHECK(a + c < b + c);
            if (c > Scalar(0)) CHECK(a * c < b * c);
        }
    }
}

TEST_CASE("sturm counts match the bisection oracle") {
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_int_distribution<long> coef(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c) x = Rational(coef(rng));
        QPoly p(std::move(c));
        if (p.is_zero()) continue;
        auto exact = isolate_real_roots(p);
        CHECK(static_cast<int>(exact.size()) == bisection_root_count(p));
    }
}

TEST_CASE("scalar text round-trip") {
    Scalar s = sqrt2();
    Scalar t = Scalar::parse(s.str());
    CHECK(t == s);
    CHECK(Scalar::parse("-5/3").rational() == Rational(Integer(-5), Integer(3)));
    CHECK_THROWS_AS(Scalar::parse("alg([1, 0, 1], 0, 1)"), Error); // no real root
}

TEST_SUITE_END();
