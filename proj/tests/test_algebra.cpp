#include "doctest.h"

#include "hyperalg/algebra.hpp"
#include "hyperalg/error.hpp"

#include <random>

using namespace hyperalg;

namespace {

const AlgebraSignature& H = AlgebraSignature::quaternion();
const AlgebraSignature& O = AlgebraSignature::octonion();

AlgebraElement elem(const AlgebraSignature& sig, std::vector<long> ints) {
    std::vector<Scalar> c;
    c.reserve(ints.size());
    for (long v : ints) c.emplace_back(Rational(v));
    return AlgebraElement(sig, std::move(c));
}

std::mt19937_64 rng(911);

AlgebraElement random_rational_elem(const AlgebraSignature& sig) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Scalar> c;
    for (int i = 0; i < sig.dim(); ++i) c.emplace_back(Rational(Integer(num(rng)), Integer(den(rng))));
    return AlgebraElement(sig, std::move(c));
}

} // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("quaternion table matches the defining relations") {
    auto u = [&](int i) { return AlgebraElement::unit(H, i); };
    AlgebraElement one = AlgebraElement::one(H);
    AlgebraElement i = u(1), j = u(2), k = u(3);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    for (int a = 0; a < 4; ++a) {
        CHECK(u(0) * u(a) == u(a));
        CHECK(u(a) * u(0) == u(a));
    }
}

TEST_CASE("octonion table matches the epsilon triples") {
    auto u = [&](int i) { return AlgebraElement::unit(O, i); };
    AlgebraElement one = AlgebraElement::one(O);
    const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                               {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (const auto& t : triples) {
        CHECK(u(t[0]) * u(t[1]) == u(t[2]));
        CHECK(u(t[1]) * u(t[2]) == u(t[0]));
        CHECK(u(t[2]) * u(t[0]) == u(t[1]));
        CHECK(u(t[1]) * u(t[0]) == -u(t[2]));
    }
    for (int i = 1; i <= 7; ++i) CHECK(u(i) * u(i) == -one);
    // every unordered pair of distinct imaginary units lies in exactly one triple
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            const auto& prods = O.products(i, j);
            REQUIRE(prods.size() == 1);
            CHECK(prods[0].first >= 1);
            CHECK((prods[0].second == Rational(1) || prods[0].second == Rational(-1)));
        }
    CHECK(u(1) * u(7) == u(6)); // triple 176
}

TEST_CASE("non-associativity witness and quaternion associativity") {
    auto u = [&](int i) { return AlgebraElement::unit(O, i); };
    AlgebraElement lhs = (u(1) * u(2)) * u(4);
    AlgebraElement rhs = u(1) * (u(2) * u(4));
    CHECK(lhs == u(7));
    CHECK(rhs == -u(7));
    CHECK(lhs != rhs);
    CHECK(!(lhs - rhs).is_zero());
    for (int t = 0; t < 200; ++t) {
        AlgebraElement a = random_rational_elem(H), b = random_rational_elem(H),
                       c = random_rational_elem(H);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("alternativity on random rational octonion pairs") {
    for (int t = 0; t < 300; ++t) {
        AlgebraElement a = random_rational_elem(O), b = random_rational_elem(O);
        CHECK(a * (a * b) == (a * a) * b);
        CHECK((a * b) * b == a * (b * b));
    }
}

TEST_CASE("norm composition N(ab) = N(a)N(b)") {
    for (int t = 0; t < 60; ++t) {
        AlgebraElement a = random_rational_elem(H), b = random_rational_elem(H);
        CHECK((a * b).norm() == a.norm() * b.norm());
        AlgebraElement c = random_rational_elem(O), d = random_rational_elem(O);
        CHECK((c * d).norm() == c.norm() * d.norm());
    }
}

TEST_CASE("conj, trace, norm") {
    AlgebraElement q = elem(H, {1, 2, 3, 4});
    CHECK(q.conj() == elem(H, {1, -2, -3, -4}));
    CHECK(AlgebraElement::unit(H, 1).trace().is_zero());
    AlgebraElement onei = elem(H, {1, 1, 0, 0});
    CHECK(onei.norm() == Scalar(2));
    CHECK(onei * onei.conj() == AlgebraElement::one(H).scaled(Scalar(2)));
    AlgebraElement g = AlgebraElement::unit(AlgebraSignature::generic(
        2, {Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(1), Rational(1), Rational(0)},
        {"1", "u"}), 1);
    CHECK_THROWS_WITH_AS(g.conj(), doctest::Contains("NoInvolution"), Error);
}

TEST_CASE("inverses") {
    AlgebraElement i = AlgebraElement::unit(H, 1);
    CHECK(i.inv() == -i);
    AlgebraElement onei = elem(H, {1, 1, 0, 0});
    AlgebraElement expected(H, {Scalar(Rational(Integer(1), Integer(2))),
                                Scalar(Rational(Integer(-1), Integer(2))), Scalar(), Scalar()});
    CHECK(onei.inv() == expected);
    CHECK(onei * onei.inv() == AlgebraElement::one(H));
    CHECK(onei.inv() * onei == AlgebraElement::one(H));
    CHECK_THROWS_WITH_AS(AlgebraElement(H).inv(), doctest::Contains("DivisionByZero"), Error);
    for (int t = 0; t < 20; ++t) {
        AlgebraElement o = random_rational_elem(O);
        if (o.is_zero()) continue;
        CHECK(o * o.inv() == AlgebraElement::one(O));
        CHECK(o.inv() * o == AlgebraElement::one(O));
    }
}

TEST_CASE("coordinate extraction identities") {
    AlgebraElement q = elem(H, {1, 2, 3, 4});
    auto coords = q.coord_extract();
    CHECK(coords[0] == Scalar(1));
    CHECK(coords[1] == Scalar(2));
    CHECK(coords[2] == Scalar(3));
    CHECK(coords[3] == Scalar(4));
    CHECK(AlgebraElement(H).coord_extract() == std::vector<Scalar>(4, Scalar()));
    auto ocoords = AlgebraElement::unit(O, 5).coord_extract();
    for (int i = 0; i < 8; ++i) CHECK(ocoords[i] == Scalar(i == 5 ? 1 : 0));
    for (int t = 0; t < 50; ++t) {
        AlgebraElement a = random_rational_elem(H);
        CHECK(a.coord_extract() == a.coords());
        AlgebraElement o = random_rational_elem(O);
        CHECK(o.coord_extract() == o.coords());
    }
}

TEST_CASE("center membership matches vanishing imaginary coordinates") {
    auto commutes_associates = [&](const AlgebraElement& a, const AlgebraSignature& sig) {
        for (int t = 0; t < 20; ++t) {
            AlgebraElement b = random_rational_elem(sig), c = random_rational_elem(sig);
            if (!(a * b == b * a)) return false;
            if (!((a * b) * c == a * (b * c))) return false;
            if (!((b * a) * c == b * (a * c))) return false;
            if (!((b * c) * a == b * (c * a))) return false;
        }
        return true;
    };
    AlgebraElement central = AlgebraElement::scalar(O, Scalar(Rational(Integer(7), Integer(3))));
    CHECK(central.is_central());
    CHECK(commutes_associates(central, O));
    AlgebraElement off = elem(O, {1, 0, 0, 2, 0, 0, 0, 0});
    CHECK(!off.is_central());
    CHECK(!commutes_associates(off, O));
}

TEST_CASE("element printing") {
    CHECK(elem(H, {1, 2, 3, -4}).str() == "1 + 2i + 3j - 4k");
    CHECK(AlgebraElement::unit(O, 1).str() == "e1");
    CHECK(AlgebraElement(H).str() == "0");
    AlgebraElement f(O, {Scalar(), Scalar(), Scalar(), Scalar(), Scalar(), Scalar(), Scalar(),
                         Scalar(Rational(Integer(3), Integer(5)))});
    CHECK(f.str() == "3/5*e7");
    CHECK(elem(H, {0, -1, 0, 0}).str() == "-i");
}

TEST_CASE("signature mismatch errors") {
    CHECK_THROWS_WITH_AS(AlgebraElement::one(H) * AlgebraElement::one(O),
                         doctest::Contains("SignatureMismatch"), Error);
}

TEST_SUITE_END();
