#include "doctest.h"

#include "hyperalg/error.hpp"
#include "hyperalg/roots.hpp"

#include <complex>
#include <random>

using namespace hyperalg;

namespace {

const AlgebraSignature& H = AlgebraSignature::quaternion();
const AlgebraSignature& O = AlgebraSignature::octonion();

AlgebraElement elem(const AlgebraSignature& sig, std::vector<long> ints) {
    std::vector<Scalar> c;
    for (long v : ints) c.emplace_back(Rational(v));
    return AlgebraElement(sig, std::move(c));
}

UnivarPoly upoly(const AlgebraSignature& sig, std::vector<AlgebraElement> coeffs) {
    return UnivarPoly(sig, std::move(coeffs));
}

std::mt19937_64 rng(60660);

AlgebraElement random_int_elem(const AlgebraSignature& sig, long mag = 4) {
    std::uniform_int_distribution<long> num(-mag, mag);
    std::vector<Scalar> c;
    for (int i = 0; i < sig.dim(); ++i) c.emplace_back(Rational(num(rng)));
    return AlgebraElement(sig, std::move(c));
}

UnivarPoly random_upoly(const AlgebraSignature& sig, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    int d = deg(rng);
    std::vector<AlgebraElement> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_int_elem(sig));
    if (c.back().is_zero()) c.back() = AlgebraElement::one(sig);
    return UnivarPoly(sig, std::move(c));
}

// Independent double-precision oracle: Durand-Kerner on a real-coefficient
// polynomial. Returns all complex roots (with multiplicity).
std::vector<std::complex<double>> durand_kerner(const QPoly& p) {
    int d = p.degree();
    std::vector<std::complex<double>> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = p.coeff(i).to_double();
    for (int i = 0; i <= d; ++i) c[i] /= c[d].real();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };
    std::vector<std::complex<double>> z(d);
    std::complex<double> seed(0.4, 0.9), w(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        w *= seed;
        z[i] = w;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

double oracle_residual(const QPoly& p, std::complex<double> z) {
    std::complex<double> acc = 0;
    double scale = 0, za = std::max(1.0, std::abs(z)), zp = 1;
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + p.coeff(i).to_double();
    for (int i = 0; i <= p.degree(); ++i) {
        scale += std::abs(p.coeff(i).to_double()) * zp;
        zp *= za;
    }
    return std::abs(acc) / std::max(scale, 1e-30);
}

// Checks a RootSet against the numeric oracle on the squarefree companion:
// every descriptor matches a numeric root and every numeric root is covered.
bool matches_oracle(const RootSet& rs) {
    QPoly csf = square_free_part(companion(rs.input).to_qpoly());
    auto numeric = durand_kerner(csf);
    for (const auto& z : numeric)
        if (oracle_residual(csf, z) > 1e-9) return false;

    std::vector<std::complex<double>> reps;
    for (const auto& d : rs.descriptors) {
        reps.emplace_back(d.x().to_double(), std::sqrt(std::max(0.0, d.imag_norm_sq().to_double())));
    }
    // every descriptor matches some numeric root (conjugate pair for y > 0)
    for (const auto& r : reps) {
        bool hit = false;
        for (const auto& z : numeric)
            if (std::abs(z - r) < 1e-6 || std::abs(std::conj(z) - r) < 1e-6) hit = true;
        if (!hit) return false;
    }
    // every numeric root is covered by some descriptor
    for (const auto& z : numeric) {
        std::complex<double> zz(z.real(), std::abs(z.imag()));
        bool hit = false;
        for (const auto& r : reps)
            if (std::abs(zz - r) < 1e-6) hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace

TEST_SUITE_BEGIN("roots");

TEST_CASE("q^2 + 1 has the unit sphere as zero locus") {
    UnivarPoly p = upoly(H, {AlgebraElement::one(H), AlgebraElement(H), AlgebraElement::one(H)});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 1);
    CHECK(rs.descriptors[0].kind() == RootDescriptor::Kind::Sphere);
    CHECK(rs.descriptors[0].x() == Scalar(0));
    CHECK(rs.descriptors[0].y() == Scalar(1));
    CHECK(zero_locus_dimension(rs) == 2);
}

TEST_CASE("q^2 - q(i+j) + k has the single isolated root i") {
    AlgebraElement one = AlgebraElement::one(H);
    AlgebraElement i = AlgebraElement::unit(H, 1), j = AlgebraElement::unit(H, 2),
                   k = AlgebraElement::unit(H, 3);
    UnivarPoly p = upoly(H, {k, -(i + j), one});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 1);
    CHECK(rs.descriptors[0].kind() == RootDescriptor::Kind::Isolated);
    CHECK(rs.descriptors[0].point() == i);
    CHECK(!p.eval(j).is_zero()); // j is certified a non-root
    CHECK(zero_locus_dimension(rs) == 0);
}

TEST_CASE("q^2 - 1 has the two real roots") {
    UnivarPoly p = upoly(H, {-AlgebraElement::one(H), AlgebraElement(H), AlgebraElement::one(H)});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 2);
    for (const auto& d : rs.descriptors) {
        CHECK(d.kind() == RootDescriptor::Kind::Isolated);
        CHECK(d.point().is_central());
    }
    CHECK(zero_locus_dimension(rs) == 0);
}

TEST_CASE("q^2 - 2 has the two real algebraic roots") {
    UnivarPoly p = upoly(H, {AlgebraElement::one(H).scaled(Scalar(-2)), AlgebraElement(H),
                             AlgebraElement::one(H)});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 2);
    for (const auto& d : rs.descriptors) {
        CHECK(d.point().is_central());
        CHECK(d.point().coord(0) * d.point().coord(0) == Scalar(2));
    }
}

TEST_CASE("q^2 + 2 is a sphere with algebraic radius") {
    UnivarPoly p = upoly(H, {AlgebraElement::one(H).scaled(Scalar(2)), AlgebraElement(H),
                             AlgebraElement::one(H)});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 1);
    CHECK(rs.descriptors[0].kind() == RootDescriptor::Kind::Sphere);
    CHECK(rs.descriptors[0].x() == Scalar(0));
    CHECK(rs.descriptors[0].imag_norm_sq() == Scalar(2));
    Scalar y = rs.descriptors[0].y();
    CHECK(y * y == Scalar(2));
}

TEST_CASE("octonion spheres have dimension 6") {
    UnivarPoly p = upoly(O, {AlgebraElement::one(O), AlgebraElement(O), AlgebraElement::one(O)});
    RootSet rs = solve(p);
    REQUIRE(rs.descriptors.size() == 1);
    CHECK(rs.descriptors[0].kind() == RootDescriptor::Kind::Sphere);
    CHECK(zero_locus_dimension(rs) == 6);
    UnivarPoly lin = upoly(O, {-AlgebraElement::unit(O, 5), AlgebraElement::one(O)});
    CHECK(zero_locus_dimension(solve(lin)) == 0);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_WITH_AS(solve(UnivarPoly(H)), doctest::Contains("ZeroPolynomial"), Error);
    CHECK_THROWS_WITH_AS(solve(upoly(H, {AlgebraElement::one(H)})),
                         doctest::Contains("ConstantPolynomial"), Error);
}

TEST_CASE("repeated factors still produce the root") {
    AlgebraElement one = AlgebraElement::one(H);
    UnivarPoly lin = upoly(H, {-one, one}); // q - 1
    RootSet rs = solve(conv_mul(lin, lin));
    REQUIRE(rs.descriptors.size() == 1);
    CHECK(rs.descriptors[0].point() == one);
}

TEST_CASE("left factor roots survive convolution") {
    for (int t = 0; t < 12; ++t) {
        AlgebraElement root = random_int_elem(H, 3);
        UnivarPoly p = upoly(H, {-root, AlgebraElement::one(H)});
        UnivarPoly r = random_upoly(H, 2);
        RootSet rs = solve(conv_mul(p, r));
        bool found = false;
        for (const auto& d : rs.descriptors) {
            if (d.kind() == RootDescriptor::Kind::Isolated && d.point() == root) found = true;
            if (d.kind() == RootDescriptor::Kind::Sphere && root.trace() == d.x() &&
                root.norm() == d.x() * d.x() + d.imag_norm_sq())
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("soundness: every reported root verifies exactly") {
    for (int t = 0; t < 15; ++t) {
        UnivarPoly p = random_upoly(H, 3);
        RootSet rs = solve(p);
        CHECK(!rs.descriptors.empty());
        for (const auto& d : rs.descriptors) {
            if (d.kind() == RootDescriptor::Kind::Isolated) {
                CHECK(p.eval(d.point()).is_zero());
            } else {
                auto [b, a] = reduce_mod_sphere(p, d.x(), d.y());
                CHECK(b.is_zero());
                CHECK(a.is_zero());
            }
        }
    }
}

TEST_CASE("structure matches the numeric companion oracle") {
    int done = 0;
    while (done < 25) {
        UnivarPoly p = random_upoly(H, 4);
        RootSet rs = solve(p);
        CHECK(matches_oracle(rs));
        ++done;
    }
}

TEST_CASE("octonion random roots verify") {
    for (int t = 0; t < 8; ++t) {
        UnivarPoly p = random_upoly(O, 3);
        RootSet rs = solve(p);
        CHECK(!rs.descriptors.empty());
        for (const auto& d : rs.descriptors)
            if (d.kind() == RootDescriptor::Kind::Isolated) CHECK(p.eval(d.point()).is_zero());
        CHECK(matches_oracle(rs));
    }
}

TEST_CASE("json report shape") {
    UnivarPoly p = upoly(H, {AlgebraElement::one(H), AlgebraElement(H), AlgebraElement::one(H)});
    std::string j = root_report_json(solve(p), "q^2 + 1");
    CHECK(j.find("\"type\": \"sphere\"") != std::string::npos);
    CHECK(j.find("\"dimension\": 2") != std::string::npos);
    CHECK(j.find("\"input\": \"q^2 + 1\"") != std::string::npos);
}

TEST_SUITE_END();
