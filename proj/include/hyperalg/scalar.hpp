#pragma once

#include "hyperalg/qpoly.hpp"
#include "hyperalg/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hyperalg {

// The unique root of `minpoly` inside the open interval (lo, hi).
//
// Representation invariants:
//   - minpoly is a squarefree primitive integer polynomial with positive
//     leading coefficient and nonzero constant term;
//   - minpoly(lo) != 0, minpoly(hi) != 0, and exactly one real root lies in
//     (lo, hi);
//   - that root is irrational (rational values are normalized to Rational
//     before a RealAlgebraic is ever built).
// minpoly need not be irreducible; the interval selects the root.
class RealAlgebraic {
public:
    RealAlgebraic(QPoly minpoly, Rational lo, Rational hi)
        : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    const QPoly& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

private:
    QPoly minpoly_;
    Rational lo_, hi_;
};

enum class Cmp { LT, EQ, GT };

// Element of the real closure of Q: a rational or a real algebraic number,
// in canonical form (rational values are never stored as RealAlgebraic).
// Values are immutable; all operations are pure.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(long n) : v_(Rational(n)) {} // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : v_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    explicit Scalar(RealAlgebraic a) : v_(std::move(a)) {}

    // Normalizing constructor: `p` must have exactly one root in the open
    // interval (lo, hi) and p(lo) != 0, p(hi) != 0. Detects rational roots
    // and canonicalizes. `known_irrational` skips the rational-root search;
    // `known_squarefree` skips the squarefree reduction.
    static Scalar make_algebraic(const QPoly& p, const Rational& lo, const Rational& hi,
                                 bool known_irrational = false, bool known_squarefree = false);

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const RealAlgebraic& algebraic() const { return std::get<RealAlgebraic>(v_); }

    bool is_zero() const { return is_rational() && rational().is_zero(); }
    bool is_one() const { return is_rational() && rational().is_one(); }
    int sign() const;

    Scalar operator-() const;
    Scalar inv() const; // errors "DivisionByZero"
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar pow(unsigned e) const;
    // Exact square root; errors "NegativeSqrt" if *this < 0 (RCF axiom R3
    // gives existence for nonnegative values).
    Scalar sqrt() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == Cmp::EQ; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != Cmp::EQ; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) == Cmp::LT; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) == Cmp::GT; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) != Cmp::GT; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) != Cmp::LT; }

    static Cmp compare(const Scalar& a, const Scalar& b);

    double to_double() const;
    // "p/q" for rationals, "alg([c0, c1, ...], lo, hi)" for algebraic values.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    std::variant<Rational, RealAlgebraic> v_;
};

// All distinct real roots of p in increasing order; irrational roots come
// back as RealAlgebraic with pairwise disjoint isolating intervals.
// Errors "ZeroPolynomial" if p == 0.
std::vector<Scalar> isolate_real_roots(const QPoly& p);

enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b);
inline Cmp scalar_compare(const Scalar& a, const Scalar& b) { return Scalar::compare(a, b); }

} // namespace hyperalg
