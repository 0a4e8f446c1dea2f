#pragma once

#include "hyperalg/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hyperalg {

// Dense univariate polynomial over Q. coeffs()[i] is the x^i coefficient;
// the zero polynomial has an empty coefficient list (degree -1).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<long> ints);

    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& lc() const; // leading coefficient; requires nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly scaled(const Rational& s) const;
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly derivative() const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }

    // Quotient and remainder with b != 0 (coefficients in Q).
    std::pair<QPoly, QPoly> divmod(const QPoly& b) const;
    QPoly mod(const QPoly& b) const { return divmod(b).second; }

    // Argument transforms.
    QPoly shift(const Rational& r) const;      // p(x + r)
    QPoly negate_arg() const;                  // p(-x)
    QPoly scale_roots(const Rational& r) const;// roots multiplied by r (r != 0)
    QPoly reverse() const;                     // x^deg * p(1/x)
    QPoly compose_square() const;              // p(x^2)

    // Positive-scalar multiple with coprime integer coefficients (keeps signs).
    QPoly scaled_primitive() const;
    // (primitive part, positive content): *this = content * primitive.
    std::pair<QPoly, Rational> primitive_decompose() const;
    // scaled_primitive with the leading coefficient made positive.
    QPoly primitive_positive() const;
    bool has_integer_coeffs() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

QPoly gcd(QPoly a, QPoly b);              // primitive, positive lc (zero if both zero)
QPoly square_free_part(const QPoly& p);   // primitive, positive lc
Rational resultant(QPoly a, QPoly b);

// All real roots of p lie in (-bound, bound).
Rational cauchy_root_bound(const QPoly& p);

// Sturm chain of a squarefree polynomial; counts real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const QPoly& squarefree);
    int variations_at(const Rational& x) const;
    // Number of roots in the half-open interval (a, b], a <= b.
    int count_roots(const Rational& a, const Rational& b) const;
    const QPoly& polynomial() const { return seq_.front(); }

private:
    std::vector<QPoly> seq_;
};

// Unique polynomial of degree < xs.size() through the sample points.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace hyperalg
