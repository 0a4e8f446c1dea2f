#pragma once

#include "hyperalg/algebra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperalg {

// Exponent vector (alpha_1, ..., alpha_n) of an ordered monomial
// q_1^a1 * q_2^a2 * ... * q_n^an.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e_.size()); }
    uint32_t exp(int i) const { return e_[i]; }
    uint32_t total_degree() const;
    Monomial with_exp(int i, uint32_t v) const;
    bool is_constant() const { return total_degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    // Graded-lexicographic order: lower total degree first, then lexicographic
    // with variable 1 most significant.
    struct GrlexLess {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };

private:
    std::vector<uint32_t> e_;
};

// Ordered polynomial with right-side coefficients:
//   sum_alpha q_1^a1 * q_2^a2 * ... * q_n^an * c_alpha.
// Monomial evaluation associates right-to-left (the innermost product is
// q_n^an * c_alpha), which keeps the coefficient adjacent to the last
// variable and matches the one-variable convention q^h * a_h.
class OrderedPoly {
public:
    using TermMap = std::map<Monomial, AlgebraElement, Monomial::GrlexLess>;

    OrderedPoly(int nvars, const AlgebraSignature& sig) : nvars_(nvars), sig_(&sig) {}

    static OrderedPoly constant(int nvars, const AlgebraElement& c);
    static OrderedPoly variable(int nvars, int index, const AlgebraSignature& sig);

    int nvars() const { return nvars_; }
    const AlgebraSignature& sig() const { return *sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t total_degree() const;

    // Accumulates; zero coefficients are dropped.
    void add_term(const Monomial& m, const AlgebraElement& coeff);

    OrderedPoly operator-() const;
    friend OrderedPoly operator+(const OrderedPoly& a, const OrderedPoly& b);
    friend OrderedPoly operator-(const OrderedPoly& a, const OrderedPoly& b);
    friend bool operator==(const OrderedPoly& a, const OrderedPoly& b);

    // Coefficient-wise central scaling (valid because central scalars commute
    // and associate with everything).
    OrderedPoly scaled_central(const Scalar& s) const;

    // Reinterprets the polynomial over more variables (appended at the end).
    OrderedPoly widened(int new_nvars) const;

    // Exact evaluation; errors "ArityMismatch".
    AlgebraElement eval(const std::vector<AlgebraElement>& point) const;

    // Canonical printing in graded-lex order; variables named q1..qn
    // (plain "q" when nvars == 1) unless names are given.
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    const AlgebraSignature* sig_;
    TermMap terms_;
};

// One-variable ordered polynomial as a dense coefficient list
// a_0 + q a_1 + ... + q^d a_d.
class UnivarPoly {
public:
    explicit UnivarPoly(const AlgebraSignature& sig) : sig_(&sig) {}
    UnivarPoly(const AlgebraSignature& sig, std::vector<AlgebraElement> coeffs);

    static UnivarPoly from_ordered(const OrderedPoly& p); // requires nvars == 1
    OrderedPoly to_ordered() const;

    const AlgebraSignature& sig() const { return *sig_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    AlgebraElement coeff(int i) const;
    const std::vector<AlgebraElement>& coeffs() const { return c_; }

    UnivarPoly operator-() const;
    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b);
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

    // Evaluation sum_h q^h * a_h (powers first; unambiguous by alternativity).
    AlgebraElement eval(const AlgebraElement& q) const;

    UnivarPoly conj_coeffs() const; // requires an involution

    std::string str() const { return to_ordered().str(); }

private:
    void trim();
    const AlgebraSignature* sig_;
    std::vector<AlgebraElement> c_;
};

// Convolution (star) product: the variable is treated as central,
// c_k = sum_{i+j=k} a_i * b_j. This is the ring product compatible with
// right-side coefficients; it is NOT pointwise evaluation at non-central
// points.
UnivarPoly conv_mul(const UnivarPoly& p, const UnivarPoly& q);

// Central polynomial with Scalar coefficients.
class ScalarPoly {
public:
    ScalarPoly() = default;
    explicit ScalarPoly(std::vector<Scalar> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar eval(const Scalar& x) const;

    bool is_rational() const;
    // Requires rational coefficients; primitive integer multiple.
    QPoly to_qpoly() const;

private:
    std::vector<Scalar> c_;
};

// Companion (normal) polynomial p * conj(p); every coefficient is central
// (asserted). Errors "ZeroPolynomial" on the zero polynomial.
ScalarPoly companion(const UnivarPoly& p);

// Remainder data of p modulo the central modulus q^2 - 2x q + (x^2 + y^2):
// returns (b, a) with p(q) = q*b + a for every q with real part x and
// norm x^2 + y^2. Requires y >= 0.
std::pair<AlgebraElement, AlgebraElement> reduce_mod_sphere(const UnivarPoly& p, const Scalar& x,
                                                            const Scalar& y);

} // namespace hyperalg
