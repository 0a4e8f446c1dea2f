#include "hyperalg/rational.hpp"

#include "hyperalg/error.hpp"

#include <ostream>

namespace hyperalg {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) fail("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail("ParseError", "bad rational literal '" + text + "'");
    }
}

Rational Rational::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail("DivisionByZero", "rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    r.canonicalize();
    return Rational(r);
}

Rational Rational::simplest_in(const Rational& lo, const Rational& hi) {
    require_internal(lo <= hi, "simplest_in: empty interval");
    Rational zero;
    if (lo <= zero && zero <= hi) return zero;
    if (hi < zero) return -simplest_in(-hi, -lo);

    // 0 < lo <= hi. Walk the continued fraction of the interval.
    std::vector<Integer> terms;
    Rational a = lo, b = hi;
    for (;;) {
        Integer fl = a.floor();
        if (Rational(Integer(fl + 1)) <= b || a == Rational(fl)) {
            // An integer lies in [a, b]; ceil(a) is the simplest choice here.
            terms.push_back(a.ceil());
            break;
        }
        terms.push_back(fl);
        // Recurse on [1/(b - fl), 1/(a - fl)].
        Rational na = (b - Rational(fl)).inv();
        Rational nb = (a - Rational(fl)).inv();
        a = na;
        b = nb;
    }
    Rational acc(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        acc = Rational(*it) + acc.inv();
    return acc;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer isqrt(const Integer& n) {
    require_internal(sgn(n) >= 0, "isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace hyperalg
