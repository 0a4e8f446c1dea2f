#include "hyperalg/qpoly.hpp"

#include "hyperalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace hyperalg {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> ints) {
    c_.reserve(ints.size());
    for (long v : ints) c_.emplace_back(v);
    trim();
}

QPoly QPoly::constant(const Rational& c) {
    QPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

QPoly QPoly::monomial(const Rational& c, int degree) {
    QPoly p;
    if (!c.is_zero()) {
        p.c_.assign(degree + 1, Rational());
        p.c_[degree] = c;
    }
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational();
    return c_[i];
}

const Rational& QPoly::lc() const {
    require_internal(!c_.empty(), "lc of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return QPoly();
    QPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(c));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& b) const {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    QPoly r(*this), q;
    int db = b.degree();
    if (degree() >= db) q.c_.assign(degree() - db + 1, Rational());
    while (!r.is_zero() && r.degree() >= db) {
        Rational f = r.lc() / b.lc();
        int k = r.degree() - db;
        q.c_[k] = f;
        for (int i = 0; i <= db; ++i) r.c_[k + i] -= f * b.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly QPoly::shift(const Rational& r) const {
    // Horner: p(x + r) built from the top coefficient down.
    QPoly acc;
    QPoly lin({std::vector<Rational>{r, Rational(1)}});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly::constant(*it);
    return acc;
}

QPoly QPoly::negate_arg() const {
    QPoly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

QPoly QPoly::scale_roots(const Rational& r) const {
    require_internal(!r.is_zero(), "scale_roots by zero");
    // If p(a) = 0 then q(r*a) = 0 for q_i = p_i * r^(deg - i).
    QPoly q(*this);
    Rational f(1);
    for (int i = q.degree(); i >= 0; --i) {
        q.c_[i] *= f;
        f *= r;
    }
    q.trim();
    return q;
}

QPoly QPoly::reverse() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return QPoly(std::move(c));
}

QPoly QPoly::compose_square() const {
    if (is_zero()) return QPoly();
    std::vector<Rational> c(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::scaled_primitive() const { return primitive_decompose().first; }

std::pair<QPoly, Rational> QPoly::primitive_decompose() const {
    if (is_zero()) return {QPoly(), Rational(1)};
    Integer den(1);
    for (const auto& c : c_) den = lcm(den, c.den());
    Integer num(0);
    for (const auto& c : c_) num = gcd(num, c.num() * (den / c.den()));
    Rational content(num, den); // positive: den > 0, num = gcd > 0
    return {scaled(content.inv()), content};
}

QPoly QPoly::primitive_positive() const {
    QPoly p = scaled_primitive();
    if (!p.is_zero() && p.lc().sign() < 0) p = -p;
    return p;
}

bool QPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.abs();
        if (i == 0 || !a.is_one()) os << a.str();
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    a = a.scaled_primitive();
    b = b.scaled_primitive();
    while (!b.is_zero()) {
        QPoly r = a.mod(b).scaled_primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_positive();
}

QPoly square_free_part(const QPoly& p) {
    if (p.is_zero()) return QPoly();
    if (p.degree() == 0) return QPoly::constant(Rational(1));
    QPoly g = gcd(p, p.derivative());
    QPoly q = p.divmod(g).first;
    return q.primitive_positive();
}

Rational resultant(QPoly a, QPoly b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    // Primitive-scaled remainder chain; contents are tracked so intermediate
    // coefficients stay subresultant-sized instead of exploding.
    Rational acc(1);
    {
        auto [pa, ca] = a.primitive_decompose();
        auto [pb, cb] = b.primitive_decompose();
        acc = ca.pow(static_cast<unsigned>(b.degree())) * cb.pow(static_cast<unsigned>(a.degree()));
        a = std::move(pa);
        b = std::move(pb);
    }
    for (;;) {
        if (b.degree() == 0) return acc * b.lc().pow(static_cast<unsigned>(a.degree()));
        QPoly r = a.mod(b);
        if (r.is_zero()) return Rational();
        auto [pr, cr] = r.primitive_decompose();
        unsigned drop = static_cast<unsigned>(a.degree() - pr.degree());
        Rational sign = (a.degree() * b.degree()) % 2 == 0 ? Rational(1) : Rational(-1);
        acc = acc * sign * b.lc().pow(drop) * cr.pow(static_cast<unsigned>(b.degree()));
        a = std::move(b);
        b = std::move(pr);
    }
}

Rational cauchy_root_bound(const QPoly& p) {
    require_internal(!p.is_zero(), "root bound of zero polynomial");
    Rational m;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = (p.coeff(i) / p.lc()).abs();
        if (q > m) m = q;
    }
    return m + Rational(2);
}

SturmChain::SturmChain(const QPoly& squarefree) {
    QPoly s0 = squarefree.scaled_primitive();
    require_internal(!s0.is_zero(), "Sturm chain of zero polynomial");
    seq_.push_back(s0);
    if (s0.degree() == 0) return;
    QPoly s1 = s0.derivative().scaled_primitive();
    seq_.push_back(s1);
    for (;;) {
        const QPoly& p2 = seq_[seq_.size() - 2];
        const QPoly& p1 = seq_[seq_.size() - 1];
        if (p1.is_zero()) {
            seq_.pop_back();
            break;
        }
        QPoly r = (-(p2.mod(p1))).scaled_primitive();
        if (r.is_zero()) break;
        seq_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0, last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    require_internal(a <= b, "count_roots: empty interval");
    return variations_at(a) - variations_at(b);
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    require_internal(xs.size() == ys.size() && !xs.empty(), "interpolate: bad samples");
    // Newton form with divided differences.
    size_t n = xs.size();
    std::vector<Rational> dd(ys);
    std::vector<Rational> coef;
    coef.reserve(n);
    coef.push_back(dd[0]);
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / (xs[i + level] - xs[i]);
        coef.push_back(dd[0]);
    }
    QPoly acc;
    for (size_t i = n; i-- > 0;) {
        QPoly lin({std::vector<Rational>{-xs[i], Rational(1)}});
        acc = acc * lin + QPoly::constant(coef[i]);
    }
    return acc;
}

} // namespace hyperalg
