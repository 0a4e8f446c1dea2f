#include "hyperalg/scalar.hpp"

#include "hyperalg/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hyperalg {
namespace {

constexpr int kMaxRefine = 20000; // refinement-loop safety guard

// One bisection step on an interval with a sign change and a single simple
// root strictly inside. Midpoints never hit a root in these contexts: the
// interval isolates exactly one root of a squarefree polynomial and that
// root is irrational.
void bisect_step(const QPoly& p, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / Rational(2);
    int sm = p.sign_at(mid);
    require_internal(sm != 0, "bisect_step: midpoint hit a root");
    if (p.sign_at(lo) * sm < 0)
        hi = mid;
    else
        lo = mid;
}

// Removes x^k factors. Only used when the isolated root is known nonzero,
// in which case 0 cannot lie in the isolating interval.
QPoly strip_zero_root(QPoly p) {
    while (!p.is_zero() && p.degree() >= 1 && p.coeff(0).is_zero()) {
        std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = QPoly(std::move(c));
    }
    return p;
}

Integer two_pow(unsigned k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Rational L with L <= sqrt(r) (r >= 0).
Rational sqrt_lower(const Rational& r) {
    return Rational(isqrt(r.num() * r.den()), r.den());
}

// Rational H with H > sqrt(r).
Rational sqrt_upper(const Rational& r) {
    return Rational(isqrt(r.num() * r.den()) + 1, r.den());
}

// Interpolated resultant R(x) = Res_y(A(y), C_x(y)) where C_x = specialize(x).
// The y-degree of C_x must not depend on x (callers guarantee this).
template <typename Specialize>
QPoly resultant_curve(const QPoly& A, int target_deg, Specialize&& specialize) {
    std::vector<Rational> xs, ys;
    xs.reserve(target_deg + 1);
    ys.reserve(target_deg + 1);
    long t = 0;
    while (static_cast<int>(xs.size()) < target_deg + 1) {
        Rational x0(t);
        xs.push_back(x0);
        ys.push_back(resultant(A, specialize(x0)));
        t = t > 0 ? -t : -t + 1; // 0, 1, -1, 2, -2, ...
    }
    return interpolate(xs, ys);
}

Scalar sum_of(const RealAlgebraic& a, const RealAlgebraic& b) {
    const QPoly& A = a.minpoly();
    const QPoly& B = b.minpoly();
    QPoly R = resultant_curve(A, A.degree() * B.degree(), [&](const Rational& x0) {
        // B(x0 - y) as a polynomial in y
        return B.negate_arg().shift(-x0);
    });
    require_internal(!R.is_zero(), "sum resultant vanished");
    R = square_free_part(R);
    SturmChain chain(R);
    Rational alo = a.lo(), ahi = a.hi(), blo = b.lo(), bhi = b.hi();
    for (int iter = 0; iter < kMaxRefine; ++iter) {
        Rational l = alo + blo, h = ahi + bhi;
        if (R.sign_at(l) != 0 && R.sign_at(h) != 0 && chain.count_roots(l, h) == 1)
            return Scalar::make_algebraic(R, l, h, false, true);
        bisect_step(A, alo, ahi);
        bisect_step(B, blo, bhi);
    }
    fail("InternalError", "sum isolation did not converge");
}

Scalar product_of(const RealAlgebraic& a, const RealAlgebraic& b) {
    const QPoly& A = a.minpoly();
    const QPoly& B = b.minpoly();
    const int n = B.degree();
    QPoly R = resultant_curve(A, A.degree() * n, [&](const Rational& x0) {
        // y^n * B(x0 / y) = sum_j b_j x0^j y^(n-j); y-degree n since B(0) != 0
        std::vector<Rational> c(n + 1);
        Rational xp(1);
        for (int j = 0; j <= n; ++j) {
            c[n - j] = B.coeff(j) * xp;
            xp *= x0;
        }
        return QPoly(std::move(c));
    });
    require_internal(!R.is_zero(), "product resultant vanished");
    R = square_free_part(R);
    SturmChain chain(R);
    Rational alo = a.lo(), ahi = a.hi(), blo = b.lo(), bhi = b.hi();
    for (int iter = 0; iter < kMaxRefine; ++iter) {
        Rational p1 = alo * blo, p2 = alo * bhi, p3 = ahi * blo, p4 = ahi * bhi;
        Rational l = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational h = std::max(std::max(p1, p2), std::max(p3, p4));
        if (R.sign_at(l) != 0 && R.sign_at(h) != 0 && chain.count_roots(l, h) == 1)
            return Scalar::make_algebraic(R, l, h, false, true);
        bisect_step(A, alo, ahi);
        bisect_step(B, blo, bhi);
    }
    fail("InternalError", "product isolation did not converge");
}

Scalar shift_by(const RealAlgebraic& a, const Rational& r) {
    if (r.is_zero()) return Scalar(a);
    QPoly s = a.minpoly().shift(-r).primitive_positive(); // roots translated by +r
    return Scalar::make_algebraic(s, a.lo() + r, a.hi() + r, true, true);
}

Scalar scale_by(const RealAlgebraic& a, const Rational& r) {
    require_internal(!r.is_zero(), "scale_by zero");
    QPoly s = a.minpoly().scale_roots(r).primitive_positive();
    Rational l = a.lo() * r, h = a.hi() * r;
    if (r.sign() < 0) std::swap(l, h);
    return Scalar::make_algebraic(s, l, h, true, true);
}

Scalar invert(const RealAlgebraic& a) {
    const QPoly& A = a.minpoly();
    Rational lo = a.lo(), hi = a.hi();
    // Shrink until the interval is strictly on one side of zero.
    int iter = 0;
    while (lo.sign() * hi.sign() <= 0) {
        bisect_step(A, lo, hi);
        require_internal(++iter < kMaxRefine, "sign refinement did not converge");
    }
    QPoly rev = A.reverse().primitive_positive(); // roots are the reciprocals
    return Scalar::make_algebraic(rev, hi.inv(), lo.inv(), true, true);
}

bool equal_algebraic(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.minpoly() == b.minpoly() && a.lo() == b.lo() && a.hi() == b.hi()) return true;
    QPoly g = gcd(a.minpoly(), b.minpoly());
    if (g.degree() < 1) return false;
    // g divides both minpolys, so interval endpoints are never roots of g,
    // and each isolating interval holds at most one root of g (namely the
    // value itself, when the value is a root of g).
    SturmChain gs(g);
    if (gs.count_roots(a.lo(), a.hi()) != 1) return false;
    if (gs.count_roots(b.lo(), b.hi()) != 1) return false;
    Rational alo = a.lo(), ahi = a.hi(), blo = b.lo(), bhi = b.hi();
    for (int iter = 0; iter < kMaxRefine; ++iter) {
        if (ahi <= blo || bhi <= alo) return false;
        Rational hl = std::min(alo, blo), hh = std::max(ahi, bhi);
        if (gs.count_roots(hl, hh) == 1) return true;
        bisect_step(a.minpoly(), alo, ahi);
        bisect_step(b.minpoly(), blo, bhi);
    }
    fail("InternalError", "equality refinement did not converge");
}

Cmp compare_mixed(const Rational& r, const RealAlgebraic& x) {
    Rational lo = x.lo(), hi = x.hi();
    for (int iter = 0; iter < kMaxRefine; ++iter) {
        if (r <= lo) return Cmp::LT;
        if (r >= hi) return Cmp::GT;
        bisect_step(x.minpoly(), lo, hi);
    }
    fail("InternalError", "mixed comparison did not converge");
}

} // namespace

Scalar Scalar::make_algebraic(const QPoly& p_in, const Rational& lo_in, const Rational& hi_in,
                              bool known_irrational, bool known_squarefree) {
    // same root set, primitive, positive lc
    QPoly p = known_squarefree ? p_in.primitive_positive() : square_free_part(p_in);
    require_internal(p.degree() >= 1, "make_algebraic: constant polynomial");
    Rational lo = lo_in, hi = hi_in;
    require_internal(p.sign_at(lo) != 0 && p.sign_at(hi) != 0, "make_algebraic: endpoint is a root");
    require_internal(p.sign_at(lo) * p.sign_at(hi) < 0, "make_algebraic: no sign change");

    if (!known_irrational) {
        // Any rational root u/v (lowest terms) of an integer polynomial has
        // v | lc; two rationals with denominators <= B differ by >= 1/B^2.
        const Integer B = p.lc().num();
        const Rational gap(Integer(1), B * B + 1);
        for (;;) {
            Rational c = Rational::simplest_in(lo, hi);
            if (p.sign_at(c) == 0) return Scalar(c);
            if (c.den() > B) break;    // every rational here is too complex to be a root
            if (hi - lo < gap) break;  // no room left for a rational root
            for (int i = 0; i < 16; ++i) {
                Rational mid = (lo + hi) / Rational(2);
                int sm = p.sign_at(mid);
                if (sm == 0) return Scalar(mid); // the unique root in the interval
                if (p.sign_at(lo) * sm < 0)
                    hi = mid;
                else
                    lo = mid;
            }
        }
    }

    QPoly q = strip_zero_root(p); // value is irrational, hence nonzero
    require_internal(q.degree() >= 2, "make_algebraic: linear minpoly escaped rational detection");
    return Scalar(RealAlgebraic(std::move(q), std::move(lo), std::move(hi)));
}

int Scalar::sign() const {
    if (is_rational()) return rational().sign();
    const auto& a = algebraic();
    const Rational zero;
    if (a.lo() >= zero) return 1;
    if (a.hi() <= zero) return -1;
    // Constant term is nonzero, so 0 is not a root; one evaluation decides.
    int s0 = a.minpoly().sign_at(zero);
    int slo = a.minpoly().sign_at(a.lo());
    return slo * s0 < 0 ? -1 : 1;
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rational());
    return scale_by(algebraic(), Rational(-1));
}

Scalar Scalar::inv() const {
    if (is_rational()) {
        if (rational().is_zero()) fail("DivisionByZero", "inverse of zero");
        return Scalar(rational().inv());
    }
    return invert(algebraic());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
    if (a.is_rational()) return shift_by(b.algebraic(), a.rational());
    if (b.is_rational()) return shift_by(a.algebraic(), b.rational());
    return sum_of(a.algebraic(), b.algebraic());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
    if (a.is_rational()) {
        if (a.rational().is_zero()) return Scalar();
        return scale_by(b.algebraic(), a.rational());
    }
    if (b.is_rational()) {
        if (b.rational().is_zero()) return Scalar();
        return scale_by(a.algebraic(), b.rational());
    }
    return product_of(a.algebraic(), b.algebraic());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) fail("DivisionByZero", "scalar division by zero");
    if (a.is_zero()) return Scalar();
    return a * b.inv();
}

Scalar Scalar::pow(unsigned e) const {
    if (is_rational()) return Scalar(rational().pow(e));
    Scalar acc(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar Scalar::sqrt() const {
    int s = sign();
    if (s < 0) fail("NegativeSqrt", "square root of a negative value");
    if (s == 0) return Scalar();
    if (is_rational()) {
        const Rational& r = rational();
        QPoly p(std::vector<Rational>{-Rational(r.num()), Rational(), Rational(r.den())});
        return make_algebraic(p, Rational(), r + Rational(1));
    }
    const RealAlgebraic& a = algebraic();
    QPoly C = a.minpoly().compose_square(); // roots: +-sqrt of the positive roots
    SturmChain chain(C);
    Rational lo = a.lo(), hi = a.hi();
    int iter = 0;
    while (lo.sign() <= 0) {
        bisect_step(a.minpoly(), lo, hi);
        require_internal(++iter < kMaxRefine, "sqrt: positivity refinement stalled");
    }
    for (iter = 0; iter < kMaxRefine; ++iter) {
        Rational L = sqrt_lower(lo), H = sqrt_upper(hi);
        if (C.sign_at(L) != 0 && C.sign_at(H) != 0 && chain.count_roots(L, H) == 1)
            return make_algebraic(C, L, H, true, true);
        bisect_step(a.minpoly(), lo, hi);
    }
    fail("InternalError", "sqrt isolation did not converge");
}

Cmp Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
        if (a.rational() == b.rational()) return Cmp::EQ;
        return a.rational() < b.rational() ? Cmp::LT : Cmp::GT;
    }
    if (a.is_rational()) return compare_mixed(a.rational(), b.algebraic());
    if (b.is_rational()) {
        Cmp c = compare_mixed(b.rational(), a.algebraic());
        return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ);
    }
    if (equal_algebraic(a.algebraic(), b.algebraic())) return Cmp::EQ;
    Rational alo = a.algebraic().lo(), ahi = a.algebraic().hi();
    Rational blo = b.algebraic().lo(), bhi = b.algebraic().hi();
    for (int iter = 0; iter < kMaxRefine; ++iter) {
        if (ahi <= blo) return Cmp::LT;
        if (bhi <= alo) return Cmp::GT;
        bisect_step(a.algebraic().minpoly(), alo, ahi);
        bisect_step(b.algebraic().minpoly(), blo, bhi);
    }
    fail("InternalError", "comparison refinement did not converge");
}

double Scalar::to_double() const {
    if (is_rational()) return rational().to_double();
    const auto& a = algebraic();
    Rational lo = a.lo(), hi = a.hi();
    Rational scale = std::max(Rational(1), std::max(lo.abs(), hi.abs()));
    Rational limit = scale / Rational(two_pow(62));
    for (int iter = 0; iter < 400 && hi - lo > limit; ++iter) bisect_step(a.minpoly(), lo, hi);
    return ((lo + hi) / Rational(2)).to_double();
}

std::string Scalar::str() const {
    if (is_rational()) return rational().str();
    const auto& a = algebraic();
    std::ostringstream os;
    os << "alg([";
    for (int i = 0; i <= a.minpoly().degree(); ++i) {
        if (i) os << ", ";
        os << a.minpoly().coeff(i).str();
    }
    os << "], " << a.lo().str() << ", " << a.hi().str() << ")";
    return os.str();
}

Scalar Scalar::parse(const std::string& text) {
    auto fail_parse = [&] { fail("ParseError", "bad scalar literal '" + text + "'"); };
    if (text.rfind("alg(", 0) != 0) return Scalar(Rational::parse(text));
    if (text.back() != ')') fail_parse();
    std::string body = text.substr(4, text.size() - 5);
    auto lb = body.find('['), rb = body.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail_parse();
    std::vector<Rational> coeffs;
    std::string list = body.substr(lb + 1, rb - lb - 1);
    std::istringstream ls(list);
    std::string item;
    while (std::getline(ls, item, ',')) {
        item.erase(remove_if(item.begin(), item.end(), isspace), item.end());
        if (!item.empty()) coeffs.push_back(Rational::parse(item));
    }
    std::string rest = body.substr(rb + 1);
    std::vector<std::string> parts;
    std::istringstream rs(rest);
    while (std::getline(rs, item, ',')) {
        item.erase(remove_if(item.begin(), item.end(), isspace), item.end());
        if (!item.empty()) parts.push_back(item);
    }
    if (parts.size() != 2 || coeffs.empty()) fail_parse();
    QPoly p{std::vector<Rational>(coeffs)};
    Rational lo = Rational::parse(parts[0]), hi = Rational::parse(parts[1]);
    QPoly sf = square_free_part(p);
    if (sf.degree() < 1 || lo >= hi || sf.sign_at(lo) == 0 || sf.sign_at(hi) == 0)
        fail("ParseError", "alg(...) interval does not isolate a root");
    SturmChain chain(sf);
    if (chain.count_roots(lo, hi) != 1)
        fail("ParseError", "alg(...) interval does not isolate exactly one root");
    return make_algebraic(p, lo, hi);
}

std::vector<Scalar> isolate_real_roots(const QPoly& p_in) {
    if (p_in.is_zero()) fail("ZeroPolynomial", "cannot isolate roots of the zero polynomial");
    QPoly work = square_free_part(p_in);
    std::vector<Rational> exact_hits; // bisection midpoints that landed on roots
    std::vector<Scalar> roots;
    for (;;) {
        if (work.degree() < 1) break;
        SturmChain chain(work);
        Rational bound = cauchy_root_bound(work);
        std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
        std::vector<Scalar> found;
        std::optional<Rational> deflate_at;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int n = chain.count_roots(a, b);
            if (n == 0) continue;
            if (n == 1) {
                found.push_back(Scalar::make_algebraic(work, a, b, false, true));
                continue;
            }
            Rational mid = (a + b) / Rational(2);
            if (work.sign_at(mid) == 0) {
                deflate_at = mid;
                break;
            }
            stack.push_back({a, mid});
            stack.push_back({mid, b});
        }
        if (!deflate_at) {
            roots = std::move(found);
            break;
        }
        exact_hits.push_back(*deflate_at);
        QPoly lin(std::vector<Rational>{-*deflate_at, Rational(1)});
        work = work.divmod(lin).first.primitive_positive();
    }
    for (const auto& r : exact_hits) roots.emplace_back(r);
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& x, const Scalar& y) { return Scalar::compare(x, y) == Cmp::LT; });
    return roots;
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    fail("InternalError", "unknown scalar op");
}

} // namespace hyperalg
