#include "hyperalg/roots.hpp"

#include "hyperalg/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace hyperalg {
namespace {

constexpr int kMaxCertify = 4000;

// ---------------------------------------------------------------------------
// Rational interval arithmetic (exact outward bounds are not needed: all
// endpoints are exact rationals).
// ---------------------------------------------------------------------------

struct RIntv {
    Rational lo, hi;

    static RIntv point(const Rational& r) { return {r, r}; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
};

RIntv iv_add(const RIntv& a, const RIntv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RIntv iv_mul(const RIntv& a, const RIntv& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RIntv iv_scale(const RIntv& a, const Rational& f) {
    if (f.sign() >= 0) return {a.lo * f, a.hi * f};
    return {a.hi * f, a.lo * f};
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over Q in (x, s); c[i][j] is the x^i s^j coefficient.
// ---------------------------------------------------------------------------

struct BiPoly {
    std::vector<std::vector<Rational>> c;

    int xdeg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            for (const auto& v : c[i])
                if (!v.is_zero()) return i;
        return -1;
    }
    int sdeg() const {
        int d = -1;
        for (const auto& row : c)
            for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
                if (!row[j].is_zero()) {
                    d = std::max(d, j);
                    break;
                }
        return d;
    }
    bool is_zero() const { return xdeg() < 0; }

    QPoly at_s(const Rational& s0) const {
        std::vector<Rational> out(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            Rational acc, pw(1);
            for (const auto& v : c[i]) {
                acc += v * pw;
                pw *= s0;
            }
            out[i] = acc;
        }
        return QPoly(std::move(out));
    }

    QPoly at_x(const Rational& x0) const {
        std::vector<Rational> out(std::max(0, sdeg()) + 1);
        Rational pw(1);
        for (const auto& row : c) {
            for (size_t j = 0; j < row.size() && j < out.size(); ++j) out[j] += row[j] * pw;
            pw *= x0;
        }
        return QPoly(std::move(out));
    }

    // Coefficients in s of x^j, as polynomials in x reduced later by callers.
    std::vector<QPoly> s_coefficients() const {
        std::vector<QPoly> out(std::max(0, sdeg()) + 1);
        for (size_t j = 0; j < out.size(); ++j) {
            std::vector<Rational> xs(c.size());
            for (size_t i = 0; i < c.size(); ++i) xs[i] = j < c[i].size() ? c[i][j] : Rational();
            out[j] = QPoly(std::move(xs));
        }
        return out;
    }

    RIntv eval_box(const RIntv& X, const RIntv& S) const {
        RIntv acc = RIntv::point(Rational());
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            RIntv row = RIntv::point(Rational());
            for (int j = static_cast<int>(c[i].size()) - 1; j >= 0; --j)
                row = iv_add(iv_mul(row, S), RIntv::point(c[i][j]));
            acc = iv_add(iv_mul(acc, X), row);
        }
        return acc;
    }
};

BiPoly bi_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) {
        if (r.c[i].size() < b.c[i].size()) r.c[i].resize(b.c[i].size());
        for (size_t j = 0; j < b.c[i].size(); ++j) r.c[i][j] += b.c[i][j];
    }
    return r;
}

BiPoly bi_shift_x(const BiPoly& a) {
    BiPoly r;
    r.c.emplace_back();
    for (const auto& row : a.c) r.c.push_back(row);
    return r;
}

BiPoly bi_shift_s(const BiPoly& a) {
    BiPoly r = a;
    for (auto& row : r.c) row.insert(row.begin(), Rational());
    return r;
}

BiPoly bi_scale(const BiPoly& a, const Rational& f) {
    BiPoly r = a;
    for (auto& row : r.c)
        for (auto& v : row) v *= f;
    return r;
}

// c(x + iy) = P(x, s) + i y Q(x, s) with s = y^2.
void complex_decompose(const QPoly& c, BiPoly& P, BiPoly& Q) {
    BiPoly A, B; // (x + iy)^k = A + i y B
    A.c = {{Rational(1)}};
    B.c = {{}};
    P.c = {{c.coeff(0)}};
    Q.c = {{}};
    for (int k = 1; k <= c.degree(); ++k) {
        BiPoly nA = bi_add(bi_shift_x(A), bi_scale(bi_shift_s(B), Rational(-1)));
        BiPoly nB = bi_add(A, bi_shift_x(B));
        A = std::move(nA);
        B = std::move(nB);
        if (!c.coeff(k).is_zero()) {
            P = bi_add(P, bi_scale(A, c.coeff(k)));
            Q = bi_add(Q, bi_scale(B, c.coeff(k)));
        }
    }
}

// Res_x(P, Q) in s by evaluation/interpolation; the leading x-coefficients
// are constant in s for our decompositions, so degrees never drop.
QPoly resultant_eliminating_x(const BiPoly& P, const BiPoly& Q) {
    int target = P.xdeg() * std::max(Q.sdeg(), 0) + Q.xdeg() * std::max(P.sdeg(), 0);
    std::vector<Rational> xs, ys;
    long t = 0;
    while (static_cast<int>(xs.size()) < target + 1) {
        Rational s0(t);
        QPoly a = P.at_s(s0), b = Q.at_s(s0);
        require_internal(a.degree() == P.xdeg() && b.degree() == Q.xdeg(),
                         "resultant sample dropped degree in x");
        xs.push_back(s0);
        ys.push_back(resultant(a, b));
        t = t > 0 ? -t : -t + 1;
    }
    return interpolate(xs, ys);
}

// Res_s(P, Q) in x; samples with s-degree drop are skipped.
QPoly resultant_eliminating_s(const BiPoly& P, const BiPoly& Q) {
    int target = P.xdeg() * std::max(Q.sdeg(), 0) + Q.xdeg() * std::max(P.sdeg(), 0);
    std::vector<Rational> xs, ys;
    long t = 0;
    while (static_cast<int>(xs.size()) < target + 1) {
        Rational x0(t);
        t = t > 0 ? -t : -t + 1;
        QPoly a = P.at_x(x0), b = Q.at_x(x0);
        if (a.degree() != P.sdeg() || b.degree() != Q.sdeg()) continue;
        xs.push_back(x0);
        ys.push_back(resultant(a, b));
    }
    return interpolate(xs, ys);
}

// ---------------------------------------------------------------------------
// Arithmetic in Q[t]/(M) for squarefree M, with dynamic splitting: when a
// zero divisor shows up, M is replaced by its factor containing the tracked
// root.
// ---------------------------------------------------------------------------

QPoly pm_reduce(const QPoly& a, const QPoly& M) { return a.mod(M); }

QPoly pm_mul(const QPoly& a, const QPoly& b, const QPoly& M) { return (a * b).mod(M); }

// h(theta) == 0 for the unique root theta of M in (lo, hi)?
bool vanishes_at_root(const QPoly& h, const QPoly& M, const Rational& lo, const Rational& hi) {
    if (h.is_zero()) return true;
    QPoly g = gcd(M, h);
    if (g.degree() < 1) return false;
    SturmChain chain(g);
    return chain.count_roots(lo, hi) == 1;
}

// Signals that the modulus split; materialization restarts on the factor.
struct SplitModulus {
    QPoly factor;
};

// Inverse of h mod M; throws SplitModulus when h is a zero divisor, with the
// factor of M containing the root isolated in (lo, hi).
QPoly pm_inv(const QPoly& h, const QPoly& M, const Rational& lo, const Rational& hi) {
    require_internal(!h.is_zero(), "pm_inv of zero");
    // extended Euclid over Q[t]; remainders are rescaled to primitive form
    // (the cofactors absorb the contents) to keep coefficients small
    QPoly r0 = M, r1 = pm_reduce(h, M);
    QPoly s0, s1 = QPoly::constant(Rational(1)); // coefficients of h
    while (!r1.is_zero() && r1.degree() >= 1) {
        auto [q, r2] = r0.divmod(r1);
        QPoly s2 = s0 - q * s1;
        auto [pr, cr] = r2.primitive_decompose();
        if (!r2.is_zero()) s2 = s2.scaled(cr.inv());
        r0 = std::move(r1);
        r1 = std::move(pr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) {
        // gcd(h, M) = r0 is a nontrivial factor of M
        QPoly g = r0.primitive_positive();
        SturmChain chain(g);
        QPoly keep = chain.count_roots(lo, hi) == 1 ? g : M.divmod(g).first.primitive_positive();
        throw SplitModulus{keep};
    }
    // r1 is a nonzero constant: s1 * h = r1 (mod M)
    return pm_reduce(s1.scaled(r1.lc().inv()), M);
}

// Quaternion/octonion with coordinates in Q[t]/(M).
struct QuatMod {
    const AlgebraSignature* sig;
    std::vector<QPoly> c;

    static QuatMod zero(const AlgebraSignature& s) {
        return {&s, std::vector<QPoly>(s.dim())};
    }
    static QuatMod from_element(const AlgebraElement& e) {
        QuatMod r = zero(e.sig());
        for (int i = 0; i < e.dim(); ++i) r.c[i] = QPoly::constant(e.coord(i).rational());
        return r;
    }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const QPoly& p) { return p.is_zero(); });
    }
};

QuatMod qm_add(const QuatMod& a, const QuatMod& b) {
    QuatMod r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

QuatMod qm_scale(const QuatMod& a, const QPoly& f, const QPoly& M) {
    QuatMod r = a;
    for (auto& p : r.c) p = pm_mul(p, f, M);
    return r;
}

QuatMod qm_mul(const QuatMod& a, const QuatMod& b, const QPoly& M) {
    QuatMod r = QuatMod::zero(*a.sig);
    int d = static_cast<int>(a.c.size());
    for (int i = 0; i < d; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c[j].is_zero()) continue;
            QPoly ab = pm_mul(a.c[i], b.c[j], M);
            for (const auto& [l, coeff] : a.sig->products(i, j))
                r.c[l] = r.c[l] + ab.scaled(coeff);
        }
    }
    for (auto& p : r.c) p = pm_reduce(p, M);
    return r;
}

QuatMod qm_conj(const QuatMod& a) {
    QuatMod r = a;
    for (size_t i = 1; i < r.c.size(); ++i) r.c[i] = -r.c[i];
    return r;
}

QuatMod qm_neg(const QuatMod& a) {
    QuatMod r = a;
    for (auto& p : r.c) p = -p;
    return r;
}

bool qm_vanishes(const QuatMod& a, const QPoly& M, const Rational& lo, const Rational& hi) {
    return std::all_of(a.c.begin(), a.c.end(),
                       [&](const QPoly& p) { return vanishes_at_root(p, M, lo, hi); });
}

// ---------------------------------------------------------------------------
// Certified conjugate pairs (x, s) of a squarefree rational polynomial:
// the real solutions of P = Q = 0 with s > 0 where
// f(x + iy) = P(x, y^2) + i y Q(x, y^2).
// ---------------------------------------------------------------------------

struct CertPair {
    Scalar x, s;
};

struct PairCandidate {
    size_t xi, si;
    RIntv X, S;
};

bool scalar_is_root_of(const Scalar& v, const QPoly& f) {
    if (f.is_zero()) return true;
    if (v.is_rational()) return f.eval(v.rational()).is_zero();
    const RealAlgebraic& a = v.algebraic();
    return vanishes_at_root(f, a.minpoly(), a.lo(), a.hi());
}

RIntv scalar_interval(const Scalar& v) {
    if (v.is_rational()) return RIntv::point(v.rational());
    return {v.algebraic().lo(), v.algebraic().hi()};
}

void refine_interval(const Scalar& v, RIntv& iv) {
    if (v.is_rational()) return;
    const QPoly& m = v.algebraic().minpoly();
    Rational mid = (iv.lo + iv.hi) / Rational(2);
    int sm = m.sign_at(mid);
    require_internal(sm != 0, "certification midpoint hit a root");
    if (m.sign_at(iv.lo) * sm < 0)
        iv.hi = mid;
    else
        iv.lo = mid;
}

std::vector<CertPair> conjugate_pairs(const QPoly& sf, int n_real_roots) {
    int n_pairs = (sf.degree() - n_real_roots) / 2;
    if (n_pairs <= 0) return {};

    BiPoly P, Q;
    complex_decompose(sf, P, Q);
    require_internal(!Q.is_zero(), "imaginary part vanished for a nonconstant polynomial");

    QPoly rs_poly = resultant_eliminating_x(P, Q);
    QPoly rx_poly = resultant_eliminating_s(P, Q);
    require_internal(!rs_poly.is_zero() && !rx_poly.is_zero(),
                     "real and imaginary parts share a factor");

    std::vector<Scalar> xs = isolate_real_roots(rx_poly);
    std::vector<Scalar> ss;
    for (Scalar& s : isolate_real_roots(rs_poly))
        if (s.sign() > 0) ss.push_back(std::move(s));

    std::vector<CertPair> confirmed;
    std::vector<PairCandidate> undecided;

    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < ss.size(); ++j) {
            const Scalar& x = xs[i];
            const Scalar& s = ss[j];
            if (x.is_rational() && s.is_rational()) {
                if (P.at_s(s.rational()).eval(x.rational()).is_zero() &&
                    Q.at_s(s.rational()).eval(x.rational()).is_zero())
                    confirmed.push_back({x, s});
            } else if (x.is_rational()) {
                if (scalar_is_root_of(s, P.at_x(x.rational())) &&
                    scalar_is_root_of(s, Q.at_x(x.rational())))
                    confirmed.push_back({x, s});
            } else if (s.is_rational()) {
                if (scalar_is_root_of(x, P.at_s(s.rational())) &&
                    scalar_is_root_of(x, Q.at_s(s.rational())))
                    confirmed.push_back({x, s});
            } else {
                undecided.push_back({i, j, scalar_interval(x), scalar_interval(s)});
            }
        }
    }

    // Every true pair is a candidate and is never excluded; exclusion by
    // interval evaluation eventually removes every false combination, so the
    // loop stops exactly when the survivors are the true pairs.
    int iter = 0;
    while (static_cast<int>(confirmed.size() + undecided.size()) > n_pairs) {
        require_internal(++iter < kMaxCertify, "pair certification did not converge");
        for (auto& cand : undecided) {
            refine_interval(xs[cand.xi], cand.X);
            refine_interval(ss[cand.si], cand.S);
        }
        std::vector<PairCandidate> keep;
        for (auto& cand : undecided) {
            if (P.eval_box(cand.X, cand.S).contains_zero() &&
                Q.eval_box(cand.X, cand.S).contains_zero())
                keep.push_back(std::move(cand));
        }
        undecided = std::move(keep);
    }
    require_internal(static_cast<int>(confirmed.size() + undecided.size()) == n_pairs,
                     "pair certification lost a conjugate pair");

    for (const auto& cand : undecided) confirmed.push_back({xs[cand.xi], ss[cand.si]});
    return confirmed;
}

// ---------------------------------------------------------------------------
// Point materialization.
// ---------------------------------------------------------------------------

// Coordinate polynomials of p over Q (coordinates must be rational).
std::vector<QPoly> coordinate_polys(const UnivarPoly& p) {
    int dim = p.sig().dim();
    std::vector<std::vector<Rational>> cs(dim, std::vector<Rational>(p.degree() + 1));
    for (int h = 0; h <= p.degree(); ++h) {
        const AlgebraElement& a = p.coeff(h);
        for (int c = 0; c < dim; ++c) {
            const Scalar& v = a.coord(c);
            if (!v.is_rational())
                fail("NonRationalCoefficients", "solve requires rational coordinate coefficients");
            cs[c][h] = v.rational();
        }
    }
    std::vector<QPoly> out;
    out.reserve(dim);
    for (auto& v : cs) out.emplace_back(std::move(v));
    return out;
}

AlgebraElement materialize_rational(const UnivarPoly& p, const Rational& x0, const Rational& s0) {
    const AlgebraSignature& sig = p.sig();
    Scalar two_x = Scalar(Rational(2) * x0);
    Scalar norm(x0 * x0 + s0);
    std::vector<AlgebraElement> c = p.coeffs();
    for (int k = static_cast<int>(c.size()) - 1; k >= 2; --k) {
        if (c[k].is_zero()) continue;
        AlgebraElement top = c[k];
        c[k - 1] = c[k - 1] + top.scaled(two_x);
        c[k - 2] = c[k - 2] - top.scaled(norm);
        c[k] = AlgebraElement(sig);
    }
    AlgebraElement b = c.size() > 1 ? c[1] : AlgebraElement(sig);
    AlgebraElement a = !c.empty() ? c[0] : AlgebraElement(sig);
    require_internal(!b.is_zero(), "point pair produced a sphere reduction");
    AlgebraElement r = (-a) * b.inv();
    require_internal(r.trace() == Scalar(x0) && r.norm() == Scalar(x0 * x0 + s0) &&
                         p.eval(r).is_zero(),
                     "materialized point failed verification");
    return r;
}

// theta is the unique root of M in (lo, hi); xpoly/spoly give x and s as
// elements of Q[t]/(M). Computes the isolated root and exits each coordinate
// to a Scalar.
AlgebraElement materialize_modular(const UnivarPoly& p, QPoly M, Rational lo, Rational hi,
                                   QPoly xpoly, QPoly spoly) {
    const AlgebraSignature& sig = p.sig();
    for (;;) {
        try {
            QPoly two_x = xpoly.scaled(Rational(2)).mod(M);
            QPoly normp = (pm_mul(xpoly, xpoly, M) + spoly).mod(M);

            std::vector<QuatMod> c;
            c.reserve(p.degree() + 1);
            for (int h = 0; h <= p.degree(); ++h) c.push_back(QuatMod::from_element(p.coeff(h)));
            for (int k = static_cast<int>(c.size()) - 1; k >= 2; --k) {
                if (c[k].is_zero()) continue;
                QuatMod top = c[k];
                c[k - 1] = qm_add(c[k - 1], qm_scale(top, two_x, M));
                c[k - 2] = qm_add(c[k - 2], qm_neg(qm_scale(top, normp, M)));
                c[k] = QuatMod::zero(sig);
            }
            QuatMod b = c.size() > 1 ? c[1] : QuatMod::zero(sig);
            QuatMod a = !c.empty() ? c[0] : QuatMod::zero(sig);
            require_internal(!qm_vanishes(b, M, lo, hi), "point pair produced a sphere reduction");

            // r = (-a) * conj(b) / N(b)
            QPoly nb;
            for (const auto& pc : b.c) nb = nb + pm_mul(pc, pc, M);
            nb = pm_reduce(nb, M);
            QPoly nb_inv = pm_inv(nb, M, lo, hi); // may split
            QuatMod r = qm_scale(qm_mul(qm_neg(a), qm_conj(b), M), nb_inv, M);

            // exact verification at the root: trace, norm, evaluation
            require_internal(vanishes_at_root((r.c[0] - xpoly).mod(M), M, lo, hi),
                             "materialized point: trace check failed");
            QPoly nr;
            for (const auto& pc : r.c) nr = nr + pm_mul(pc, pc, M);
            require_internal(vanishes_at_root((nr - normp).mod(M), M, lo, hi),
                             "materialized point: norm check failed");
            // right-coefficient Horner: acc <- r * acc + a_h (alternativity
            // makes the left-multiplication chain equal sum q^h a_h)
            QuatMod acc = QuatMod::zero(sig);
            for (int h = p.degree(); h >= 0; --h)
                acc = qm_add(qm_mul(r, acc, M), QuatMod::from_element(p.coeff(h)));
            require_internal(qm_vanishes(acc, M, lo, hi),
                             "materialized point: evaluation check failed");

            // exit each coordinate to a Scalar
            std::vector<Scalar> coords(sig.dim());
            for (int cidx = 0; cidx < sig.dim(); ++cidx) {
                const QPoly& h = r.c[cidx];
                if (h.is_zero()) {
                    coords[cidx] = Scalar(0);
                    continue;
                }
                if (h.degree() == 0) {
                    coords[cidx] = Scalar(h.coeff(0));
                    continue;
                }
                // W(u) = Res_t(M(t), u - h(t)) vanishes at h(theta)
                std::vector<Rational> us, vs;
                long sample = 0;
                while (static_cast<int>(us.size()) < M.degree() + 1) {
                    Rational u0(sample);
                    us.push_back(u0);
                    vs.push_back(resultant(M, QPoly::constant(u0) - h));
                    sample = sample > 0 ? -sample : -sample + 1;
                }
                QPoly W = square_free_part(interpolate(us, vs));
                SturmChain wchain(W);
                Rational l = lo, hgt = hi;
                for (int it = 0;; ++it) {
                    require_internal(it < kMaxCertify, "coordinate isolation did not converge");
                    RIntv val = RIntv::point(Rational());
                    RIntv X{l, hgt};
                    for (int d = h.degree(); d >= 0; --d)
                        val = iv_add(iv_mul(val, X), RIntv::point(h.coeff(d)));
                    if (W.sign_at(val.lo) != 0 && W.sign_at(val.hi) != 0 &&
                        wchain.count_roots(val.lo, val.hi) == 1) {
                        coords[cidx] = Scalar::make_algebraic(W, val.lo, val.hi, false, true);
                        break;
                    }
                    Rational mid = (l + hgt) / Rational(2);
                    int sm = M.sign_at(mid);
                    require_internal(sm != 0, "coordinate refinement midpoint hit a root");
                    if (M.sign_at(l) * sm < 0)
                        hgt = mid;
                    else
                        l = mid;
                }
            }
            return AlgebraElement(sig, std::move(coords));
        } catch (const SplitModulus& split) {
            M = split.factor;
            // re-isolate the root interval endpoints against the new factor
            require_internal(M.degree() >= 1, "modulus split degenerated");
            require_internal(M.sign_at(lo) != 0 && M.sign_at(hi) != 0,
                             "split factor has a root at an interval endpoint");
            xpoly = xpoly.mod(M);
            spoly = spoly.mod(M);
        }
    }
}

} // namespace

namespace detail {

struct LazyPoint {
    UnivarPoly p;
    Scalar x, s;
    mutable std::once_flag flag;
    mutable std::optional<AlgebraElement> value;

    LazyPoint(UnivarPoly poly, Scalar xx, Scalar ss)
        : p(std::move(poly)), x(std::move(xx)), s(std::move(ss)) {}

    const AlgebraElement& get() const {
        std::call_once(flag, [&] { value = materialize(); });
        return *value;
    }

    AlgebraElement materialize() const {
        if (x.is_rational() && s.is_rational())
            return materialize_rational(p, x.rational(), s.rational());
        try {
            if (!x.is_rational()) {
                const RealAlgebraic& ax = x.algebraic();
                QPoly M = ax.minpoly();
                QPoly xpoly{std::vector<Rational>{Rational(), Rational(1)}}; // t
                QPoly spoly = s.is_rational() ? QPoly::constant(s.rational()) : express_s_over_x();
                return materialize_modular(p, M, ax.lo(), ax.hi(), xpoly, spoly);
            }
            // x rational, s irrational: work modulo the minpoly of s
            const RealAlgebraic& as = s.algebraic();
            QPoly M = as.minpoly();
            QPoly xpoly = QPoly::constant(x.rational());
            QPoly spoly{std::vector<Rational>{Rational(), Rational(1)}}; // t
            return materialize_modular(p, M, as.lo(), as.hi(), xpoly, spoly);
        } catch (const FallBack&) {
            return materialize_direct();
        }
    }

    // Full scalar-arithmetic route; only reached in degenerate situations
    // (several conjugate pairs sharing one irrational real part).
    AlgebraElement materialize_direct() const {
        Scalar y = s.sqrt();
        auto [b, a] = reduce_mod_sphere(p, x, y);
        require_internal(!b.is_zero(), "point pair produced a sphere reduction");
        AlgebraElement r = (-a) * b.inv();
        require_internal(r.trace() == x && r.norm() == x * x + s && p.eval(r).is_zero(),
                         "materialized point failed verification");
        return r;
    }

    // s as a polynomial in x modulo Mx: from the gcd in s of P(x, .), Q(x, .)
    // over Q[x]/(Mx). Generic conjugate pairs give a degree-1 gcd; the
    // degenerate cases (several pairs sharing this exact irrational real
    // part) fall back to full scalar arithmetic via FallBack.
    struct FallBack {};

    QPoly express_s_over_x() const {
        const RealAlgebraic& ax = x.algebraic();
        QPoly M = ax.minpoly();
        Rational lo = ax.lo(), hi = ax.hi();
        QPoly csf = square_free_part(companion(p).to_qpoly());
        BiPoly P, Q;
        complex_decompose(csf, P, Q);
        for (;;) {
            try {
                // Euclid in s over Q[x]/(M)
                auto lift = [&](const BiPoly& f) {
                    std::vector<QPoly> cs = f.s_coefficients();
                    for (auto& cp : cs) cp = cp.mod(M);
                    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
                    return cs;
                };
                std::vector<QPoly> A = lift(P), B = lift(Q);
                auto sdeg = [](const std::vector<QPoly>& f) { return static_cast<int>(f.size()) - 1; };
                while (!B.empty()) {
                    // make B monic (may split M)
                    QPoly inv_lc = pm_inv(B.back(), M, lo, hi);
                    for (auto& bc : B) bc = pm_mul(bc, inv_lc, M);
                    // A mod B
                    while (sdeg(A) >= sdeg(B)) {
                        QPoly f = A.back();
                        int shift = sdeg(A) - sdeg(B);
                        for (int i = 0; i <= sdeg(B); ++i)
                            A[i + shift] = (A[i + shift] - pm_mul(f, B[i], M)).mod(M);
                        while (!A.empty() && A.back().is_zero()) A.pop_back();
                        if (A.empty()) break;
                    }
                    std::swap(A, B);
                }
                // A is the gcd (monic-ish)
                if (sdeg(A) != 1) throw FallBack{};
                QPoly g1_inv = pm_inv(A[1], M, lo, hi);
                return pm_mul(-A[0], g1_inv, M);
            } catch (const SplitModulus& split) {
                QPoly nm = split.factor;
                require_internal(nm.degree() >= 1, "modulus split degenerated");
                M = nm;
            }
        }
    }
};

} // namespace detail

RootDescriptor RootDescriptor::isolated(AlgebraElement point) {
    Scalar x = point.coord(0);
    Scalar s;
    for (int i = 1; i < point.dim(); ++i) s += point.coord(i) * point.coord(i);
    RootDescriptor d(Kind::Isolated, std::move(x), std::move(s), std::nullopt);
    auto rep = std::make_shared<detail::LazyPoint>(UnivarPoly(point.sig()), d.x_, d.s_);
    rep->value = std::move(point);
    std::call_once(rep->flag, [] {}); // mark as materialized
    d.rep_ = std::move(rep);
    return d;
}

RootDescriptor RootDescriptor::isolated_lazy(std::shared_ptr<detail::LazyPoint> rep, Scalar x,
                                             Scalar s) {
    RootDescriptor d(Kind::Isolated, std::move(x), std::move(s), std::nullopt);
    d.rep_ = std::move(rep);
    return d;
}

RootDescriptor RootDescriptor::sphere(Scalar x, Scalar y) {
    require_internal(y.sign() > 0, "sphere radius must be positive");
    Scalar s = y * y;
    return RootDescriptor(Kind::Sphere, std::move(x), std::move(s), std::move(y));
}

const AlgebraElement& RootDescriptor::point() const {
    require_internal(kind_ == Kind::Isolated && rep_ != nullptr, "point() on a sphere descriptor");
    return rep_->get();
}

RootSet solve(const UnivarPoly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "the zero polynomial vanishes everywhere");
    if (p.is_constant()) fail("ConstantPolynomial", "a nonzero constant has an empty zero locus");
    if (!p.sig().has_involution())
        fail("NoInvolution", "solve requires the quaternion or octonion signature");

    std::vector<QPoly> coords = coordinate_polys(p); // errors NonRationalCoefficients
    QPoly c = companion(p).to_qpoly();
    QPoly csf = square_free_part(c);

    RootSet rs{p, {}};

    // Real roots of the companion are exactly the real roots of p; re-verify
    // by evaluating each coordinate polynomial.
    std::vector<Scalar> treal = isolate_real_roots(csf);
    for (const Scalar& t : treal) {
        bool is_root = std::all_of(coords.begin(), coords.end(),
                                   [&](const QPoly& pc) { return scalar_is_root_of(t, pc); });
        if (is_root)
            rs.descriptors.push_back(
                RootDescriptor::isolated(AlgebraElement::scalar(p.sig(), t)));
    }

    // Spheres: the sphere modulus t^2 - 2xt + (x^2 + y^2) is central, so the
    // whole sphere vanishes iff the modulus divides every coordinate
    // polynomial, i.e. iff (x, y) is a conjugate pair of their gcd.
    QPoly G;
    for (const QPoly& pc : coords) G = G.is_zero() ? pc : gcd(G, pc);
    std::vector<CertPair> sphere_pairs;
    if (G.degree() >= 2) {
        QPoly gsf = square_free_part(G);
        int greal = static_cast<int>(isolate_real_roots(gsf).size());
        sphere_pairs = conjugate_pairs(gsf, greal);
        for (const auto& pr : sphere_pairs)
            rs.descriptors.push_back(RootDescriptor::sphere(pr.x, pr.s.sqrt()));
    }

    // Isolated nonreal points: one per non-sphere conjugate pair of the
    // companion.
    std::vector<CertPair> pairs = conjugate_pairs(csf, static_cast<int>(treal.size()));
    for (const auto& pr : pairs) {
        bool is_sphere = std::any_of(sphere_pairs.begin(), sphere_pairs.end(), [&](const CertPair& sp) {
            return sp.x == pr.x && sp.s == pr.s;
        });
        if (is_sphere) continue;
        auto rep = std::make_shared<detail::LazyPoint>(p, pr.x, pr.s);
        rs.descriptors.push_back(RootDescriptor::isolated_lazy(std::move(rep), pr.x, pr.s));
    }

    if (rs.descriptors.empty())
        fail("EmptyRootSet",
             "nonconstant ordered polynomial with empty zero locus; this contradicts the "
             "fundamental theorem and should be reported");
    return rs;
}

int zero_locus_dimension(const RootSet& rs) {
    bool any_sphere =
        std::any_of(rs.descriptors.begin(), rs.descriptors.end(),
                    [](const RootDescriptor& d) { return d.kind() == RootDescriptor::Kind::Sphere; });
    if (!any_sphere) return 0;
    return rs.input.sig().kind() == AlgebraSignature::Kind::Octonion ? 6 : 2;
}

std::string root_report_json(const RootSet& rs, const std::string& input_text) {
    nlohmann::json j;
    j["input"] = input_text.empty() ? rs.input.str() : input_text;
    j["sig"] = rs.input.sig().name();
    j["roots"] = nlohmann::json::array();
    for (const auto& d : rs.descriptors) {
        nlohmann::json e;
        if (d.kind() == RootDescriptor::Kind::Sphere) {
            e["type"] = "sphere";
            e["x"] = d.x().str();
            e["y"] = d.y().str();
        } else {
            e["type"] = "point";
            e["coords"] = nlohmann::json::array();
            for (const auto& c : d.point().coords()) e["coords"].push_back(c.str());
        }
        j["roots"].push_back(e);
    }
    j["dimension"] = zero_locus_dimension(rs);
    return j.dump(2);
}

} // namespace hyperalg
