#pragma once

#include "hyperalg/opoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperalg {

namespace detail {
struct LazyPoint;
}

// One component of the zero locus of a one-variable ordered polynomial:
// either an isolated point, or the whole sphere of elements with real part x
// and norm x^2 + y^2 (a 2-sphere over H, a 6-sphere over O).
//
// Isolated points are materialized on demand: the pair data (x, y^2) is
// certified exactly by solve(), and the coordinate scalars are computed on
// first access to point(). Materialization verifies op_eval(p, point) = 0
// exactly before returning.
class RootDescriptor {
public:
    enum class Kind { Isolated, Sphere };

    static RootDescriptor isolated(AlgebraElement point);
    static RootDescriptor isolated_lazy(std::shared_ptr<detail::LazyPoint> rep, Scalar x, Scalar s);
    static RootDescriptor sphere(Scalar x, Scalar y);

    Kind kind() const { return kind_; }
    // Real part of the component (sphere center / point real part).
    const Scalar& x() const { return x_; }
    // Imaginary norm squared s = y^2 (0 for real points).
    const Scalar& imag_norm_sq() const { return s_; }
    // Sphere radius; for isolated points the imaginary norm sqrt(s).
    Scalar y() const { return y_ ? *y_ : s_.sqrt(); }

    // Isolated only; materializes the exact coordinates if needed.
    const AlgebraElement& point() const;

private:
    RootDescriptor(Kind kind, Scalar x, Scalar s, std::optional<Scalar> y)
        : kind_(kind), x_(std::move(x)), s_(std::move(s)), y_(std::move(y)) {}

    Kind kind_;
    Scalar x_, s_;
    std::optional<Scalar> y_;
    std::shared_ptr<detail::LazyPoint> rep_; // Isolated only
};

// Exact decomposition of the zero locus: pairwise distinct spheres plus
// isolated points not lying on any listed sphere.
struct RootSet {
    UnivarPoly input;
    std::vector<RootDescriptor> descriptors;
};

// Exact zero locus of a nonconstant one-variable ordered polynomial with
// quaternion or octonion coefficients whose coordinates are rational.
//
// Pipeline: companion c = p * conj(p) (real coefficients, squarefree part
// csf); real roots of csf are the real roots of p. Writing
// csf(x + iy) = P(x, s) + i y Q(x, s) with s = y^2, the nonreal conjugate
// pairs of csf are the real solutions of P = Q = 0 with s > 0; candidates
// come from the interpolated resultants Res_s(P, Q) and Res_x(P, Q) and are
// certified by exact evaluation (rational data) or by interval exclusion
// down to the exact pair count known from Sturm root counting. Spheres are
// the conjugate pairs of the coordinate-polynomial gcd of p (the central
// sphere modulus divides every coordinate polynomial exactly when the whole
// sphere vanishes); every other certified pair carries the unique isolated
// root -a * b^-1 from the reduction p = q*b + a modulo the sphere modulus.
//
// Errors: "ZeroPolynomial", "ConstantPolynomial", "NonRationalCoefficients",
// "NoInvolution". A nonconstant input with an empty result would contradict
// the fundamental theorem; it raises "EmptyRootSet" instead of returning.
RootSet solve(const UnivarPoly& p);

// 0 when only isolated points; 2 (quaternion) or 6 (octonion) when any
// sphere is present.
int zero_locus_dimension(const RootSet& rs);

// Materializes isolated points: {"input", "sig", "roots", "dimension"}.
std::string root_report_json(const RootSet& rs, const std::string& input_text = "");

} // namespace hyperalg
