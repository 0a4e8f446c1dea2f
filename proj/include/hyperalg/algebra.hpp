#pragma once

#include "hyperalg/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hyperalg {

// Finite-dimensional algebra described by structure constants:
// e_i * e_j = sum_l sc(i,j,l) e_l, with e_0 the two-sided identity.
//
// The built-in quaternion table satisfies i^2 = j^2 = k^2 = -1, ij = k;
// the built-in octonion table is generated from the antisymmetric epsilon
// tensor with value 1 on the triples 123, 145, 176, 246, 257, 347, 365
// and e_i^2 = -1.
class AlgebraSignature {
public:
    enum class Kind { Quaternion, Octonion, Generic };

    static const AlgebraSignature& quaternion();
    static const AlgebraSignature& octonion();
    // Validates the identity axioms for e_0; errors "BadSignature". The
    // returned signature is interned and lives for the whole process, so
    // elements can hold plain references.
    static const AlgebraSignature& generic(int dim, std::vector<Rational> constants,
                                           std::vector<std::string> names);
    static const AlgebraSignature& by_name(const std::string& name); // "quaternion"/"octonion"

    int dim() const { return dim_; }
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::string& basis_name(int i) const { return names_[i]; }
    Rational sc(int i, int j, int l) const { return constants_[(i * dim_ + j) * dim_ + l]; }
    // Nonzero products of e_i * e_j as (basis index, coefficient) pairs.
    const std::vector<std::pair<int, Rational>>& products(int i, int j) const {
        return sparse_[i * dim_ + j];
    }
    bool has_involution() const { return kind_ != Kind::Generic; }

    friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
        return &a == &b || (a.dim_ == b.dim_ && a.constants_ == b.constants_);
    }

private:
    AlgebraSignature(Kind kind, std::string name, int dim, std::vector<Rational> constants,
                     std::vector<std::string> names);

    Kind kind_;
    std::string name_;
    int dim_;
    std::vector<Rational> constants_; // dense dim^3 table
    std::vector<std::vector<std::pair<int, Rational>>> sparse_;
    std::vector<std::string> names_;
};

// Element of an algebra: a coordinate vector over Scalars. Immutable.
class AlgebraElement {
public:
    explicit AlgebraElement(const AlgebraSignature& sig); // zero
    AlgebraElement(const AlgebraSignature& sig, std::vector<Scalar> coords);

    static AlgebraElement scalar(const AlgebraSignature& sig, const Scalar& s);
    static AlgebraElement one(const AlgebraSignature& sig) { return scalar(sig, Scalar(1)); }
    static AlgebraElement unit(const AlgebraSignature& sig, int i);

    const AlgebraSignature& sig() const { return *sig_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(int i) const { return coords_[i]; }
    int dim() const { return static_cast<int>(coords_.size()); }

    bool is_zero() const;
    // True when all non-real coordinates vanish (center of H and O).
    bool is_central() const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    // Bilinear product through the structure constants; errors "SignatureMismatch".
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    AlgebraElement scaled(const Scalar& s) const; // central scaling

    // Involution; quaternion/octonion signatures only (errors "NoInvolution").
    AlgebraElement conj() const;
    Scalar trace() const; // real coordinate
    Scalar norm() const;  // sum of squared coordinates; a * conj(a) = norm(a) * 1
    AlgebraElement inv() const; // conj / norm; errors "DivisionByZero" on 0

    // Recovers the coordinates using only the definable identities
    // (conjugation sums, integer division, left division by basis units)
    // and asserts the result matches the stored coordinates.
    std::vector<Scalar> coord_extract() const;

    AlgebraElement pow(unsigned e) const; // e >= 0; power-associative by alternativity

    std::string str() const; // "1 + 2i + 3j - 4k", "e5", "0", ...

private:
    const AlgebraSignature* sig_;
    std::vector<Scalar> coords_;
};

} // namespace hyperalg
