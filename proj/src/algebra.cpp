#include "hyperalg/algebra.hpp"

#include "hyperalg/error.hpp"

#include <array>
#include <deque>
#include <mutex>
#include <sstream>

namespace hyperalg {
namespace {

std::vector<Rational> quaternion_constants() {
    const int d = 4;
    std::vector<Rational> c(d * d * d);
    auto set = [&](int i, int j, int l, long v) { c[(i * d + j) * d + l] = Rational(v); };
    for (int j = 0; j < d; ++j) set(0, j, j, 1);
    for (int i = 1; i < d; ++i) {
        set(i, 0, i, 1);
        set(i, i, 0, -1);
    }
    set(1, 2, 3, 1);  // ij = k
    set(2, 1, 3, -1); // ji = -k
    set(2, 3, 1, 1);  // jk = i
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);  // ki = j
    set(1, 3, 2, -1);
    return c;
}

// epsilon_{ijk} = 1 on these ordered triples, totally antisymmetric.
constexpr std::array<std::array<int, 3>, 7> kOctonionTriples = {{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

std::vector<Rational> octonion_constants() {
    const int d = 8;
    std::vector<Rational> c(d * d * d);
    auto set = [&](int i, int j, int l, long v) { c[(i * d + j) * d + l] = Rational(v); };
    for (int j = 0; j < d; ++j) set(0, j, j, 1);
    for (int i = 1; i < d; ++i) {
        set(i, 0, i, 1);
        set(i, i, 0, -1);
    }
    for (const auto& t : kOctonionTriples) {
        // e_a e_b = e_c and the two cyclic rotations; swaps change sign.
        const int a = t[0], b = t[1], cc = t[2];
        set(a, b, cc, 1);
        set(b, cc, a, 1);
        set(cc, a, b, 1);
        set(b, a, cc, -1);
        set(cc, b, a, -1);
        set(a, cc, b, -1);
    }
    return c;
}

std::vector<std::string> octonion_names() {
    std::vector<std::string> n{"1"};
    for (int i = 1; i <= 7; ++i) n.push_back("e" + std::to_string(i));
    return n;
}

} // namespace

AlgebraSignature::AlgebraSignature(Kind kind, std::string name, int dim,
                                   std::vector<Rational> constants, std::vector<std::string> names)
    : kind_(kind), name_(std::move(name)), dim_(dim), constants_(std::move(constants)),
      names_(std::move(names)) {
    sparse_.resize(dim_ * dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int l = 0; l < dim_; ++l) {
                const Rational& v = constants_[(i * dim_ + j) * dim_ + l];
                if (!v.is_zero()) sparse_[i * dim_ + j].emplace_back(l, v);
            }
}

const AlgebraSignature& AlgebraSignature::quaternion() {
    static const AlgebraSignature sig(Kind::Quaternion, "quaternion", 4, quaternion_constants(),
                                      {"1", "i", "j", "k"});
    return sig;
}

const AlgebraSignature& AlgebraSignature::octonion() {
    static const AlgebraSignature sig(Kind::Octonion, "octonion", 8, octonion_constants(),
                                      octonion_names());
    return sig;
}

const AlgebraSignature& AlgebraSignature::generic(int dim, std::vector<Rational> constants,
                                                  std::vector<std::string> names) {
    if (dim < 1 || static_cast<int>(constants.size()) != dim * dim * dim ||
        static_cast<int>(names.size()) != dim)
        fail("BadSignature", "inconsistent dimension");
    auto at = [&](int i, int j, int l) -> const Rational& {
        return constants[(i * dim + j) * dim + l];
    };
    for (int j = 0; j < dim; ++j)
        for (int l = 0; l < dim; ++l) {
            Rational expect(j == l ? 1 : 0);
            if (at(0, j, l) != expect || at(j, 0, l) != expect)
                fail("BadSignature", "e_0 is not a two-sided identity");
        }
    static std::deque<AlgebraSignature> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& s : registry)
        if (s.dim_ == dim && s.constants_ == constants && s.names_ == names) return s;
    registry.push_back(
        AlgebraSignature(Kind::Generic, "generic", dim, std::move(constants), std::move(names)));
    return registry.back();
}

const AlgebraSignature& AlgebraSignature::by_name(const std::string& name) {
    if (name == "quaternion") return quaternion();
    if (name == "octonion") return octonion();
    fail("BadSignature", "unknown signature '" + name + "'");
}

AlgebraElement::AlgebraElement(const AlgebraSignature& sig)
    : sig_(&sig), coords_(sig.dim(), Scalar()) {}

AlgebraElement::AlgebraElement(const AlgebraSignature& sig, std::vector<Scalar> coords)
    : sig_(&sig), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != sig.dim())
        fail("BadSignature", "coordinate vector has wrong length");
}

AlgebraElement AlgebraElement::scalar(const AlgebraSignature& sig, const Scalar& s) {
    AlgebraElement e(sig);
    e.coords_[0] = s;
    return e;
}

AlgebraElement AlgebraElement::unit(const AlgebraSignature& sig, int i) {
    AlgebraElement e(sig);
    e.coords_.at(i) = Scalar(1);
    return e;
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgebraElement::is_central() const {
    for (int i = 1; i < dim(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(*sig_);
    for (int i = 0; i < dim(); ++i) r.coords_[i] = -coords_[i];
    return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.sig() == b.sig())) fail("SignatureMismatch", "adding elements of different algebras");
    AlgebraElement r(a.sig());
    for (int i = 0; i < a.dim(); ++i) r.coords_[i] = a.coords_[i] + b.coords_[i];
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.sig() == b.sig()))
        fail("SignatureMismatch", "multiplying elements of different algebras");
    AlgebraElement r(a.sig());
    for (int i = 0; i < a.dim(); ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (int j = 0; j < b.dim(); ++j) {
            if (b.coords_[j].is_zero()) continue;
            Scalar ab = a.coords_[i] * b.coords_[j];
            for (const auto& [l, coeff] : a.sig().products(i, j))
                r.coords_[l] += ab * Scalar(coeff);
        }
    }
    return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.sig() == b.sig())) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r(*sig_);
    for (int i = 0; i < dim(); ++i) r.coords_[i] = coords_[i] * s;
    return r;
}

AlgebraElement AlgebraElement::conj() const {
    if (!sig_->has_involution())
        fail("NoInvolution", "conjugation requires the quaternion or octonion signature");
    AlgebraElement r(*sig_);
    r.coords_[0] = coords_[0];
    for (int i = 1; i < dim(); ++i) r.coords_[i] = -coords_[i];
    return r;
}

Scalar AlgebraElement::trace() const {
    if (!sig_->has_involution())
        fail("NoInvolution", "trace requires the quaternion or octonion signature");
    return coords_[0];
}

Scalar AlgebraElement::norm() const {
    if (!sig_->has_involution())
        fail("NoInvolution", "norm requires the quaternion or octonion signature");
    Scalar n;
    for (const auto& c : coords_) n += c * c;
    return n;
}

AlgebraElement AlgebraElement::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of the zero element");
    AlgebraElement r = conj().scaled(norm().inv());
    require_internal(r * *this == one(*sig_) && *this * r == one(*sig_),
                     "two-sided inverse check failed");
    return r;
}

std::vector<Scalar> AlgebraElement::coord_extract() const {
    if (!sig_->has_involution())
        fail("NoInvolution", "coordinate extraction requires quaternion or octonion signature");
    const int d = dim();
    std::vector<AlgebraElement> units;
    units.reserve(d);
    for (int i = 0; i < d; ++i) units.push_back(unit(*sig_, i));

    auto sandwich = [&](int h) { return (units[h] * *this) * units[h]; };

    std::vector<Scalar> out(d);
    std::vector<AlgebraElement> sandwiches;
    sandwiches.push_back(*this); // placeholder for index 0
    for (int h = 1; h < d; ++h) sandwiches.push_back(sandwich(h));

    AlgebraElement sum_all(*sig_);
    for (int h = 1; h < d; ++h) sum_all = sum_all + sandwiches[h];

    if (sig_->kind() == AlgebraSignature::Kind::Quaternion) {
        // 4 q_1 = q - iqi - jqj - kqk
        AlgebraElement x0 = *this - sum_all;
        x0 = x0.scaled(Scalar(Rational(Integer(1), Integer(4))));
        require_internal(x0.is_central(), "coordinate extraction: non-central real part");
        out[0] = x0.coord(0);
        for (int l = 1; l < d; ++l) {
            // 4 e_l q_{l+1} = q - e_l q e_l + sum_{h != l} e_h q e_h
            AlgebraElement xl = *this + sum_all - sandwiches[l] - sandwiches[l];
            // left division by 4 e_l, i.e. multiplication by -e_l / 4
            xl = ((-units[l]) * xl).scaled(Scalar(Rational(Integer(1), Integer(4))));
            require_internal(xl.is_central(), "coordinate extraction: non-central component");
            out[l] = xl.coord(0);
        }
    } else {
        // Octonion identities need the balanced coefficients
        //   12 o_1 = 5 o - sum_h e_h o e_h
        //   12 e_l o_{l+1} = o - 5 e_l o e_l + sum_{h != l} e_h o e_h
        // (the quaternionic pattern only cancels with two complementary units).
        Scalar twelfth(Rational(Integer(1), Integer(12)));
        AlgebraElement x0 = scaled(Scalar(5)) - sum_all;
        x0 = x0.scaled(twelfth);
        require_internal(x0.is_central(), "coordinate extraction: non-central real part");
        out[0] = x0.coord(0);
        for (int l = 1; l < d; ++l) {
            AlgebraElement xl = *this + sum_all - sandwiches[l].scaled(Scalar(6));
            xl = ((-units[l]) * xl).scaled(twelfth);
            require_internal(xl.is_central(), "coordinate extraction: non-central component");
            out[l] = xl.coord(0);
        }
    }

    require_internal(out == coords_, "coordinate extraction disagrees with stored coordinates");
    return out;
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
    AlgebraElement acc = one(*sig_);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string AlgebraElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        const Scalar& c = coords_[i];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        bool need_coeff = i == 0 || !mag.is_one();
        bool star = need_coeff && !(mag.is_rational() && mag.rational().is_integer());
        if (need_coeff) {
            bool wrap = !mag.is_rational();
            if (wrap) os << "(";
            os << mag.str();
            if (wrap) os << ")";
        }
        if (i > 0) {
            if (star) os << "*";
            os << sig_->basis_name(i);
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace hyperalg
