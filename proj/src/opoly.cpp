#include "hyperalg/opoly.hpp"

#include "hyperalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace hyperalg {

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (uint32_t e : e_) d += e;
    return d;
}

Monomial Monomial::with_exp(int i, uint32_t v) const {
    Monomial m(*this);
    m.e_[i] = v;
    return m;
}

bool Monomial::GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e_ < b.e_; // lexicographic, variable 1 most significant
}

OrderedPoly OrderedPoly::constant(int nvars, const AlgebraElement& c) {
    OrderedPoly p(nvars, c.sig());
    p.add_term(Monomial(nvars), c);
    return p;
}

OrderedPoly OrderedPoly::variable(int nvars, int index, const AlgebraSignature& sig) {
    require_internal(index >= 0 && index < nvars, "variable index out of range");
    OrderedPoly p(nvars, sig);
    p.add_term(Monomial(nvars).with_exp(index, 1), AlgebraElement::one(sig));
    return p;
}

uint32_t OrderedPoly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void OrderedPoly::add_term(const Monomial& m, const AlgebraElement& coeff) {
    require_internal(m.nvars() == nvars_, "monomial arity mismatch");
    require_internal(coeff.sig() == *sig_, "coefficient signature mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(m, coeff);
        return;
    }
    AlgebraElement sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

OrderedPoly OrderedPoly::operator-() const {
    OrderedPoly r(nvars_, *sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

OrderedPoly operator+(const OrderedPoly& a, const OrderedPoly& b) {
    require_internal(a.nvars_ == b.nvars_ && *a.sig_ == *b.sig_, "ordered poly arity/sig mismatch");
    OrderedPoly r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

OrderedPoly operator-(const OrderedPoly& a, const OrderedPoly& b) { return a + (-b); }

bool operator==(const OrderedPoly& a, const OrderedPoly& b) {
    return a.nvars_ == b.nvars_ && *a.sig_ == *b.sig_ && a.terms_ == b.terms_;
}

OrderedPoly OrderedPoly::scaled_central(const Scalar& s) const {
    OrderedPoly r(nvars_, *sig_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.scaled(s));
    return r;
}

OrderedPoly OrderedPoly::widened(int new_nvars) const {
    require_internal(new_nvars >= nvars_, "widened: cannot shrink");
    OrderedPoly r(new_nvars, *sig_);
    for (const auto& [m, c] : terms_) {
        std::vector<uint32_t> e(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) e[i] = m.exp(i);
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

AlgebraElement OrderedPoly::eval(const std::vector<AlgebraElement>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        fail("ArityMismatch", "evaluation point has wrong arity");
    for (const auto& p : point)
        if (!(p.sig() == *sig_)) fail("SignatureMismatch", "evaluation point signature mismatch");
    AlgebraElement acc(*sig_);
    for (const auto& [m, c] : terms_) {
        // q_1^a1 * (q_2^a2 * ( ... * (q_n^an * c))), right to left
        AlgebraElement term = c;
        for (int i = nvars_ - 1; i >= 0; --i) {
            uint32_t e = m.exp(i);
            if (e == 0) continue;
            term = point[i].pow(e) * term;
        }
        acc = acc + term;
    }
    return acc;
}

std::string OrderedPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int i) {
        if (!names.empty()) return names[i];
        if (nvars_ == 1) return std::string("q");
        return "q" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        // a single negated summand folds into the separator
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        std::string mag = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.total_degree() == 0) {
            os << mag;
        } else {
            bool printed_var = false;
            for (int i = 0; i < nvars_; ++i) {
                uint32_t e = m.exp(i);
                if (e == 0) continue;
                if (printed_var) os << "*";
                os << var_name(i);
                if (e > 1) os << "^" << e;
                printed_var = true;
            }
            if (mag != "1") {
                bool wrap = mag.find_first_of(" +-") != std::string::npos;
                os << "*" << (wrap ? "(" : "") << mag << (wrap ? ")" : "");
            }
        }
        first = false;
    }
    return os.str();
}

UnivarPoly::UnivarPoly(const AlgebraSignature& sig, std::vector<AlgebraElement> coeffs)
    : sig_(&sig), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        require_internal(c.sig() == sig, "univar coefficient signature mismatch");
    trim();
}

void UnivarPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UnivarPoly UnivarPoly::from_ordered(const OrderedPoly& p) {
    require_internal(p.nvars() == 1, "from_ordered requires one variable");
    UnivarPoly u(p.sig());
    for (const auto& [m, c] : p.terms()) {
        uint32_t e = m.exp(0);
        if (u.c_.size() <= e) u.c_.resize(e + 1, AlgebraElement(p.sig()));
        u.c_[e] = c;
    }
    u.trim();
    return u;
}

OrderedPoly UnivarPoly::to_ordered() const {
    OrderedPoly p(1, *sig_);
    for (size_t i = 0; i < c_.size(); ++i)
        p.add_term(Monomial(std::vector<uint32_t>{static_cast<uint32_t>(i)}), c_[i]);
    return p;
}

AlgebraElement UnivarPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return AlgebraElement(*sig_);
    return c_[i];
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly r(*sig_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
    require_internal(*a.sig_ == *b.sig_, "univar signature mismatch");
    std::vector<AlgebraElement> c;
    size_t n = std::max(a.c_.size(), b.c_.size());
    c.reserve(n);
    for (size_t i = 0; i < n; ++i)
        c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return UnivarPoly(*a.sig_, std::move(c));
}

UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) { return a + (-b); }

AlgebraElement UnivarPoly::eval(const AlgebraElement& q) const {
    AlgebraElement acc(*sig_);
    AlgebraElement qp = AlgebraElement::one(*sig_);
    for (size_t h = 0; h < c_.size(); ++h) {
        if (h > 0) qp = qp * q;
        if (!c_[h].is_zero()) acc = acc + qp * c_[h];
    }
    return acc;
}

UnivarPoly UnivarPoly::conj_coeffs() const {
    UnivarPoly r(*sig_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c.conj());
    return r;
}

UnivarPoly conv_mul(const UnivarPoly& p, const UnivarPoly& q) {
    require_internal(p.sig() == q.sig(), "conv_mul signature mismatch");
    if (p.is_zero() || q.is_zero()) return UnivarPoly(p.sig());
    std::vector<AlgebraElement> c(p.degree() + q.degree() + 1, AlgebraElement(p.sig()));
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= q.degree(); ++j) c[i + j] = c[i + j] + p.coeff(i) * q.coeff(j);
    UnivarPoly r(p.sig(), std::move(c));
    // no zero divisors: degrees add for nonzero inputs
    require_internal(r.degree() == p.degree() + q.degree(), "conv_mul dropped the leading term");
    return r;
}

ScalarPoly::ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar ScalarPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar();
    return c_[i];
}

Scalar ScalarPoly::eval(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool ScalarPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

QPoly ScalarPoly::to_qpoly() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& s : c_) {
        if (!s.is_rational())
            fail("NonRationalCoefficients", "polynomial has irrational central coefficients");
        c.push_back(s.rational());
    }
    return QPoly(std::move(c)).primitive_positive();
}

ScalarPoly companion(const UnivarPoly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "companion of the zero polynomial");
    UnivarPoly prod = conv_mul(p, p.conj_coeffs());
    std::vector<Scalar> c;
    c.reserve(prod.degree() + 1);
    for (int i = 0; i <= prod.degree(); ++i) {
        AlgebraElement ci = prod.coeff(i);
        require_internal(ci.is_central(), "companion coefficient is not central");
        c.push_back(ci.coord(0));
    }
    return ScalarPoly(std::move(c));
}

std::pair<AlgebraElement, AlgebraElement> reduce_mod_sphere(const UnivarPoly& p, const Scalar& x,
                                                            const Scalar& y) {
    require_internal(y.sign() >= 0, "reduce_mod_sphere needs y >= 0");
    // q^2 = 2x q - (x^2 + y^2) on the sphere; coefficients are central so the
    // rewrite commutes past everything.
    Scalar two_x = Scalar(2) * x;
    Scalar norm = x * x + y * y;
    std::vector<AlgebraElement> c = p.coeffs();
    for (int k = static_cast<int>(c.size()) - 1; k >= 2; --k) {
        if (c[k].is_zero()) continue;
        AlgebraElement top = c[k];
        c[k - 1] = c[k - 1] + top.scaled(two_x);
        c[k - 2] = c[k - 2] - top.scaled(norm);
        c[k] = AlgebraElement(p.sig());
    }
    AlgebraElement b = c.size() > 1 ? c[1] : AlgebraElement(p.sig());
    AlgebraElement a = !c.empty() ? c[0] : AlgebraElement(p.sig());
    return {b, a};
}

} // namespace hyperalg
