#include "qosp/scalars.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qosp {

namespace {

/// Euler totient, trial division (N stays small: 4l).
size_t totient(unsigned n) {
    size_t result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

RatFunc monic_den(Poly1 num, Poly1 den) {
    const Rational lead = den.leading();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num = num * inv;
        den = den * inv;
    }
    return RatFunc{std::move(num), std::move(den)};
}

RatFunc canonical_fraction(Poly1 num, Poly1 den) {
    if (den.is_zero()) arith_error("scalar with zero denominator");
    if (num.is_zero()) return RatFunc{Poly1(), Poly1::constant(1)};
    Poly1 g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    return monic_den(std::move(num), std::move(den));
}

/// product of two reduced fractions, reduced by cross-cancellation only
RatFunc mul_reduced(const RatFunc& x, const RatFunc& y) {
    Poly1 n1 = x.num, d2 = y.den;
    const Poly1 g1 = gcd(n1, d2);
    if (g1.degree() > 0) {
        n1 = divmod(n1, g1).first;
        d2 = divmod(d2, g1).first;
    }
    Poly1 n2 = y.num, d1 = x.den;
    const Poly1 g2 = gcd(n2, d1);
    if (g2.degree() > 0) {
        n2 = divmod(n2, g2).first;
        d1 = divmod(d1, g2).first;
    }
    return monic_den(n1 * n2, d1 * d2);
}

/// sum of two reduced fractions; any common factor of the numerator with
/// the least common denominator divides g = gcd of the denominators
RatFunc add_reduced(const RatFunc& x, const RatFunc& y) {
    const Poly1 g = gcd(x.den, y.den);
    if (g.degree() == 0) {
        Poly1 num = x.num * y.den + y.num * x.den;
        if (num.is_zero()) return RatFunc{Poly1(), Poly1::constant(1)};
        return monic_den(std::move(num), x.den * y.den);
    }
    const Poly1 d1g = divmod(x.den, g).first;
    const Poly1 d2g = divmod(y.den, g).first;
    Poly1 num = x.num * d2g + y.num * d1g;
    if (num.is_zero()) return RatFunc{Poly1(), Poly1::constant(1)};
    Poly1 den = x.den * d2g;  // = lcm(x.den, y.den)
    const Poly1 h = gcd(num, g);
    if (h.degree() > 0) {
        num = divmod(num, h).first;
        den = divmod(den, h).first;
    }
    return monic_den(std::move(num), std::move(den));
}

}  // namespace

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
        usage_error("operands belong to different scalar fields");
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

bool Scalar::is_zero() const {
    if (std::holds_alternative<RatFunc>(v_)) return rf().num.is_zero();
    for (const auto& c : cy().coeffs)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const { return *this == field_->one(); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a.field()->add(a, b);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a.field()->sub(a, b);
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a.field()->mul(a, b);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a.field()->div(a, b);
}
Scalar Scalar::operator-() const { return field_->neg(*this); }
Scalar Scalar::inverse() const { return field_->inv(*this); }

Scalar Scalar::pow(long n) const {
    Scalar base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Scalar result = field_->one();
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (std::holds_alternative<RatFunc>(a.v_)) {
        // canonical forms: component-wise equality
        return a.rf().num == b.rf().num && a.rf().den == b.rf().den;
    }
    return a.cy().coeffs == b.cy().coeffs;
}

std::string Scalar::to_string() const { return field_->to_string(*this); }

// ---------------------------------------------------------------------------
// ScalarField
// ---------------------------------------------------------------------------

// Fields are canonical per (mode, l) and live for the whole session; every
// Scalar keeps a shared_ptr to its field, so interning avoids rebuilding the
// reduction tables and makes identical fields pointer-identical.
namespace {
std::mutex field_registry_mu;
std::map<int, FieldPtr> field_registry;  // key: 0 = generic, l = root(l)
}  // namespace

FieldPtr ScalarField::make_generic() {
    std::lock_guard<std::mutex> lock(field_registry_mu);
    auto it = field_registry.find(0);
    if (it != field_registry.end()) return it->second;
    auto f = std::shared_ptr<ScalarField>(new ScalarField());
    f->mode_ = FieldMode::generic;
    f->init_constants();
    field_registry[0] = f;
    return f;
}

FieldPtr ScalarField::make_root(int l) {
    if (l < 3) usage_error("root mode requires l >= 3");
    std::lock_guard<std::mutex> lock(field_registry_mu);
    auto it = field_registry.find(l);
    if (it != field_registry.end()) return it->second;
    auto f = std::shared_ptr<ScalarField>(new ScalarField());
    f->mode_ = FieldMode::root;
    f->l_ = l;
    f->N_ = 4u * static_cast<unsigned>(l);
    f->phi_N_ = cyclotomic_polynomial(f->N_);
    f->deg_ = static_cast<size_t>(f->phi_N_.degree());
    if (f->deg_ != totient(f->N_)) arith_error("cyclotomic degree mismatch");
    // reduction table x^(deg+i) mod Phi_N for i = 0 .. deg-2
    f->xpow_.resize(f->deg_ - 1);
    std::vector<Rational> cur(f->deg_, Rational(0));
    // x^deg = -(lower part of Phi_N)  (Phi_N is monic)
    for (size_t i = 0; i < f->deg_; ++i) cur[i] = -f->phi_N_.coeff(i);
    f->xpow_[0] = cur;
    for (size_t i = 1; i + 1 < f->deg_; ++i) {
        // multiply by x
        Rational top = cur.back();
        for (size_t j = f->deg_ - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t j = 0; j < f->deg_; ++j) cur[j] += top * f->xpow_[0][j];
        f->xpow_[i] = cur;
    }
    f->init_constants();
    field_registry[l] = f;
    return f;
}

void ScalarField::init_constants() {
    if (mode_ == FieldMode::generic) {
        zero_ = Scalar(shared_from_this(), RatFunc{Poly1(), Poly1::constant(1)});
        one_ = Scalar(shared_from_this(), RatFunc{Poly1::constant(1), Poly1::constant(1)});
        q_half_ = Scalar(shared_from_this(), RatFunc{Poly1::identity_var(), Poly1::constant(1)});
    } else {
        std::vector<Rational> z(deg_, Rational(0));
        zero_ = Scalar(shared_from_this(), CycElem{z});
        std::vector<Rational> o(deg_, Rational(0));
        o[0] = 1;
        one_ = Scalar(shared_from_this(), CycElem{o});
        q_half_ = root_power(2);
    }
    q_ = mul(q_half_, q_half_);
    q_inv_ = inv(q_);
    q_half_inv_ = inv(q_half_);
    q_prime_ = neg(q_);
    eta_ = mul(add(q_half_, q_half_inv_), sub(q_, q_inv_));
    if (eta_.is_zero()) arith_error("eta vanishes; unsupported field");
}

Scalar ScalarField::from_rational(const Rational& r) const {
    if (mode_ == FieldMode::generic)
        return Scalar(shared_from_this(), RatFunc{Poly1::constant(r), Poly1::constant(1)});
    std::vector<Rational> v(deg_, Rational(0));
    v[0] = r;
    return Scalar(shared_from_this(), CycElem{std::move(v)});
}

Scalar ScalarField::root_power(long j) const {
    if (mode_ != FieldMode::root) usage_error("root_power is only available in root mode");
    long r = j % static_cast<long>(N_);
    if (r < 0) r += N_;
    std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
    raw.back() = 1;
    return Scalar(shared_from_this(), reduce(std::move(raw)));
}

Scalar ScalarField::from_fraction(const Poly1& num, const Poly1& den) const {
    if (mode_ != FieldMode::generic) usage_error("from_fraction is only available in generic mode");
    return Scalar(shared_from_this(), canonical_fraction(num, den));
}

Scalar ScalarField::q_power(long j) const { return q_.pow(j); }
Scalar ScalarField::q_half_power(long j) const { return q_half_.pow(j); }
Scalar ScalarField::q_prime_power(long j) const { return q_prime_.pow(j); }

CycElem ScalarField::reduce(std::vector<Rational> raw) const {
    // canonical remainder modulo Phi_N using the precomputed power table
    if (raw.size() > 2 * deg_ - 1) {
        // fall back to long division for very high degrees
        Poly1 p{std::vector<Rational>(raw)};
        auto rem = divmod(p, phi_N_).second;
        raw.assign(deg_, Rational(0));
        for (size_t i = 0; i < static_cast<size_t>(rem.degree() + 1); ++i) raw[i] = rem.coeff(i);
        return CycElem{std::move(raw)};
    }
    std::vector<Rational> out(deg_, Rational(0));
    for (size_t i = 0; i < raw.size() && i < deg_; ++i) out[i] = raw[i];
    for (size_t i = deg_; i < raw.size(); ++i) {
        const Rational& c = raw[i];
        if (c == 0) continue;
        const auto& row = xpow_[i - deg_];
        for (size_t j = 0; j < deg_; ++j)
            if (row[j] != 0) out[j] += c * row[j];
    }
    return CycElem{std::move(out)};
}

CycElem ScalarField::cyc_mul(const CycElem& a, const CycElem& b) const {
    std::vector<Rational> raw(2 * deg_ - 1, Rational(0));
    for (size_t i = 0; i < deg_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < deg_; ++j)
            if (b.coeffs[j] != 0) raw[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return reduce(std::move(raw));
}

CycElem ScalarField::cyc_inv(const CycElem& a) const {
    Poly1 p{std::vector<Rational>(a.coeffs)};
    if (p.is_zero()) arith_error("division by zero");
    // extended Euclid: u*p + v*Phi_N = g, with g a nonzero constant
    // (Phi_N is irreducible over Q), so p^{-1} = u/g.
    Poly1 r0 = phi_N_, r1 = p;
    Poly1 u0 = Poly1(), u1 = Poly1::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly1 u2 = u0 - q * u1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    if (r0.degree() != 0) arith_error("element not invertible modulo Phi_N");
    Poly1 inv = u0 * (Rational(1) / r0.coeff(0));
    std::vector<Rational> raw(static_cast<size_t>(inv.degree() + 1));
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = inv.coeff(i);
    return reduce(std::move(raw));
}

Scalar ScalarField::add(const Scalar& a, const Scalar& b) const {
    if (mode_ == FieldMode::generic)
        return Scalar(shared_from_this(), add_reduced(a.rf(), b.rf()));
    CycElem r = a.cy();
    for (size_t i = 0; i < deg_; ++i) r.coeffs[i] += b.cy().coeffs[i];
    return Scalar(shared_from_this(), std::move(r));
}

Scalar ScalarField::sub(const Scalar& a, const Scalar& b) const {
    if (mode_ == FieldMode::generic) {
        RatFunc yneg = b.rf();
        yneg.num = -yneg.num;
        return Scalar(shared_from_this(), add_reduced(a.rf(), yneg));
    }
    CycElem r = a.cy();
    for (size_t i = 0; i < deg_; ++i) r.coeffs[i] -= b.cy().coeffs[i];
    return Scalar(shared_from_this(), std::move(r));
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
    if (mode_ == FieldMode::generic) {
        const auto &x = a.rf(), &y = b.rf();
        if (x.num.is_zero() || y.num.is_zero()) return zero_;
        return Scalar(shared_from_this(), mul_reduced(x, y));
    }
    return Scalar(shared_from_this(), cyc_mul(a.cy(), b.cy()));
}

Scalar ScalarField::div(const Scalar& a, const Scalar& b) const {
    if (b.is_zero()) arith_error("division by zero");
    if (mode_ == FieldMode::generic) {
        const auto& y = b.rf();
        if (a.is_zero()) return zero_;
        return Scalar(shared_from_this(), mul_reduced(a.rf(), RatFunc{y.den, y.num}));
    }
    return Scalar(shared_from_this(), cyc_mul(a.cy(), cyc_inv(b.cy())));
}

Scalar ScalarField::neg(const Scalar& a) const {
    if (mode_ == FieldMode::generic) {
        RatFunc r = a.rf();
        r.num = -r.num;
        return Scalar(shared_from_this(), std::move(r));
    }
    CycElem r = a.cy();
    for (auto& c : r.coeffs) c = -c;
    return Scalar(shared_from_this(), std::move(r));
}

Scalar ScalarField::inv(const Scalar& a) const {
    if (a.is_zero()) arith_error("inverse of zero");
    if (mode_ == FieldMode::generic) {
        const auto& x = a.rf();
        return Scalar(shared_from_this(), canonical_fraction(x.den, x.num));
    }
    return Scalar(shared_from_this(), cyc_inv(a.cy()));
}

std::string ScalarField::to_string(const Scalar& a) const {
    if (mode_ == FieldMode::generic) {
        const auto& x = a.rf();
        if (x.den == Poly1::constant(1)) return x.num.to_string("s");
        return "(" + x.num.to_string("s") + ")/(" + x.den.to_string("s") + ")";
    }
    Poly1 p{std::vector<Rational>(a.cy().coeffs)};
    return p.to_string("z");
}

}  // namespace qosp
