#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qosp/error.hpp"

namespace qosp {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The trailing (highest-degree) coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
///
/// T must be an exact commutative ring with T(0), T(1), +, -, *, ==.
/// Division-based operations (divmod, gcd, monic) additionally require /.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly identity_var() {  // the polynomial x
        return Poly(std::vector<T>{T(0), T(1)});
    }
    /// c * x^n
    static Poly monomial(const T& c, size_t n) {
        std::vector<T> v(n + 1, T(0));
        v[n] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    const T& coeff(size_t i) const {
        static const T kZero = T(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const T& leading() const {
        if (c_.empty()) arith_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; requires a field coefficient type.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) arith_error("polynomial division by zero");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(), rem};
        std::vector<T> quot(a.degree() - b.degree() + 1, T(0));
        const T lead_inv = T(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const long shift = rem.degree() - b.degree();
            const T factor = rem.leading() * lead_inv;
            quot[shift] = factor;
            // rem -= factor * x^shift * b
            for (size_t i = 0; i < rem.c_.size(); ++i) {
                if (static_cast<long>(i) >= shift && i - shift < b.c_.size())
                    rem.c_[i] = rem.c_[i] - factor * b.c_[i - shift];
            }
            rem.trim();
        }
        return {Poly(std::move(quot)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        const T inv = T(1) / leading();
        std::vector<T> r = c_;
        for (auto& x : r) x = x * inv;
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    Poly pow(unsigned long n) const {
        Poly result = constant(T(1));
        Poly base = *this;
        while (n) {
            if (n & 1) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    /// Render with the given variable name, highest degree first,
    /// e.g. "1/2*z^3 - z + 2". The zero polynomial prints as "0".
    std::string to_string(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using Rational = mpq_class;
using Poly1 = Poly<Rational>;

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r);

template <>
std::string Poly<Rational>::to_string(const std::string& var) const;

/// Monic gcd of rational polynomials, computed with a primitive integer
/// remainder sequence (pseudo-division plus content stripping) so the
/// intermediate coefficients stay small.
Poly1 gcd(const Poly1& a, const Poly1& b);

/// N-th cyclotomic polynomial, monic with integer coefficients, obtained by
/// exact division of x^N - 1 by the product of Phi_d over proper divisors d.
Poly1 cyclotomic_polynomial(unsigned N);

}  // namespace qosp
