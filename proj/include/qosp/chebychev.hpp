#pragma once

#include <string>
#include <vector>

#include "qosp/pbw.hpp"
#include "qosp/poly.hpp"

namespace qosp {

/// Gaussian rational a + b*i, enough ring structure for polynomial
/// identities that substitute i*x for x.
struct GaussRat {
    Rational re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}  // NOLINT: implicit for Poly<T>
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return {x.re - y.re, x.im - y.im};
    }
    GaussRat operator-() const { return {-re, -im}; }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussRat& x, const GaussRat& y) = default;

    static GaussRat i() { return {Rational(0), Rational(1)}; }
    /// i^n for any n >= 0
    static GaussRat i_pow(unsigned long n);
};

/// The three polynomial families:
///   P_0 = 2, P_1 = x,     P_m = x P_{m-1} + P_{m-2}   (odd/even parity (-1)^m)
///   Q_0 = 2, Q_1 = x,     Q_m = x Q_{m-1} - Q_{m-2}
///   R_0 = 1, R_1 = x + 1, R_m = x R_{m-1} - R_{m-2}
/// P_m is evaluated at the Scasimir S, Q_m and R_m at the Casimir C.
Poly1 cheb_p(unsigned m);
Poly1 cheb_q(unsigned m);
Poly1 cheb_r(unsigned m);

struct ChebIdentityResult {
    std::string identity;
    unsigned m;
    bool pass;
};

/// Exact checks of the four identity families for 0 <= m <= m_max:
///   P_{2m}(x) = Q_m(x^2+2)
///   P_m(ix) = i^m Q_m(x) and Q_m(ix) = i^m P_m(x)   (Gaussian rationals)
///   Q_m(x^2+2) = P_m(x)^2 + 2(-1)^{m+1}
///   P_{2m+1}(x) = x R_m(x^2+2)
std::vector<ChebIdentityResult> verify_cheb_identities(unsigned m_max);

/// Horner evaluation of a rational-coefficient polynomial at an algebra
/// element; the coefficients are mapped through the element's field.
AlgebraElement eval_poly_at_element(const Poly1& p, const AlgebraElement& x);

}  // namespace qosp
