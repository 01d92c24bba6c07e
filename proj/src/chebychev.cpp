#include "qosp/chebychev.hpp"

namespace qosp {

GaussRat GaussRat::i_pow(unsigned long n) {
    switch (n % 4) {
        case 0: return GaussRat(1);
        case 1: return i();
        case 2: return GaussRat(-1);
        default: return -i();
    }
}

namespace {

Poly1 cheb_family(unsigned m, const Poly1& p0, const Poly1& p1, int sign) {
    if (m == 0) return p0;
    Poly1 prev = p0, cur = p1;
    const Poly1 x = Poly1::identity_var();
    for (unsigned i = 2; i <= m; ++i) {
        Poly1 next = x * cur + (sign > 0 ? prev : -prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly<GaussRat> to_gauss(const Poly1& p) {
    std::vector<GaussRat> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = GaussRat{p.coeff(i), Rational(0)};
    return Poly<GaussRat>(std::move(c));
}

/// p(i*x) over the Gaussian rationals.
Poly<GaussRat> substitute_ix(const Poly1& p) {
    std::vector<GaussRat> c(p.coeffs().size());
    for (size_t j = 0; j < c.size(); ++j)
        c[j] = GaussRat{p.coeff(j), Rational(0)} * GaussRat::i_pow(j);
    return Poly<GaussRat>(std::move(c));
}

}  // namespace

Poly1 cheb_p(unsigned m) {
    return cheb_family(m, Poly1::constant(2), Poly1::identity_var(), +1);
}

Poly1 cheb_q(unsigned m) {
    return cheb_family(m, Poly1::constant(2), Poly1::identity_var(), -1);
}

Poly1 cheb_r(unsigned m) {
    return cheb_family(m, Poly1::constant(1),
                       Poly1::identity_var() + Poly1::constant(1), -1);
}

std::vector<ChebIdentityResult> verify_cheb_identities(unsigned m_max) {
    std::vector<ChebIdentityResult> out;
    const Poly1 shift = Poly1::monomial(1, 2) + Poly1::constant(2);  // x^2 + 2
    for (unsigned m = 0; m <= m_max; ++m) {
        const Poly1 p = cheb_p(m), q = cheb_q(m), r = cheb_r(m);

        out.push_back({"P_{2m} = Q_m(C)", m, cheb_p(2 * m) == q.compose(shift)});

        const GaussRat im = GaussRat::i_pow(m);
        const bool gauss_ok = substitute_ix(p) == to_gauss(q) * im &&
                              substitute_ix(q) == to_gauss(p) * im;
        out.push_back({"P_m(iS) = i^m Q_m(S)", m, gauss_ok});

        const Poly1 two_sign = Poly1::constant(m % 2 == 0 ? -2 : 2);  // 2(-1)^{m+1}
        out.push_back({"Q_m(C) = P_m(S)^2 + 2(-1)^{m+1}", m,
                       q.compose(shift) == p * p + two_sign});

        out.push_back({"P_{2m+1} = S R_m(C)", m,
                       cheb_p(2 * m + 1) == Poly1::identity_var() * r.compose(shift)});
    }
    return out;
}

AlgebraElement eval_poly_at_element(const Poly1& p, const AlgebraElement& x) {
    const FieldPtr& field = x.field();
    AlgebraElement acc = AlgebraElement::zero(field);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x;
        acc.add_term({0, 0, 0}, field->from_rational(p.coeff(i)));
    }
    return acc;
}

}  // namespace qosp
