#include "qosp/poly.hpp"

#include <map>
#include <mutex>

namespace qosp {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

template <>
std::string Poly<Rational>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

Poly1 cyclotomic_rec(unsigned N, std::map<unsigned, Poly1>& cache) {
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // x^N - 1 divided by the product of Phi_d over proper divisors d of N
    Poly1 xn1 = Poly1::monomial(1, N) - Poly1::constant(1);
    Poly1 divisor = Poly1::constant(1);
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0) divisor = divisor * cyclotomic_rec(d, cache);
    auto [quot, rem] = divmod(xn1, divisor);
    if (!rem.is_zero()) arith_error("cyclotomic polynomial division not exact");
    cache[N] = quot;
    return quot;
}

}  // namespace

namespace {

/// integer polynomial, lowest degree first, made primitive (content 1)
std::vector<mpz_class> primitive_z(const Poly1& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                             c.get_den().get_mpz_t());
    std::vector<mpz_class> z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i)
        z[i] = p.coeff(i).get_num() * (den_lcm / p.coeff(i).get_den());
    mpz_class content = 0;
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : z) c /= content;
    return z;
}

void trim_z(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b, over Z
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        const mpz_class top = a.back();
        const size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        trim_z(a);
        if (a.empty()) break;
    }
    return a;
}

void make_primitive(std::vector<mpz_class>& p) {
    mpz_class content = 0;
    for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : p) c /= content;
}

}  // namespace

Poly1 gcd(const Poly1& a, const Poly1& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> r0 = primitive_z(a);
    std::vector<mpz_class> r1 = primitive_z(b);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        std::vector<mpz_class> r = pseudo_rem(r0, r1);
        make_primitive(r);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    std::vector<Rational> out(r0.size());
    for (size_t i = 0; i < r0.size(); ++i) out[i] = Rational(r0[i]);
    return Poly1(std::move(out)).monic();
}

Poly1 cyclotomic_polynomial(unsigned N) {
    if (N < 1) usage_error("cyclotomic_polynomial: N must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, Poly1> cache;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_rec(N, cache);
}

}  // namespace qosp
