#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qosp/poly.hpp"

namespace qosp {

enum class FieldMode { generic, root };

class ScalarField;
using FieldPtr = std::shared_ptr<const ScalarField>;

/// Reduced fraction of polynomials in s = q^{1/2}. Canonical form:
/// gcd(num, den) = 1 and den monic; the zero element is 0/1.
struct RatFunc {
    Poly1 num;
    Poly1 den = Poly1::constant(1);
};

/// Element of Q(zeta_N) as the canonical remainder modulo Phi_N:
/// a rational-coefficient vector of length deg Phi_N.
struct CycElem {
    std::vector<Rational> coeffs;
};

/// An exact field element: a rational function in s (generic mode) or a
/// cyclotomic number (root mode). Values are immutable and tied to the
/// ScalarField that created them; mixing fields is a usage error.
class Scalar {
public:
    Scalar() = default;

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long n) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: generic mode a fraction of polynomials in `s`,
    /// root mode a polynomial in `z` (the distinguished generator zeta).
    std::string to_string() const;

private:
    friend class ScalarField;
    Scalar(FieldPtr f, RatFunc rf) : field_(std::move(f)), v_(std::move(rf)) {}
    Scalar(FieldPtr f, CycElem cy) : field_(std::move(f)), v_(std::move(cy)) {}

    const RatFunc& rf() const { return std::get<RatFunc>(v_); }
    const CycElem& cy() const { return std::get<CycElem>(v_); }

    FieldPtr field_;
    std::variant<RatFunc, CycElem> v_;
};

/// Coefficient domain shared by every algebraic object of one session.
///
/// Generic mode is the field of rational functions in the formal square
/// root s of q. Root mode is the cyclotomic field Q(zeta_N) with N = 4l;
/// the distinguished square root q^{1/2} is zeta^2, so q = zeta^4 is a
/// primitive l-th root of unity and square roots of powers of -q stay in
/// the field.
class ScalarField : public std::enable_shared_from_this<ScalarField> {
public:
    static FieldPtr make_generic();
    static FieldPtr make_root(int l);

    FieldMode mode() const { return mode_; }
    bool is_root() const { return mode_ == FieldMode::root; }
    int l() const { return l_; }          // root mode only (0 in generic mode)
    unsigned N() const { return N_; }     // 4l in root mode, 0 in generic mode
    const Poly1& modulus() const { return phi_N_; }  // Phi_N, root mode

    bool same_field(const ScalarField& other) const {
        return mode_ == other.mode_ && l_ == other.l_;
    }

    // element construction
    Scalar zero() const { return zero_; }
    Scalar one() const { return one_; }
    Scalar from_rational(const Rational& r) const;
    Scalar from_long(long n) const { return from_rational(rational_of(n)); }
    /// zeta^j reduced modulo Phi_N (any integer j); usage error in generic mode.
    Scalar root_power(long j) const;
    /// s in generic mode, zeta^2 in root mode.
    Scalar s_generator() const { return q_half_; }
    /// Generic mode: build a fraction num/den of polynomials in s.
    Scalar from_fraction(const Poly1& num, const Poly1& den) const;

    // distinguished constants
    const Scalar& q() const { return q_; }
    const Scalar& q_half() const { return q_half_; }
    const Scalar& q_inv() const { return q_inv_; }
    const Scalar& q_half_inv() const { return q_half_inv_; }
    const Scalar& q_prime() const { return q_prime_; }  // -q
    const Scalar& eta() const { return eta_; }  // (q^{1/2}+q^{-1/2})(q-q^{-1})

    Scalar q_power(long j) const;
    Scalar q_half_power(long j) const;
    Scalar q_prime_power(long j) const;

    // exact field arithmetic on payloads (used by Scalar operators)
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    std::string to_string(const Scalar& a) const;

private:
    ScalarField() = default;
    void init_constants();

    CycElem reduce(std::vector<Rational> raw) const;   // mod Phi_N
    CycElem cyc_mul(const CycElem& a, const CycElem& b) const;
    CycElem cyc_inv(const CycElem& a) const;

    FieldMode mode_ = FieldMode::generic;
    int l_ = 0;
    unsigned N_ = 0;
    Poly1 phi_N_;
    size_t deg_ = 0;                       // deg Phi_N
    std::vector<std::vector<Rational>> xpow_;  // x^(deg..2deg-2) mod Phi_N

    Scalar zero_, one_, q_, q_half_, q_inv_, q_half_inv_, q_prime_, eta_;
};

/// Both operands must live in the same field.
void require_same_field(const Scalar& a, const Scalar& b);

}  // namespace qosp
