#pragma once

#include <map>
#include <optional>
#include <string>

#include "qosp/scalars.hpp"

namespace qosp {

/// PBW basis word f^a e^b k^c. The Z_2 grade is (a + b) mod 2.
struct Monomial {
    int a = 0;   // power of f
    int b = 0;   // power of e
    long c = 0;  // power of k (negative allowed)

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Grade { even = 0, odd = 1, mixed };

/// An element of U_q(osp(1|2)) stored in PBW normal form: a finite map from
/// basis monomials to nonzero scalars. Elements are always normal-ordered,
/// so equality of elements is equality of term maps.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(FieldPtr field) : field_(std::move(field)) {}

    static AlgebraElement monomial_term(const FieldPtr& field, Monomial m, Scalar coeff);
    static AlgebraElement from_scalar(const FieldPtr& field, const Scalar& c);
    static AlgebraElement one(const FieldPtr& field);
    static AlgebraElement zero(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero if absent).
    Scalar coeff(const Monomial& m) const;

    /// Accumulate c on monomial m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
    AlgebraElement operator-() const;
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x);
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

    /// If the element is c * 1, return c; otherwise nothing.
    std::optional<Scalar> as_scalar() const;

private:
    FieldPtr field_;
    std::map<Monomial, Scalar> terms_;
};

enum class GeneratorName { e, f, k, k_inv };

AlgebraElement generator(GeneratorName name, const FieldPtr& field);

/// x^n by repeated squaring, n >= 0.
AlgebraElement power(const AlgebraElement& x, long n);

Grade grade(const AlgebraElement& x);

/// Graded bracket x y - (-1)^{d(x) d(y)} y x for homogeneous x, y.
AlgebraElement supercommutator(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);      // xy - yx
AlgebraElement anticommutator(const AlgebraElement& x, const AlgebraElement& y);  // xy + yx

/// The Scasimir S = q^{1/2} k - q^{-1/2} k^{-1} - eta f e.
AlgebraElement scasimir(const FieldPtr& field);

/// The Casimir C = q k^2 + q^{-1} k^{-2}
///   + (q-q^{-1})^2 (q k + q^{-1} k^{-1}) f e - (q-q^{-1})^2 (q+2+q^{-1}) f^2 e^2.
AlgebraElement casimir(const FieldPtr& field);

/// Scale automorphism (e, f, k, k^{-1}) -> (a e, a^{-1} f, k, k^{-1}), a != 0.
AlgebraElement scale_automorphism(const AlgebraElement& x, const Scalar& a);

/// Signed permutation automorphism (e, f, k, k^{-1}) -> (-f, e, k^{-1}, k).
AlgebraElement signed_permutation_automorphism(const AlgebraElement& x);

/// x commutes with e, f and k (checking against generators suffices).
bool is_central(const AlgebraElement& x);

/// x anticommutes with e and f and commutes with k.
bool is_scentral(const AlgebraElement& x);

/// Drop every monomial with a + b > 0 (the quotient where e = f = 0, in
/// which only Cartan generators survive).
AlgebraElement restrict_to_cartan(const AlgebraElement& x);

/// Canonical text form, parseable by the expression language for elements
/// with nonnegative e/f powers (k powers may be negative).
std::string to_text(const AlgebraElement& x);

}  // namespace qosp
