#include "qosp/pbw.hpp"

#include <mutex>
#include <optional>
#include <tuple>

namespace qosp {

namespace {

void require_same_field(const AlgebraElement& x, const AlgebraElement& y) {
    if (!x.field() || !y.field() || !x.field()->same_field(*y.field()))
        usage_error("algebra elements belong to different scalar fields");
}

/// Normal-ordered expansion of e^b f^a, the only nontrivial reordering.
/// One e moves left past f^a in a single closed-form step:
///   e f^a = (-1)^a f^a e + (-1)^{a-1} f^{a-1} w_a,
/// where w_a = [ (sum_{n<a} q'^{-n}) k - (sum_{n<a} q'^n) k^{-1} ] / (q - q^{-1}).
/// Results are memoized per field; fields are interned per (mode, l), so the
/// cache key is the field pointer.
class NormalOrderTable {
public:
    AlgebraElement get(const FieldPtr& field, int b, int a) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find({field.get(), b, a});
            if (it != memo_.end()) return it->second;
        }
        AlgebraElement result = compute(field, b, a);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(Key{field.get(), b, a}, result);
        return result;
    }

private:
    using Key = std::tuple<const ScalarField*, int, int>;

    AlgebraElement compute(const FieldPtr& field, int b, int a) {
        if (b == 0) return AlgebraElement::monomial_term(field, {a, 0, 0}, field->one());
        if (a == 0) return AlgebraElement::monomial_term(field, {0, b, 0}, field->one());

        const Scalar denom = field->q() - field->q_inv();
        Scalar geo = field->zero(), geo_inv = field->zero();  // sums of q'^n, q'^{-n}
        for (int n = 0; n < a; ++n) {
            geo = geo + field->q_prime_power(n);
            geo_inv = geo_inv + field->q_prime_power(-n);
        }
        const Scalar w_plus = geo_inv / denom;    // coefficient of k in w_a
        const Scalar w_minus = -(geo / denom);    // coefficient of k^{-1} in w_a

        const AlgebraElement head = get(field, b - 1, a);
        const AlgebraElement head_lower = get(field, b - 1, a - 1);
        const int sign = (a % 2 == 0) ? 1 : -1;

        AlgebraElement out(field);
        // (-1)^a * head * e : k^gamma e = q^gamma e k^gamma
        for (const auto& [m, c] : head.terms()) {
            Scalar nc = c * field->q_power(m.c);
            if (sign < 0) nc = -nc;
            out.add_term({m.a, m.b + 1, m.c}, nc);
        }
        // (-1)^{a-1} * head_lower * w_a : w_a is a Laurent polynomial in k
        for (const auto& [m, c] : head_lower.terms()) {
            Scalar cp = c * w_plus;
            Scalar cm = c * w_minus;
            if (sign > 0) {  // (-1)^{a-1} = -1 when a even
                cp = -cp;
                cm = -cm;
            }
            out.add_term({m.a, m.b, m.c + 1}, cp);
            out.add_term({m.a, m.b, m.c - 1}, cm);
        }
        return out;
    }

    std::mutex mu_;
    std::map<Key, AlgebraElement> memo_;
};

NormalOrderTable& normal_order_table() {
    static NormalOrderTable table;
    return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraElement basics
// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::monomial_term(const FieldPtr& field, Monomial m, Scalar coeff) {
    if (m.a < 0 || m.b < 0) usage_error("negative powers of e or f are not representable");
    AlgebraElement x(field);
    x.add_term(m, coeff);
    return x;
}

AlgebraElement AlgebraElement::from_scalar(const FieldPtr& field, const Scalar& c) {
    return monomial_term(field, {0, 0, 0}, c);
}

AlgebraElement AlgebraElement::one(const FieldPtr& field) {
    return from_scalar(field, field->one());
}

AlgebraElement AlgebraElement::zero(const FieldPtr& field) { return AlgebraElement(field); }

Scalar AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_field(x, y);
    AlgebraElement out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_field(x, y);
    AlgebraElement out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(field_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
    if (!x.field() || !c.field() || !x.field()->same_field(*c.field()))
        usage_error("scalar and element belong to different fields");
    AlgebraElement out(x.field());
    if (c.is_zero()) return out;
    for (const auto& [m, t] : x.terms_) out.add_term(m, c * t);
    return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_field(x, y);
    return x.terms_ == y.terms_;
}

std::optional<Scalar> AlgebraElement::as_scalar() const {
    if (terms_.empty()) return field_->zero();
    if (terms_.size() == 1) {
        const auto& [m, c] = *terms_.begin();
        if (m == Monomial{0, 0, 0}) return c;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Multiplication: normal ordering in the PBW basis
// ---------------------------------------------------------------------------
//
// (f^{a1} e^{b1} k^{c1}) (f^{a2} e^{b2} k^{c2})
//   = q^{(b2 - a2) c1} f^{a1} (e^{b1} f^{a2}) e^{b2} k^{c1 + c2},
// using k^c f = q^{-c} f k^c and k^c e = q^c e k^c; the inner factor is the
// memoized normal ordering of e^{b1} f^{a2}.

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_field(x, y);
    const FieldPtr& field = x.field();
    AlgebraElement out(field);
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Scalar base = cx * cy;
            if (mx.c != 0 && my.b != my.a)
                base = base * field->q_power(static_cast<long>(my.b - my.a) * mx.c);
            const AlgebraElement inner = normal_order_table().get(field, mx.b, my.a);
            for (const auto& [mi, ci] : inner.terms()) {
                Scalar coeff = base * ci;
                if (mi.c != 0 && my.b != 0) coeff = coeff * field->q_power(mi.c * my.b);
                out.add_term({mx.a + mi.a, mi.b + my.b, mi.c + mx.c + my.c}, coeff);
            }
        }
    }
    return out;
}

AlgebraElement power(const AlgebraElement& x, long n) {
    if (n < 0) usage_error("element powers require a nonnegative exponent");
    AlgebraElement result = AlgebraElement::one(x.field());
    AlgebraElement base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Generators and distinguished elements
// ---------------------------------------------------------------------------

AlgebraElement generator(GeneratorName name, const FieldPtr& field) {
    switch (name) {
        case GeneratorName::e: return AlgebraElement::monomial_term(field, {0, 1, 0}, field->one());
        case GeneratorName::f: return AlgebraElement::monomial_term(field, {1, 0, 0}, field->one());
        case GeneratorName::k: return AlgebraElement::monomial_term(field, {0, 0, 1}, field->one());
        case GeneratorName::k_inv:
            return AlgebraElement::monomial_term(field, {0, 0, -1}, field->one());
    }
    usage_error("unknown generator");
}

AlgebraElement scasimir(const FieldPtr& field) {
    AlgebraElement s(field);
    s.add_term({0, 0, 1}, field->q_half());
    s.add_term({0, 0, -1}, -field->q_half_inv());
    s.add_term({1, 1, 0}, -field->eta());
    return s;
}

AlgebraElement casimir(const FieldPtr& field) {
    const Scalar d = field->q() - field->q_inv();
    const Scalar d2 = d * d;
    AlgebraElement c(field);
    c.add_term({0, 0, 2}, field->q());
    c.add_term({0, 0, -2}, field->q_inv());
    c.add_term({1, 1, 1}, d2 * field->q());
    c.add_term({1, 1, -1}, d2 * field->q_inv());
    const Scalar trace = field->q() + field->from_long(2) + field->q_inv();
    c.add_term({2, 2, 0}, -(d2 * trace));
    return c;
}

Grade grade(const AlgebraElement& x) {
    bool saw_even = false, saw_odd = false;
    for (const auto& [m, c] : x.terms()) {
        if ((m.a + m.b) % 2 == 0)
            saw_even = true;
        else
            saw_odd = true;
    }
    if (saw_even && saw_odd) return Grade::mixed;
    return saw_odd ? Grade::odd : Grade::even;  // zero counts as even
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return x * y - y * x;
}

AlgebraElement anticommutator(const AlgebraElement& x, const AlgebraElement& y) {
    return x * y + y * x;
}

AlgebraElement supercommutator(const AlgebraElement& x, const AlgebraElement& y) {
    const Grade gx = grade(x), gy = grade(y);
    if (gx == Grade::mixed || gy == Grade::mixed)
        usage_error("supercommutator requires homogeneous elements");
    if (gx == Grade::odd && gy == Grade::odd) return anticommutator(x, y);
    return commutator(x, y);
}

AlgebraElement scale_automorphism(const AlgebraElement& x, const Scalar& a) {
    if (a.is_zero()) usage_error("scale automorphism requires a != 0");
    AlgebraElement out(x.field());
    for (const auto& [m, c] : x.terms()) out.add_term(m, c * a.pow(m.b - m.a));
    return out;
}

AlgebraElement signed_permutation_automorphism(const AlgebraElement& x) {
    const FieldPtr& field = x.field();
    AlgebraElement out(field);
    for (const auto& [m, c] : x.terms()) {
        // f^a e^b k^c  |->  e^a (-f)^b k^{-c}, re-expanded in PBW order
        AlgebraElement img = normal_order_table().get(field, m.a, m.b);
        Scalar coeff = (m.b % 2 == 1) ? -c : c;
        for (const auto& [mi, ci] : img.terms()) {
            // append k^{-c}: k powers commute, no scalar factor
            out.add_term({mi.a, mi.b, mi.c - m.c}, coeff * ci);
        }
    }
    return out;
}

bool is_central(const AlgebraElement& x) {
    const FieldPtr& field = x.field();
    for (auto g : {GeneratorName::e, GeneratorName::f, GeneratorName::k}) {
        const AlgebraElement y = generator(g, field);
        if (!commutator(x, y).is_zero()) return false;
    }
    return true;
}

bool is_scentral(const AlgebraElement& x) {
    const FieldPtr& field = x.field();
    if (!anticommutator(x, generator(GeneratorName::e, field)).is_zero()) return false;
    if (!anticommutator(x, generator(GeneratorName::f, field)).is_zero()) return false;
    return commutator(x, generator(GeneratorName::k, field)).is_zero();
}

AlgebraElement restrict_to_cartan(const AlgebraElement& x) {
    AlgebraElement out(x.field());
    for (const auto& [m, c] : x.terms())
        if (m.a == 0 && m.b == 0) out.add_term(m, c);
    return out;
}

std::string to_text(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    // wrap only when the coefficient has additive structure at paren depth 0
    // ("a + b", "a - b"); fractions "(n)/(d)" bind like multiplication and
    // need no extra parentheses inside a product
    auto needs_parens = [](const std::string& s) {
        int depth = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            const char ch = s[i];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && (ch == '+' || (ch == '-' && i > 0))) return true;
        }
        return false;
    };
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        std::string cs = c.to_string();
        bool neg_stripped = false;
        if (!needs_parens(cs) && !cs.empty() && cs[0] == '-') {
            cs = cs.substr(1);
            neg_stripped = true;
        }
        std::string body;
        const bool has_gen = (m.a != 0 || m.b != 0 || m.c != 0);
        if (!has_gen || cs != "1") {
            body = needs_parens(cs) ? "(" + cs + ")" : cs;
        }
        auto append_pow = [&body](char sym, long n) {
            if (n == 0) return;
            if (!body.empty()) body += "*";
            body += sym;
            if (n != 1) body += "^" + std::to_string(n);
        };
        append_pow('f', m.a);
        append_pow('e', m.b);
        append_pow('k', m.c);
        if (out.empty())
            out = neg_stripped ? "-" + body : body;
        else
            out += (neg_stripped ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace qosp
