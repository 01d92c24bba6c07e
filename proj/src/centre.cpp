#include "qosp/centre.hpp"

namespace qosp {

namespace {

void require_root(const FieldPtr& field) {
    if (!field->is_root()) usage_error("operation requires a root-of-unity field");
}

void require_match(const RootData& root, const FieldPtr& field) {
    require_root(field);
    if (root.l != field->l()) usage_error("RootData and field disagree on l");
}

AlgebraElement k_power(const FieldPtr& field, long c) {
    return AlgebraElement::monomial_term(field, {0, 0, c}, field->one());
}

AlgebraElement fm_em(const FieldPtr& field, int m, const Scalar& coeff) {
    return AlgebraElement::monomial_term(field, {m, m, 0}, coeff);
}

AlgebraElement scalar_elem(const FieldPtr& field, const Scalar& c) {
    return AlgebraElement::from_scalar(field, c);
}

/// LHS of the Scasimir product formula for given m.
AlgebraElement scasimir_product_lhs(int m, const FieldPtr& field) {
    AlgebraElement prod = AlgebraElement::one(field);
    const AlgebraElement s = scasimir(field);
    for (int n = 0; n < m; ++n) {
        AlgebraElement factor = s;
        factor.add_term({0, 0, 1}, -(field->q_prime_power(n) * field->q_half()));
        factor.add_term({0, 0, -1}, field->q_prime_power(-n) * field->q_half_inv());
        prod = prod * factor;
    }
    return prod;
}

Scalar scasm_rhs_coeff(int m, const FieldPtr& field, bool corrupt) {
    Scalar c = field->from_long(epsilon(m)) * (-field->eta()).pow(m);
    return corrupt ? -c : c;
}

}  // namespace

bool verify_scasimir_product(int m, const FieldPtr& field) {
    if (m < 1) usage_error("scasimir product requires m >= 1");
    return scasimir_product_lhs(m, field) == fm_em(field, m, scasm_rhs_coeff(m, field, false));
}

std::pair<AlgebraElement, AlgebraElement> build_EF(const FieldPtr& field, const RootData& root) {
    require_match(root, field);
    AlgebraElement E = AlgebraElement::monomial_term(field, {0, root.L, 0}, field->one());
    AlgebraElement F = AlgebraElement::monomial_term(field, {root.L, 0, 0}, field->one());
    return {E, F};
}

bool verify_EF_central(const FieldPtr& field, const RootData& root) {
    auto [E, F] = build_EF(field, root);
    const AlgebraElement e = generator(GeneratorName::e, field);
    // f^L e - e f^L = 0, plus full centrality of both powers
    return commutator(F, e).is_zero() && is_central(E) && is_central(F);
}

bool verify_half_powers(const RootData& root, const FieldPtr& field) {
    require_match(root, field);
    if (!root.twice_odd) usage_error("half-power relations require l twice an odd integer");
    const int h = root.l_prime;  // = L/2, odd
    const AlgebraElement eh = power(generator(GeneratorName::e, field), h);
    const AlgebraElement fh = power(generator(GeneratorName::f, field), h);
    const AlgebraElement S = scasimir(field);
    const AlgebraElement k = generator(GeneratorName::k, field);
    const AlgebraElement ki = generator(GeneratorName::k_inv, field);
    const AlgebraElement e = generator(GeneratorName::e, field);
    const AlgebraElement f = generator(GeneratorName::f, field);

    for (const auto* x : {&eh, &fh}) {
        if (!anticommutator(*x, k).is_zero()) return false;
        if (!anticommutator(*x, ki).is_zero()) return false;
        if (!anticommutator(*x, S).is_zero()) return false;
    }
    if (!anticommutator(eh, f).is_zero()) return false;
    if (!anticommutator(fh, e).is_zero()) return false;

    const AlgebraElement central =
        AlgebraElement::monomial_term(field, {h, h, h}, field->one());
    return is_central(central);
}

bool verify_srel(const RootData& root, const FieldPtr& field) {
    require_match(root, field);
    const int lp = root.l_prime;
    const AlgebraElement lhs = eval_poly_at_element(cheb_p(lp), scasimir(field));
    AlgebraElement rhs = AlgebraElement::monomial_term(field, {0, 0, lp}, field->q_half_power(lp));
    const Scalar sign = field->from_long(lp % 2 == 0 ? 1 : -1);
    rhs.add_term({0, 0, -lp}, sign * field->q_half_power(-lp));
    rhs.add_term({lp, lp, 0}, scasm_rhs_coeff(lp, field, false));
    return lhs == rhs;
}

bool verify_centre_relation_even(const RootData& root, const FieldPtr& field) {
    require_match(root, field);
    if (root.twice_odd) usage_error("even-case centre relation requires l not twice odd");
    const int L = root.L;
    const Scalar sign = field->from_long((L / 2) % 2 == 0 ? 1 : -1);
    const AlgebraElement lhs = sign * eval_poly_at_element(cheb_q(L / 2), casimir(field));
    AlgebraElement rhs = k_power(field, L);
    rhs = -rhs;
    rhs.add_term({0, 0, -L}, -field->one());
    rhs.add_term({L, L, 0}, field->eta().pow(L));
    return lhs == rhs;
}

namespace {

/// rel2, rel3, rel4 for l twice odd; `corrupt` (one of "rel2","rel3","rel4")
/// flips the sign of the k^L term of that relation's right side.
std::vector<RelationResult> twice_odd_relations(const RootData& root, const FieldPtr& field,
                                                const std::string& corrupt) {
    require_match(root, field);
    if (!root.twice_odd) usage_error("rel2..rel4 require l twice an odd integer");
    const int L = root.L;
    const int h = L / 2;  // odd
    const Scalar sign = field->from_long(((L + 2) / 4) % 2 == 0 ? 1 : -1);  // (-1)^{(L+2)/4}
    const Scalar q_L4 = field->q_half_power(h);   // q^{L/4} via the fixed square root
    const Scalar eta_h = field->eta().pow(h);
    const AlgebraElement S = scasimir(field);
    const AlgebraElement C = casimir(field);
    const AlgebraElement R = eval_poly_at_element(cheb_r((L - 2) / 4), C);
    const AlgebraElement Q = eval_poly_at_element(cheb_q(h), C);
    const AlgebraElement k_h = k_power(field, h);
    const AlgebraElement k_mh = k_power(field, -h);

    std::vector<RelationResult> out;

    {  // rel2: S k^{L/2} R = q^{L/4} k^L - q^{-L/4} + sign eta^{L/2} f^{L/2} e^{L/2} k^{L/2}
        const Scalar lead = corrupt == "rel2" ? -q_L4 : q_L4;
        AlgebraElement rhs = AlgebraElement::monomial_term(field, {0, 0, L}, lead);
        rhs.add_term({0, 0, 0}, -q_L4.inverse());
        rhs.add_term({h, h, h}, sign * eta_h);
        out.push_back({"rel2", false, S * k_h * R, rhs});
    }
    {  // rel3: Q = -k^L - k^{-L} + 2 sign q^{L/4} eta^{L/2} f^{L/2} e^{L/2}(k^{L/2}+k^{-L/2}) - eta^L f^L e^L
        const Scalar lead = corrupt == "rel3" ? field->one() : -field->one();
        AlgebraElement rhs = AlgebraElement::monomial_term(field, {0, 0, L}, lead);
        rhs.add_term({0, 0, -L}, -field->one());
        const Scalar mid = field->from_long(2) * sign * q_L4 * eta_h;
        rhs = rhs + mid * (fm_em(field, h, field->one()) * (k_h + k_mh));
        rhs.add_term({L, L, 0}, -field->eta().pow(L));
        out.push_back({"rel3", false, Q, rhs});
    }
    {  // rel4: Q = k^L + k^{-L} + 4 + 2 q^{L/4} S (k^{L/2}+k^{-L/2}) R - eta^L f^L e^L
        const Scalar lead = corrupt == "rel4" ? -field->one() : field->one();
        AlgebraElement rhs = AlgebraElement::monomial_term(field, {0, 0, L}, lead);
        rhs.add_term({0, 0, -L}, field->one());
        rhs.add_term({0, 0, 0}, field->from_long(4));
        rhs = rhs + (field->from_long(2) * q_L4) * (S * (k_h + k_mh) * R);
        rhs.add_term({L, L, 0}, -field->eta().pow(L));
        out.push_back({"rel4", false, Q, rhs});
    }
    for (auto& r : out) r.pass = (r.lhs == r.rhs);
    return out;
}

}  // namespace

std::vector<RelationResult> verify_centre_relations_twice_odd(const RootData& root,
                                                              const FieldPtr& field) {
    return twice_odd_relations(root, field, "");
}

CentreCatalog centre_catalog(const RootData& root, const FieldPtr& field) {
    require_match(root, field);
    CentreCatalog cat;
    cat.root = root;
    auto add = [&](const std::string& name, AlgebraElement x) {
        CatalogEntry entry{name, std::move(x), false};
        entry.central = is_central(entry.element);
        cat.elements.push_back(std::move(entry));
    };
    add("k^l", k_power(field, root.l));
    add("k^-l", k_power(field, -root.l));
    add("C", casimir(field));
    auto [E, F] = build_EF(field, root);
    add("E", E);
    add("F", F);
    if (root.l % 2 == 0) {
        cat.has_half_twist = true;
        add("k^(l/2)*S", k_power(field, root.l / 2) * scasimir(field));
    }
    if (root.twice_odd) {
        cat.has_half_powers = true;
        const int h = root.l_prime;
        add("e^(L/2)*f^(L/2)*k^(L/2)",
            AlgebraElement::monomial_term(field, {h, h, h}, field->one()));
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Relation registry for the CLI
// ---------------------------------------------------------------------------

namespace {

RelationResult make_result(std::string name, AlgebraElement lhs, AlgebraElement rhs) {
    RelationResult r{std::move(name), false, std::move(lhs), std::move(rhs)};
    r.pass = (r.lhs == r.rhs);
    return r;
}

}  // namespace

std::vector<RelationResult> run_verifications(const RootData& root, const FieldPtr& field,
                                              const VerifyOptions& opts) {
    require_match(root, field);
    if (opts.what != "all" && opts.what != "scasm" && opts.what != "srel" &&
        opts.what != "centre")
        usage_error("unknown verification set: " + opts.what);
    const bool all = opts.what == "all";
    std::vector<RelationResult> out;
    const AlgebraElement S = scasimir(field);
    const AlgebraElement zero = AlgebraElement::zero(field);

    if (all) {
        const AlgebraElement e = generator(GeneratorName::e, field);
        const AlgebraElement f = generator(GeneratorName::f, field);
        const AlgebraElement k = generator(GeneratorName::k, field);
        const bool flip = opts.corrupt == "scasimir_scentral";
        // corrupted variant tests Se - eS instead of Se + eS
        out.push_back(make_result("scasimir_scentral",
                                  flip ? commutator(S, e) : anticommutator(S, e), zero));
        out.push_back(make_result("scasimir_anticommute_f", anticommutator(S, f), zero));
        out.push_back(make_result("scasimir_commute_k", commutator(S, k), zero));
        const Scalar two = field->from_long(opts.corrupt == "scasimir_square" ? -2 : 2);
        out.push_back(make_result("scasimir_square", S * S + scalar_elem(field, two),
                                  casimir(field)));
    }
    if (all || opts.what == "scasm") {
        const int m_max = opts.max_m > 0 ? opts.max_m : root.L;
        for (int m = 1; m <= m_max; ++m) {
            const std::string name = "scasm_m" + std::to_string(m);
            out.push_back(make_result(name, scasimir_product_lhs(m, field),
                                      fm_em(field, m, scasm_rhs_coeff(m, field,
                                                                      opts.corrupt == name))));
        }
    }
    if (all || opts.what == "srel") {
        const int lp = root.l_prime;
        AlgebraElement rhs =
            AlgebraElement::monomial_term(field, {0, 0, lp},
                                          opts.corrupt == "srel" ? -field->q_half_power(lp)
                                                                 : field->q_half_power(lp));
        const Scalar sign = field->from_long(lp % 2 == 0 ? 1 : -1);
        rhs.add_term({0, 0, -lp}, sign * field->q_half_power(-lp));
        rhs.add_term({lp, lp, 0}, scasm_rhs_coeff(lp, field, false));
        out.push_back(make_result("srel", eval_poly_at_element(cheb_p(lp), S), rhs));
    }
    if (all || opts.what == "centre") {
        auto [E, F] = build_EF(field, root);
        const AlgebraElement e = generator(GeneratorName::e, field);
        const AlgebraElement f = generator(GeneratorName::f, field);
        const AlgebraElement k = generator(GeneratorName::k, field);
        const bool flip_e = opts.corrupt == "E_central";
        const bool flip_f = opts.corrupt == "F_central";
        out.push_back(make_result("E_central",
                                  (flip_e ? anticommutator(E, e) : commutator(E, e)) +
                                      commutator(E, f) + commutator(E, k),
                                  zero));
        out.push_back(make_result("F_central",
                                  (flip_f ? anticommutator(F, f) : commutator(F, f)) +
                                      commutator(F, e) + commutator(F, k),
                                  zero));

        if (root.twice_odd) {
            for (auto& r : twice_odd_relations(root, field, opts.corrupt)) out.push_back(r);
            const int h = root.l_prime;
            const AlgebraElement eh = power(e, h);
            const AlgebraElement fh = power(f, h);
            const bool flip_h = opts.corrupt == "half_powers";
            AlgebraElement acc =
                (flip_h ? commutator(eh, k) : anticommutator(eh, k)) + anticommutator(eh, f) +
                anticommutator(eh, S) + anticommutator(fh, k) + anticommutator(fh, e) +
                anticommutator(fh, S);
            out.push_back(make_result("half_powers", acc, zero));
            const AlgebraElement central =
                AlgebraElement::monomial_term(field, {h, h, h}, field->one());
            out.push_back(make_result("half_power_product_central",
                                      commutator(central, e) + commutator(central, f) +
                                          commutator(central, k),
                                      zero));
        } else {
            const int L = root.L;
            const Scalar sign = field->from_long((L / 2) % 2 == 0 ? 1 : -1);
            AlgebraElement rhs = AlgebraElement::monomial_term(
                field, {0, 0, L},
                opts.corrupt == "centre_even" ? field->one() : -field->one());
            rhs.add_term({0, 0, -L}, -field->one());
            rhs.add_term({L, L, 0}, field->eta().pow(L));
            out.push_back(make_result(
                "centre_even", sign * eval_poly_at_element(cheb_q(L / 2), casimir(field)), rhs));
        }

        for (const auto& entry : centre_catalog(root, field).elements) {
            RelationResult r;
            r.relation = "catalog_" + entry.name;
            const AlgebraElement& x = entry.element;
            const bool flip = opts.corrupt == r.relation;
            r.lhs = (flip ? anticommutator(x, generator(GeneratorName::e, field))
                          : commutator(x, generator(GeneratorName::e, field))) +
                    commutator(x, generator(GeneratorName::f, field)) +
                    commutator(x, generator(GeneratorName::k, field));
            r.rhs = zero;
            r.pass = (r.lhs == r.rhs);
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace qosp
