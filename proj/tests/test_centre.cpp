#include <doctest.h>

#include "qosp/centre.hpp"

using namespace qosp;

TEST_CASE("Scasimir product formula") {
    auto generic = ScalarField::make_generic();
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(verify_scasimir_product(m, generic));
    }
    // specialization at a root of unity, up to m = L
    for (int l : {3, 4}) {
        auto field = ScalarField::make_root(l);
        const RootData rd = compute_root_data(l);
        for (int m = 1; m <= rd.L; ++m) {
            CAPTURE(l);
            CAPTURE(m);
            CHECK(verify_scasimir_product(m, field));
        }
    }
    CHECK_THROWS_AS((void)verify_scasimir_product(0, generic), Error);
}

TEST_CASE("E and F are central") {
    for (int l : {3, 4}) {
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        auto [E, F] = build_EF(field, rd);
        CHECK(E.terms().begin()->first == Monomial{0, rd.L, 0});
        CHECK(F.terms().begin()->first == Monomial{rd.L, 0, 0});
        CHECK(is_central(E));
        CHECK(is_central(F));
        // f^L e - e f^L = 0
        const auto e = generator(GeneratorName::e, field);
        CHECK((F * e - e * F).is_zero());
        CHECK(verify_EF_central(field, rd));
    }
}

TEST_CASE("half-power anticommutation for l twice odd") {
    const RootData rd = compute_root_data(6);
    auto field = ScalarField::make_root(6);
    CHECK(verify_half_powers(rd, field));

    // named instances: e^3 f + f e^3 = 0 and e^3 k + k e^3 = 0 at l = 6
    const auto e3 = power(generator(GeneratorName::e, field), 3);
    const auto f = generator(GeneratorName::f, field);
    const auto k = generator(GeneratorName::k, field);
    CHECK((e3 * f + f * e3).is_zero());
    CHECK((e3 * k + k * e3).is_zero());

    // e^5 S + S e^5 = 0 at l = 10 (l' = 5)
    const RootData rd10 = compute_root_data(10);
    auto field10 = ScalarField::make_root(10);
    const auto e5 = power(generator(GeneratorName::e, field10), 5);
    const auto S = scasimir(field10);
    CHECK((e5 * S + S * e5).is_zero());

    // precondition: l = 3 is not twice odd
    const RootData rd3 = compute_root_data(3);
    CHECK_THROWS_AS((void)verify_half_powers(rd3, ScalarField::make_root(3)), Error);
}

TEST_CASE("Scasimir relation between S and the l'-th powers") {
    for (int l : {3, 4, 6}) {
        CAPTURE(l);
        CHECK(verify_srel(compute_root_data(l), ScalarField::make_root(l)));
    }
}

TEST_CASE("restriction to the Cartan part determines the relation") {
    // dropping all monomials with e or f from both sides of the S-relation
    // leaves P_{l'}(S)|_{fe -> 0} = q^{l'/2} k^{l'} + (-1)^{l'} q^{-l'/2} k^{-l'}
    for (int l : {3, 4, 6}) {
        CAPTURE(l);
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        const int lp = rd.l_prime;
        const AlgebraElement lhs = eval_poly_at_element(cheb_p(lp), scasimir(field));
        AlgebraElement cartan_rhs =
            AlgebraElement::monomial_term(field, {0, 0, lp}, field->q_half_power(lp));
        cartan_rhs.add_term({0, 0, -lp}, field->from_long(lp % 2 == 0 ? 1 : -1) *
                                             field->q_half_power(-lp));
        CHECK(restrict_to_cartan(lhs) == cartan_rhs);
    }
}

TEST_CASE("centre relation for l not twice odd") {
    for (int l : {3, 4, 8}) {
        CAPTURE(l);
        CHECK(verify_centre_relation_even(compute_root_data(l), ScalarField::make_root(l)));
    }
    CHECK_THROWS_AS(
        (void)verify_centre_relation_even(compute_root_data(6), ScalarField::make_root(6)),
        Error);
}

TEST_CASE("full centre sweep for l = 3..12") {
    for (int l = 3; l <= 12; ++l) {
        CAPTURE(l);
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        CHECK(verify_EF_central(field, rd));
        CHECK(verify_srel(rd, field));
        if (rd.twice_odd) {
            for (const auto& r : verify_centre_relations_twice_odd(rd, field)) CHECK(r.pass);
            CHECK(verify_half_powers(rd, field));
        } else {
            CHECK(verify_centre_relation_even(rd, field));
        }
    }
}

TEST_CASE("centre relations for l twice odd") {
    for (int l : {6, 10}) {
        CAPTURE(l);
        const auto report =
            verify_centre_relations_twice_odd(compute_root_data(l), ScalarField::make_root(l));
        REQUIRE(report.size() == 3);
        for (const auto& r : report) {
            CAPTURE(r.relation);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS((void)verify_centre_relations_twice_odd(compute_root_data(5),
                                                            ScalarField::make_root(5)),
                    Error);
}

TEST_CASE("catalog of central elements") {
    {
        const RootData rd = compute_root_data(3);
        const CentreCatalog cat = centre_catalog(rd, ScalarField::make_root(3));
        CHECK(cat.elements.size() == 5);  // k^l, k^-l, C, E, F; no half twist for odd l
        CHECK_FALSE(cat.has_half_twist);
        for (const auto& entry : cat.elements) {
            CAPTURE(entry.name);
            CHECK(entry.central);
        }
    }
    {
        const RootData rd = compute_root_data(4);
        const CentreCatalog cat = centre_catalog(rd, ScalarField::make_root(4));
        CHECK(cat.has_half_twist);
        bool found = false;
        for (const auto& entry : cat.elements) {
            CHECK(entry.central);
            if (entry.name == "k^(l/2)*S") {
                found = true;
                // k^2 S is central although S itself is only scentral
                CHECK(is_central(entry.element));
            }
        }
        CHECK(found);
    }
    {
        const RootData rd = compute_root_data(5);
        const CentreCatalog cat = centre_catalog(rd, ScalarField::make_root(5));
        CHECK_FALSE(cat.has_half_twist);
        CHECK_FALSE(cat.has_half_powers);
    }
    {
        const RootData rd = compute_root_data(6);
        const CentreCatalog cat = centre_catalog(rd, ScalarField::make_root(6));
        CHECK(cat.has_half_twist);
        CHECK(cat.has_half_powers);
        for (const auto& entry : cat.elements) {
            CAPTURE(entry.name);
            CHECK(entry.central);
        }
    }
}

TEST_CASE("verification registry and corruption hook") {
    const RootData rd = compute_root_data(6);
    auto field = ScalarField::make_root(6);

    VerifyOptions opts;
    opts.what = "all";
    auto results = run_verifications(rd, field, opts);
    bool saw_rel2 = false;
    for (const auto& r : results) {
        CAPTURE(r.relation);
        CHECK(r.pass);
        saw_rel2 = saw_rel2 || r.relation == "rel2";
    }
    CHECK(saw_rel2);

    // corrupting one relation's sign must fail exactly that relation
    opts.corrupt = "srel";
    opts.what = "srel";
    auto corrupted = run_verifications(rd, field, opts);
    REQUIRE(corrupted.size() == 1);
    CHECK_FALSE(corrupted[0].pass);
    CHECK_FALSE(corrupted[0].lhs.is_zero());

    opts.corrupt = "rel3";
    opts.what = "centre";
    bool rel3_failed = false;
    for (const auto& r : run_verifications(rd, field, opts)) {
        if (r.relation == "rel3")
            rel3_failed = !r.pass;
        else
            CHECK(r.pass);
    }
    CHECK(rel3_failed);

    CHECK_THROWS_AS((void)run_verifications(rd, field, VerifyOptions{"bogus", 0, ""}), Error);
}
