// Acceptance suite: end-to-end checks with per-criterion wall-clock limits.
// Prints one line per criterion; the exit code is the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qosp/centre.hpp"
#include "qosp/chebychev.hpp"
#include "qosp/exprparse.hpp"
#include "qosp/reps.hpp"
#include "test_helpers.hpp"

using namespace qosp;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& log, const std::string& what) {
    if (!cond) log += (log.empty() ? "" : "; ") + what;
    return cond;
}

// ---------------------------------------------------------------------------
// 1. PBW engine associativity
// ---------------------------------------------------------------------------
bool run_associativity(std::string& log) {
    bool ok = true;
    for (auto field : {ScalarField::make_generic(), ScalarField::make_root(5)}) {
        testing::ElementSampler sampler(field, 20240501);
        for (int i = 0; i < 100; ++i) {
            const AlgebraElement x = sampler.random_element(3, 2, 3);
            const AlgebraElement y = sampler.random_element(3, 2, 3);
            const AlgebraElement z = sampler.random_element(3, 2, 3);
            ok &= check((x * y) * z == x * (y * z), log,
                        "associativity failed at triple " + std::to_string(i));
            if (!ok) return false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Scasimir suite (generic, exact)
// ---------------------------------------------------------------------------
bool run_scasimir_suite(std::string& log) {
    auto F = ScalarField::make_generic();
    const auto S = scasimir(F);
    const auto e = generator(GeneratorName::e, F);
    const auto f = generator(GeneratorName::f, F);
    const auto k = generator(GeneratorName::k, F);
    bool ok = true;
    ok &= check((S * e + e * S).is_zero(), log, "Se + eS != 0");
    ok &= check((S * f + f * S).is_zero(), log, "Sf + fS != 0");
    ok &= check((S * k - k * S).is_zero(), log, "Sk - kS != 0");
    ok &= check(S * S + AlgebraElement::from_scalar(F, F->from_long(2)) == casimir(F), log,
                "S^2 + 2 != C");
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Power commutation identity and its signed-permutation mirror
// ---------------------------------------------------------------------------
bool run_comemf(std::string& log) {
    auto F = ScalarField::make_generic();
    const auto e = generator(GeneratorName::e, F);
    const auto f = generator(GeneratorName::f, F);
    const Scalar d = F->q() - F->q_inv();
    bool ok = true;
    for (int m = 1; m <= 10; ++m) {
        const Scalar cp =
            (F->q_prime_power(-m) - F->one()) / (F->q_prime_power(-1) - F->one());
        const Scalar cm = (F->q_prime_power(m) - F->one()) / (F->q_prime() - F->one());
        AlgebraElement bracket(F);
        bracket.add_term({0, 0, 1}, cp);
        bracket.add_term({0, 0, -1}, -cm);
        const AlgebraElement fm = power(f, m);
        const AlgebraElement lhs = d * (fm * e + ((m % 2 == 1) ? e * fm : -(e * fm)));
        const AlgebraElement rhs = power(f, m - 1) * bracket;
        ok &= check(lhs == rhs, log, "identity failed at m=" + std::to_string(m));
        ok &= check(signed_permutation_automorphism(lhs) ==
                        signed_permutation_automorphism(rhs),
                    log, "mirror failed at m=" + std::to_string(m));
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Scasimir product formula
// ---------------------------------------------------------------------------
bool run_scasm(std::string& log) {
    bool ok = true;
    auto generic = ScalarField::make_generic();
    for (int m = 1; m <= 6; ++m)
        ok &= check(verify_scasimir_product(m, generic), log,
                    "generic m=" + std::to_string(m));
    for (int l : {3, 4, 5, 6}) {
        auto field = ScalarField::make_root(l);
        const RootData rd = compute_root_data(l);
        for (int m = 1; m <= rd.L; ++m)
            ok &= check(verify_scasimir_product(m, field), log,
                        "l=" + std::to_string(l) + " m=" + std::to_string(m));
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Chebychev families
// ---------------------------------------------------------------------------
bool run_chebychev(std::string& log) {
    bool ok = true;
    const Poly1 x = Poly1::identity_var();
    const Poly1 one = Poly1::constant(1);
    const auto p_series =
        testing::series_coefficients({Poly1::constant(2), -x}, {one, -x, -one}, 12);
    const auto q_series =
        testing::series_coefficients({Poly1::constant(2), -x}, {one, -x, one}, 12);
    const auto r_series = testing::series_coefficients({one, one}, {one, -x, one}, 12);
    for (unsigned m = 0; m < 12; ++m) {
        ok &= check(p_series[m] == cheb_p(m), log, "P series m=" + std::to_string(m));
        ok &= check(q_series[m] == cheb_q(m), log, "Q series m=" + std::to_string(m));
        ok &= check(r_series[m] == cheb_r(m), log, "R series m=" + std::to_string(m));
    }
    for (const auto& r : verify_cheb_identities(20))
        ok &= check(r.pass, log, r.identity + " m=" + std::to_string(r.m));
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Root data against brute force
// ---------------------------------------------------------------------------
bool run_rootdata(std::string& log) {
    bool ok = true;
    std::vector<int> images;
    for (int l = 3; l <= 24; ++l) {
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        const int order = multiplicative_order(field->q_prime(), 4 * l);
        ok &= check(rd.l_prime == order, log, "order mismatch at l=" + std::to_string(l));
        images.push_back(rd.l_prime);
    }
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            ok &= check(images[i] != images[j], log, "l -> l' not injective");
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Centre relations for l in {3,...,10,12}
// ---------------------------------------------------------------------------
bool run_centre(std::string& log) {
    bool ok = true;
    for (int l : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        const std::string tag = " (l=" + std::to_string(l) + ")";
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        ok &= check(verify_EF_central(field, rd), log, "E/F not central" + tag);
        ok &= check(verify_srel(rd, field), log, "S-relation failed" + tag);
        if (rd.twice_odd) {
            for (const auto& r : verify_centre_relations_twice_odd(rd, field))
                ok &= check(r.pass, log, r.relation + " failed" + tag);
            ok &= check(verify_half_powers(rd, field), log, "half powers failed" + tag);
        } else {
            ok &= check(verify_centre_relation_even(rd, field), log,
                        "even-case relation failed" + tag);
        }
        for (const auto& entry : centre_catalog(rd, field).elements)
            ok &= check(entry.central, log, entry.name + " not central" + tag);
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Representations: relations, Scasimir action, criterion vs oracle
// ---------------------------------------------------------------------------
bool run_representations(std::string& log) {
    bool ok = true;
    for (int l : {3, 4, 5, 6}) {
        const std::string tag = " (l=" + std::to_string(l) + ")";
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);

        // periodic modules for several parameter choices
        const auto U = build_qup(field, rd.L, true).U;
        for (const Scalar& sigma : {field->zero(), field->one(), -field->q_half()}) {
            const Representation mp =
                build_m_plus(rd, field, field->root_power(1), field->q(), sigma);
            const Representation mm =
                build_m_minus(rd, field, field->root_power(3), field->one(), sigma);
            for (const Representation* rep : {&mp, &mm}) {
                ok &= check(verify_relations(*rep), log, "periodic relations" + tag);
                ok &= check(evaluate(scasimir(field), *rep) == sigma * U, log,
                            "S != sigma U" + tag);
            }
        }
        if (l % 2 == 1) {
            const Representation sm =
                build_m_small(rd, field, field->root_power(1), field->one(), true);
            ok &= check(verify_relations(sm), log, "small relations" + tag);
        }

        // nilpotent cells: the catalog construction checks relations and
        // runs both irreducibility routes on each witness
        const ClassifyCatalog cat = classify(l);
        bool free_true = false, free_false = false;
        for (const auto& cell : cat.nilpotent) {
            const std::string cell_tag =
                tag + " d=" + std::to_string(cell.d) + " lambda=" + cell.lambda.to_string();
            ok &= check(cell.relations_ok, log, "relations" + cell_tag);
            ok &= check(cell.criterion == cell.burnside, log,
                        "criterion/oracle disagree" + cell_tag);
            if (cell.lambda_free) {
                free_true = free_true || cell.criterion;
                free_false = free_false || !cell.criterion;
            }
        }
        ok &= check(free_true, log, "no irreducible free-lambda witness" + tag);
        ok &= check(free_false, log, "no reducible free-lambda witness" + tag);
        for (const auto& fam : cat.periodic) {
            ok &= check(fam.witness_relations_ok, log, fam.family + " witness" + tag);
            ok &= check(fam.witness_scasimir_is_sigma_u, log,
                        fam.family + " Scasimir value" + tag);
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Equivalences and the sigma = 0 splitting
// ---------------------------------------------------------------------------
bool run_equivalences(std::string& log) {
    bool ok = true;
    using MatPair = std::pair<const ExactMatrix*, const ExactMatrix*>;
    for (int l : {3, 4}) {
        const std::string tag = " (l=" + std::to_string(l) + ")";
        const RootData rd = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        const Scalar lam = field->root_power(1);
        const Scalar phi = field->root_power(2);
        const Scalar sigma = field->one();
        const Representation a = build_m_plus(rd, field, lam, phi, sigma);
        const auto ops = build_qup(field, rd.L, true);

        const Representation bq = build_m_plus(rd, field, lam, field->q_inv() * phi, sigma);
        const Representation bp = build_m_plus(rd, field, field->q() * lam, phi, -sigma);
        const Representation bu = build_m_plus(rd, field, lam, -phi, sigma);
        const std::array<std::pair<const ExactMatrix*, const Representation*>, 3> moves = {
            std::pair{&ops.Q, &bq}, std::pair{&ops.P, &bp}, std::pair{&ops.U, &bu}};
        for (const auto& [t, b] : moves) {
            for (const auto& [ga, gb] : {MatPair{&a.mat_e, &b->mat_e},
                                         MatPair{&a.mat_f, &b->mat_f},
                                         MatPair{&a.mat_k, &b->mat_k}})
                ok &= check(*t * *ga == *gb * *t, log, "conjugation move failed" + tag);
        }
    }
    {
        // explicit basis change M_+ -> M_- at l = 4 with matching e-values
        const RootData rd = compute_root_data(4);
        auto field = ScalarField::make_root(4);
        const Representation mp =
            build_m_plus(rd, field, field->q(), field->one(), field->zero());
        const Scalar eps = (field->root_power(2) + field->root_power(14)) / field->eta();
        const auto e_L = scalar_of(evaluate(
            AlgebraElement::monomial_term(field, {0, rd.L, 0}, field->one()), mp));
        ok &= check(e_L.has_value() && *e_L == eps.pow(rd.L), log, "e^L != eps^L (l=4)");
        const Representation mm = build_m_minus(rd, field, field->q(), eps, field->zero());
        const ExactMatrix t = mplus_to_mminus_basis_change(mp, eps);
        ok &= check(t.rank() == mp.dim(), log, "basis change not invertible (l=4)");
        for (const auto& [gp, gm] : {MatPair{&mp.mat_e, &mm.mat_e},
                                     MatPair{&mp.mat_f, &mm.mat_f},
                                     MatPair{&mp.mat_k, &mm.mat_k}})
            ok &= check(*gp * t == t * *gm, log, "basis change does not intertwine (l=4)");
    }
    {
        // l = 3, sigma = 0: the 6-dimensional module splits
        const RootData rd = compute_root_data(3);
        auto field = ScalarField::make_root(3);
        const Representation mp =
            build_m_plus(rd, field, field->one(), field->one(), field->zero());
        ok &= check(!is_irreducible_burnside(mp), log, "M_+(1,1,0) not reducible (l=3)");
        auto [plus_piece, minus_piece] = split_sigma_zero(mp, rd);
        for (const Representation* piece : {&plus_piece, &minus_piece}) {
            ok &= check(piece->dim() == 3, log, "piece dimension (l=3)");
            ok &= check(verify_relations(*piece), log, "piece relations (l=3)");
            ok &= check(is_irreducible_burnside(*piece), log, "piece reducible (l=3)");
            const Representation small =
                build_m_small(rd, field, *piece->spec.lambda, *piece->spec.phi, true);
            auto t = intertwiner(*piece, small);
            ok &= check(t.has_value() && t->rank() == 3, log,
                        "piece does not match a small module (l=3)");
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 10. CLI smoke test
// ---------------------------------------------------------------------------
struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool run_cli(std::string& log) {
    const std::string cli = QOSP_CLI_PATH;
    bool ok = true;
    const CommandResult good = run_command(cli + " verify --l 6 --what all");
    ok &= check(good.exit_code == 0, log,
                "verify --l 6 --what all exited " + std::to_string(good.exit_code));
    ok &= check(good.output.find("\"all_pass\": true") != std::string::npos, log,
                "missing all_pass in verify output");
    for (const char* rel : {"rel2", "rel3", "rel4"})
        ok &= check(good.output.find(rel) != std::string::npos, log,
                    std::string(rel) + " not reported");

    // negative control: one corrupted sign must fail with both sides printed
    const CommandResult bad = run_command(cli + " verify --l 6 --what centre --corrupt rel2");
    ok &= check(bad.exit_code == 1, log,
                "corrupted verify exited " + std::to_string(bad.exit_code));
    ok &= check(bad.output.find("\"lhs\"") != std::string::npos &&
                    bad.output.find("\"rhs\"") != std::string::npos,
                log, "corrupted verify does not print both sides");

    const CommandResult usage = run_command(cli + " verify --l 6 --bogus-flag");
    ok &= check(usage.exit_code == 2, log, "unknown flag should exit 2");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "pbw-associativity", 30.0, run_associativity},
        {2, "scasimir-suite", 1.0, run_scasimir_suite},
        {3, "power-commutation", 5.0, run_comemf},
        {4, "scasimir-product", 60.0, run_scasm},
        {5, "chebychev", 5.0, run_chebychev},
        {6, "root-data", 1.0, run_rootdata},
        {7, "centre-relations", 300.0, run_centre},
        {8, "representations", 300.0, run_representations},
        {9, "equivalences", 120.0, run_equivalences},
        {10, "cli-smoke", 60.0, run_cli},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string log;
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            log = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.limit_seconds;
        const bool overall = pass && in_time;
        if (!overall) ++failures;
        std::printf("criterion %2d %-20s %s  %7.2fs (limit %.0fs)%s%s\n", c.id,
                    c.name.c_str(), overall ? "PASS" : "FAIL", elapsed, c.limit_seconds,
                    log.empty() ? "" : "  -- ", log.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
