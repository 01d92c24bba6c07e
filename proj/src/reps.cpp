#include "qosp/reps.hpp"

#include <algorithm>

namespace qosp {

namespace {

void require_root_match(const RootData& root, const FieldPtr& field) {
    if (!field->is_root()) usage_error("representations require a root-of-unity field");
    if (field->l() != root.l) usage_error("RootData and field disagree on l");
}

void require_nonzero(const Scalar& x, const char* name) {
    if (x.is_zero()) usage_error(std::string(name) + " must be nonzero");
}

/// diag part q^{1/2} lambda Q - q^{-1/2} lambda^{-1} Q^{-1} - sigma U
ExactMatrix weight_diagonal(const FieldPtr& field, int dim, const Scalar& lambda,
                            const Scalar& sigma) {
    ExactMatrix D(field, dim, dim);
    const Scalar li = lambda.inverse();
    for (int m = 0; m < dim; ++m) {
        Scalar v = field->q_half() * lambda * field->q_power(-m) -
                   field->q_half_inv() * li * field->q_power(m);
        if (!sigma.is_zero()) {
            Scalar su = (m % 2 == 0) ? sigma : -sigma;
            v = v - su;
        }
        D.at(m, m) = v;
    }
    return D;
}

std::vector<Scalar> vectorize(const ExactMatrix& m) {
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

std::string family_name(RepFamily f) {
    switch (f) {
        case RepFamily::MPlusBig: return "mplus";
        case RepFamily::MMinusBig: return "mminus";
        case RepFamily::MPlusSmall: return "mplus-small";
        case RepFamily::MMinusSmall: return "mminus-small";
        case RepFamily::Nilpotent: return "nilpotent";
    }
    usage_error("unknown representation family");
}

std::optional<RepFamily> family_from_name(const std::string& name) {
    if (name == "mplus") return RepFamily::MPlusBig;
    if (name == "mminus") return RepFamily::MMinusBig;
    if (name == "mplus-small") return RepFamily::MPlusSmall;
    if (name == "mminus-small") return RepFamily::MMinusSmall;
    if (name == "nilpotent") return RepFamily::Nilpotent;
    return std::nullopt;
}

int RepSpec::dimension(const RootData& root) const {
    switch (family) {
        case RepFamily::MPlusBig:
        case RepFamily::MMinusBig: return root.L;
        case RepFamily::MPlusSmall:
        case RepFamily::MMinusSmall: return root.l;
        case RepFamily::Nilpotent: return d;
    }
    usage_error("unknown representation family");
}

QUPOperators build_qup(const FieldPtr& field, int dim, bool periodic) {
    if (dim < 1) usage_error("build_qup requires dim >= 1");
    QUPOperators ops{ExactMatrix(field, dim, dim), ExactMatrix(field, dim, dim),
                     ExactMatrix(field, dim, dim), ExactMatrix(field, dim, dim)};
    for (int m = 0; m < dim; ++m) {
        ops.Q.at(m, m) = field->q_power(-m);
        ops.U.at(m, m) = field->from_long(m % 2 == 0 ? 1 : -1);
        if (periodic) {
            ops.P.at((m + 1) % dim, m) = field->one();
            ops.Pprime.at((m + dim - 1) % dim, m) = field->one();
        } else {
            if (m + 1 < dim) ops.P.at(m + 1, m) = field->one();
            if (m >= 1) ops.Pprime.at(m - 1, m) = field->one();
        }
    }
    return ops;
}

Representation build_m_plus(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                            const Scalar& phi, const Scalar& sigma) {
    require_root_match(root, field);
    require_nonzero(lambda, "lambda");
    require_nonzero(phi, "phi");
    const int dim = root.L;
    auto ops = build_qup(field, dim, true);
    Representation rep;
    rep.spec = RepSpec{RepFamily::MPlusBig, root.l, lambda, phi, std::nullopt, sigma, 0};
    rep.field = field;
    rep.mat_k = lambda * ops.Q;
    rep.mat_kinv = rep.mat_k.inverse();
    rep.mat_f = phi * ops.P;
    const Scalar coeff = (field->eta() * phi).inverse();
    rep.mat_e = coeff * (ops.Pprime * weight_diagonal(field, dim, lambda, sigma));
    return rep;
}

Representation build_m_minus(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                             const Scalar& eps, const Scalar& sigma) {
    require_root_match(root, field);
    require_nonzero(lambda, "lambda");
    require_nonzero(eps, "eps");
    const int dim = root.L;
    auto ops = build_qup(field, dim, true);
    Representation rep;
    rep.spec = RepSpec{RepFamily::MMinusBig, root.l, lambda, std::nullopt, eps, sigma, 0};
    rep.field = field;
    rep.mat_k = lambda * ops.Q;
    rep.mat_kinv = rep.mat_k.inverse();
    rep.mat_e = eps * ops.Pprime;
    const Scalar coeff = (field->eta() * eps).inverse();
    rep.mat_f = coeff * (weight_diagonal(field, dim, lambda, sigma) * ops.P);
    return rep;
}

Representation build_m_small(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                             const Scalar& phi_or_eps, bool plus) {
    require_root_match(root, field);
    if (root.l % 2 == 0) usage_error("small modules require l odd");
    require_nonzero(lambda, "lambda");
    require_nonzero(phi_or_eps, plus ? "phi" : "eps");
    const int dim = root.l;
    auto ops = build_qup(field, dim, true);
    const Scalar zero = field->zero();
    Representation rep;
    rep.field = field;
    rep.mat_k = lambda * ops.Q;
    rep.mat_kinv = rep.mat_k.inverse();
    if (plus) {
        rep.spec = RepSpec{RepFamily::MPlusSmall, root.l, lambda, phi_or_eps,
                           std::nullopt, zero, 0};
        rep.mat_f = phi_or_eps * ops.P;
        const Scalar coeff = (field->eta() * phi_or_eps).inverse();
        rep.mat_e = coeff * (ops.Pprime * weight_diagonal(field, dim, lambda, zero));
    } else {
        rep.spec = RepSpec{RepFamily::MMinusSmall, root.l, lambda, std::nullopt,
                           phi_or_eps, zero, 0};
        rep.mat_e = phi_or_eps * ops.Pprime;
        const Scalar coeff = (field->eta() * phi_or_eps).inverse();
        rep.mat_f = coeff * (weight_diagonal(field, dim, lambda, zero) * ops.P);
    }
    return rep;
}

bool quantisation_holds(const RootData& root, const FieldPtr& field, int d,
                        const Scalar& lambda) {
    require_root_match(root, field);
    if (d < 1) usage_error("nilpotent modules require d >= 1");
    require_nonzero(lambda, "lambda");
    const Scalar lhs = (field->q_prime_power(d) - field->one()) *
                       (lambda * lambda - field->q_prime_power(d - 1));
    return lhs.is_zero();
}

Representation build_nilpotent(const RootData& root, const FieldPtr& field, int d,
                               const Scalar& lambda) {
    if (!quantisation_holds(root, field, d, lambda))
        usage_error("quantisation condition (q'^d-1)(lambda^2-q'^{d-1}) = 0 violated");
    const Scalar sigma =
        field->q_half() * lambda - field->q_half_inv() * lambda.inverse();
    auto ops = build_qup(field, d, false);
    Representation rep;
    rep.spec = RepSpec{RepFamily::Nilpotent, root.l, lambda, std::nullopt, std::nullopt,
                       sigma, d};
    rep.field = field;
    rep.mat_k = lambda * ops.Q;
    rep.mat_kinv = rep.mat_k.inverse();
    rep.mat_f = ops.P;
    const Scalar coeff = field->eta().inverse();
    rep.mat_e = coeff * (ops.Pprime * weight_diagonal(field, d, lambda, sigma));
    return rep;
}

bool verify_relations(const Representation& rep) {
    const FieldPtr& field = rep.field;
    const ExactMatrix& e = rep.mat_e;
    const ExactMatrix& f = rep.mat_f;
    const ExactMatrix& k = rep.mat_k;
    const ExactMatrix& ki = rep.mat_kinv;
    const ExactMatrix id = ExactMatrix::identity(field, rep.dim());
    if (k * ki != id || ki * k != id) return false;
    if (k * e * ki != field->q() * e) return false;
    if (k * f * ki != field->q_inv() * f) return false;
    const Scalar coeff = (field->q() - field->q_inv()).inverse();
    return e * f + f * e == coeff * (k - ki);
}

ExactMatrix evaluate(const AlgebraElement& x, const Representation& rep) {
    if (!x.field()->same_field(*rep.field)) usage_error("element and module fields differ");
    const int n = rep.dim();
    int max_a = 0, max_b = 0;
    long min_c = 0, max_c = 0;
    for (const auto& [m, c] : x.terms()) {
        max_a = std::max(max_a, m.a);
        max_b = std::max(max_b, m.b);
        min_c = std::min(min_c, m.c);
        max_c = std::max(max_c, m.c);
    }
    auto powers = [&](const ExactMatrix& g, int count) {
        std::vector<ExactMatrix> p{ExactMatrix::identity(rep.field, n)};
        for (int i = 1; i <= count; ++i) p.push_back(p.back() * g);
        return p;
    };
    const auto fp = powers(rep.mat_f, max_a);
    const auto ep = powers(rep.mat_e, max_b);
    const auto kp = powers(rep.mat_k, static_cast<int>(std::max(0L, max_c)));
    const auto kip = powers(rep.mat_kinv, static_cast<int>(std::max(0L, -min_c)));

    ExactMatrix acc(rep.field, n, n);
    for (const auto& [m, c] : x.terms()) {
        const ExactMatrix& kpart = m.c >= 0 ? kp[static_cast<size_t>(m.c)]
                                            : kip[static_cast<size_t>(-m.c)];
        acc = acc + c * (fp[m.a] * ep[m.b] * kpart);
    }
    return acc;
}

bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
    if (a.values.size() != b.values.size()) return false;
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].first != b.values[i].first) return false;
        const auto& x = a.values[i].second;
        const auto& y = b.values[i].second;
        if (x.has_value() != y.has_value()) return false;
        if (x && *x != *y) return false;
    }
    return true;
}

CentralCharacter central_character(const Representation& rep, const RootData& root) {
    require_root_match(root, rep.field);
    const FieldPtr& field = rep.field;
    CentralCharacter cc;
    auto record = [&](const std::string& name, const AlgebraElement& x) {
        cc.values.emplace_back(name, scalar_of(evaluate(x, rep)));
    };
    record("k^l", AlgebraElement::monomial_term(field, {0, 0, root.l}, field->one()));
    record("k^L", AlgebraElement::monomial_term(field, {0, 0, root.L}, field->one()));
    record("C", casimir(field));
    record("E", AlgebraElement::monomial_term(field, {0, root.L, 0}, field->one()));
    record("F", AlgebraElement::monomial_term(field, {root.L, 0, 0}, field->one()));
    if (root.l % 2 == 0) {
        record("k^(l/2)S", AlgebraElement::monomial_term(field, {0, 0, root.l / 2},
                                                         field->one()) *
                               scasimir(field));
    }
    return cc;
}

bool irreducibility_criterion_nilpotent(const RootData& root, const FieldPtr& field, int d,
                                        const Scalar& lambda) {
    if (!quantisation_holds(root, field, d, lambda))
        usage_error("quantisation condition violated");
    Scalar prod = field->one();
    const Scalar li = lambda.inverse();
    for (int n = 1; n < d; ++n) {
        const Scalar left = field->q_prime_power(n) - field->one();
        const Scalar right = field->q_half_power(1 - 2 * d) * lambda +
                             field->q_half_power(2 * d - 1) * li * field->q_prime_power(-n);
        prod = prod * left * right;
    }
    return !prod.is_zero();
}

bool is_irreducible_burnside(const Representation& rep) {
    const int n = rep.dim();
    const size_t target = static_cast<size_t>(n) * n;
    SpanBasis span(rep.field, target);
    std::vector<ExactMatrix> worklist;
    const ExactMatrix id = ExactMatrix::identity(rep.field, n);
    span.insert(vectorize(id));
    worklist.push_back(id);
    const ExactMatrix* gens[4] = {&rep.mat_k, &rep.mat_kinv, &rep.mat_e, &rep.mat_f};
    while (!worklist.empty() && span.size() < target) {
        ExactMatrix m = std::move(worklist.back());
        worklist.pop_back();
        for (const auto* g : gens) {
            ExactMatrix prod = m * *g;
            if (span.insert(vectorize(prod))) {
                if (span.size() == target) return true;
                worklist.push_back(std::move(prod));
            }
        }
    }
    return span.size() == target;
}

std::optional<ExactMatrix> intertwiner(const Representation& repA, const Representation& repB) {
    if (repA.spec.l != repB.spec.l) usage_error("intertwiner requires the same l");
    if (!repA.field->same_field(*repB.field)) usage_error("intertwiner requires one field");
    if (repA.dim() != repB.dim()) usage_error("intertwiner requires equal dimensions");
    const FieldPtr& field = repA.field;
    const int n = repA.dim();
    const int nn = n * n;

    if (repA.mat_e == repB.mat_e && repA.mat_f == repB.mat_f && repA.mat_k == repB.mat_k)
        return ExactMatrix::identity(field, n);

    // rows: equations (T A_g - B_g T)_{ij} = 0; unknowns t_{pq} at index p*n+q
    const std::pair<const ExactMatrix*, const ExactMatrix*> pairs[3] = {
        {&repA.mat_e, &repB.mat_e}, {&repA.mat_f, &repB.mat_f}, {&repA.mat_k, &repB.mat_k}};
    ExactMatrix sys(field, 3 * nn, nn);
    int row = 0;
    for (const auto& [A, B] : pairs) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // coefficient of t_{iq} is A_{qj}; of t_{pj} is -B_{ip}
                for (int q = 0; q < n; ++q) {
                    const Scalar& aqj = A->at(q, j);
                    if (!aqj.is_zero())
                        sys.at(row, i * n + q) = sys.at(row, i * n + q) + aqj;
                }
                for (int p = 0; p < n; ++p) {
                    const Scalar& bip = B->at(i, p);
                    if (!bip.is_zero())
                        sys.at(row, p * n + j) = sys.at(row, p * n + j) - bip;
                }
                ++row;
            }
        }
    }
    const ExactMatrix null_basis = sys.nullspace();
    if (null_basis.cols() == 0) return std::nullopt;

    auto reshape = [&](const std::vector<Scalar>& v) {
        ExactMatrix t(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.at(i, j) = v[static_cast<size_t>(i) * n + j];
        return t;
    };
    auto invertible = [&](const ExactMatrix& t) { return t.rank() == n; };

    // single basis vectors, then prefix sums, then small deterministic combos
    std::vector<std::vector<Scalar>> candidates;
    for (int c = 0; c < null_basis.cols(); ++c) {
        std::vector<Scalar> v;
        for (int r = 0; r < nn; ++r) v.push_back(null_basis.at(r, c));
        candidates.push_back(std::move(v));
    }
    std::vector<std::vector<Scalar>> extra;
    if (candidates.size() > 1) {
        std::vector<Scalar> sum = candidates[0];
        for (size_t c = 1; c < candidates.size(); ++c) {
            for (int r = 0; r < nn; ++r) sum[r] = sum[r] + candidates[c][r];
            extra.push_back(sum);
        }
        for (long w = 2; w <= 5; ++w) {  // 1, w, w^2, ... weights
            std::vector<Scalar> mix(static_cast<size_t>(nn), field->zero());
            Scalar weight = field->one();
            for (auto& cand : candidates) {
                for (int r = 0; r < nn; ++r) mix[r] = mix[r] + weight * cand[r];
                weight = weight * field->from_long(w);
            }
            extra.push_back(std::move(mix));
        }
    }
    for (auto& v : extra) candidates.push_back(std::move(v));
    for (const auto& v : candidates) {
        ExactMatrix t = reshape(v);
        if (invertible(t)) return t;
    }
    return std::nullopt;
}

ExactMatrix mplus_to_mminus_basis_change(const Representation& mplus, const Scalar& eps) {
    require_nonzero(eps, "eps");
    const int n = mplus.dim();
    const FieldPtr& field = mplus.field;
    const ExactMatrix e_inv = mplus.mat_e.inverse();
    ExactMatrix t(field, n, n);
    // column m is eps^m e^{-m} |0>
    std::vector<Scalar> cur(static_cast<size_t>(n), field->zero());
    cur[0] = field->one();
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < n; ++i) t.at(i, m) = cur[i];
        if (m + 1 < n) {
            std::vector<Scalar> next(static_cast<size_t>(n), field->zero());
            for (int i = 0; i < n; ++i) {
                if (cur[i].is_zero()) continue;
                for (int r = 0; r < n; ++r) {
                    const Scalar& eri = e_inv.at(r, i);
                    if (!eri.is_zero()) next[r] = next[r] + eps * eri * cur[i];
                }
            }
            cur = std::move(next);
        }
    }
    return t;
}

std::pair<Representation, Representation> split_sigma_zero(const Representation& rep,
                                                           const RootData& root) {
    require_root_match(root, rep.field);
    if (root.l % 2 == 0) usage_error("split_sigma_zero requires l odd");
    const bool plus = rep.spec.family == RepFamily::MPlusBig;
    if (!plus && rep.spec.family != RepFamily::MMinusBig)
        usage_error("split_sigma_zero requires a big periodic module");
    if (!rep.spec.sigma || !rep.spec.sigma->is_zero())
        usage_error("split_sigma_zero requires sigma = 0");

    const FieldPtr& field = rep.field;
    const Scalar param = plus ? *rep.spec.phi : *rep.spec.eps;
    const ExactMatrix w = (plus ? rep.mat_f : rep.mat_e).pow(root.l);
    const Scalar mu = param.pow(root.l);  // eigenvalues are +mu and -mu

    auto build_piece = [&](const Scalar& eigenvalue) {
        ExactMatrix shifted = w;
        for (int i = 0; i < shifted.dim(); ++i)
            shifted.at(i, i) = shifted.at(i, i) - eigenvalue;
        const ExactMatrix basis = shifted.nullspace();
        if (basis.cols() != root.l) arith_error("unexpected eigenspace dimension");
        Representation piece;
        piece.field = field;
        piece.mat_e = basis.solve(rep.mat_e * basis);
        piece.mat_f = basis.solve(rep.mat_f * basis);
        piece.mat_k = basis.solve(rep.mat_k * basis);
        piece.mat_kinv = basis.solve(rep.mat_kinv * basis);
        // the piece is equivalent to a small module with parameter root
        // (+param or -param, whichever l-th power matches the eigenvalue)
        const Scalar parameter = param.pow(root.l) == eigenvalue ? param : -param;
        piece.spec = RepSpec{plus ? RepFamily::MPlusSmall : RepFamily::MMinusSmall, root.l,
                             *rep.spec.lambda,
                             plus ? std::optional<Scalar>(parameter) : std::nullopt,
                             plus ? std::nullopt : std::optional<Scalar>(parameter),
                             field->zero(), 0};
        return piece;
    };
    return {build_piece(mu), build_piece(-mu)};
}

ClassifyCatalog classify(int l) {
    ClassifyCatalog cat;
    cat.root = compute_root_data(l);
    const RootData& root = cat.root;
    auto field = ScalarField::make_root(l);

    auto add_cell = [&](int d, const Scalar& lambda, bool free) {
        NilpotentCell cell;
        cell.d = d;
        cell.lambda = lambda;
        cell.lambda_free = free;
        Representation rep = build_nilpotent(root, field, d, lambda);
        cell.sigma = *rep.spec.sigma;
        cell.relations_ok = verify_relations(rep);
        cell.criterion = irreducibility_criterion_nilpotent(root, field, d, lambda);
        cell.burnside = is_irreducible_burnside(rep);
        cat.nilpotent.push_back(std::move(cell));
    };

    for (int d = 1; d <= root.l_prime; ++d) {
        if (d < root.l_prime) {
            // lambda^2 = q'^{d-1}: the two square roots zeta^{(l+2)(d-1)} and
            // its negative (q' = zeta^{2l+4})
            const Scalar base = field->root_power(static_cast<long>(l + 2) * (d - 1));
            add_cell(d, base, false);
            add_cell(d, -base, false);
        } else {
            // q'^d = 1: lambda free; deterministic witnesses on both sides of
            // the "q' lambda^2 a nontrivial power of q'" clause
            std::vector<Scalar> witnesses;
            auto push_unique = [&witnesses](const Scalar& w) {
                for (const auto& seen : witnesses)
                    if (seen == w) return;
                witnesses.push_back(w);
            };
            // lambda^2 = q'^{-1}: q' lambda^2 = 1, irreducible
            push_unique(field->root_power(static_cast<long>(l + 2) * (d - 1)));
            // lambda^2 = q': q' lambda^2 = q'^2, reducible (l' >= 3)
            push_unique(field->root_power(l + 2));
            push_unique(field->one());  // q' lambda^2 = q', reducible
            for (long j = 1; witnesses.size() < 4; ++j) push_unique(field->root_power(j));
            for (const auto& w : witnesses) add_cell(d, w, true);
        }
    }

    const Scalar lam = field->root_power(1);
    const Scalar one = field->one();
    auto periodic_info = [&](bool plus, bool small) {
        PeriodicFamilyInfo info;
        info.family = plus ? (small ? "mplus-small" : "mplus") : (small ? "mminus-small" : "mminus");
        info.dimension = small ? root.l : root.L;
        const char* pname = plus ? "phi" : "eps";
        info.parameters = small
                              ? std::string("lambda != 0, ") + pname + " != 0, sigma = 0"
                              : std::string("lambda != 0, ") + pname + " != 0, sigma arbitrary";
        info.equivalences = {
            std::string("(lambda, ") + pname + ", sigma) ~ (lambda, q^-1*" + pname + ", sigma)",
            std::string("(lambda, ") + pname + ", sigma) ~ (q*lambda, " + pname + ", -sigma)",
            std::string("(lambda, ") + pname + ", sigma) ~ (lambda, -" + pname + ", sigma)"};
        Representation witness =
            small ? build_m_small(root, field, lam, one, plus)
                  : (plus ? build_m_plus(root, field, lam, one, one)
                          : build_m_minus(root, field, lam, one, one));
        info.witness_relations_ok = verify_relations(witness);
        const ExactMatrix s_mat = evaluate(scasimir(field), witness);
        const ExactMatrix u = build_qup(field, witness.dim(), true).U;
        info.witness_scasimir_is_sigma_u = (s_mat == *witness.spec.sigma * u);
        cat.periodic.push_back(std::move(info));
    };
    periodic_info(true, false);
    periodic_info(false, false);
    if (root.l % 2 == 1) {
        periodic_info(true, true);
        periodic_info(false, true);
    }
    return cat;
}

}  // namespace qosp
