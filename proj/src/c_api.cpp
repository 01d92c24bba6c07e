#include "qosp/qosp_c.h"

#include <cstring>
#include <string>

#include "qosp/centre.hpp"
#include "qosp/exprparse.hpp"
#include "qosp/json_io.hpp"
#include "qosp/version.hpp"

using namespace qosp;

struct qosp_field {
    FieldPtr field;
};

struct qosp_elem {
    AlgebraElement value;
};

namespace {

thread_local std::string g_last_error;

qosp_status status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::usage: return QOSP_USAGE_ERROR;
        case ErrorKind::arithmetic: return QOSP_ARITH_ERROR;
        case ErrorKind::parse: return QOSP_PARSE_ERROR;
        case ErrorKind::io: return QOSP_IO_ERROR;
    }
    return QOSP_USAGE_ERROR;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
qosp_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QOSP_USAGE_ERROR;
    }
}

template <typename Fn>
int guarded_predicate(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn() ? 1 : 0;
    } catch (const Error& e) {
        g_last_error = e.what();
        return -1;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

qosp_status require(bool cond, const char* message) {
    if (cond) return QOSP_OK;
    g_last_error = message;
    return QOSP_USAGE_ERROR;
}

FieldPtr field_for(int l) {
    return l == 0 ? ScalarField::make_generic() : ScalarField::make_root(l);
}

qosp_status out_json(const Json& j, char** out) {
    *out = dup_string(j.dump());
    return QOSP_OK;
}

}  // namespace

extern "C" {

const char* qosp_version(void) { return QOSP_VERSION; }

const char* qosp_last_error(void) { return g_last_error.c_str(); }

qosp_status qosp_field_new_generic(qosp_field** out) {
    if (require(out != nullptr, "null output pointer")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_field{ScalarField::make_generic()};
        return QOSP_OK;
    });
}

qosp_status qosp_field_new_root(int l, qosp_field** out) {
    if (require(out != nullptr, "null output pointer")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_field{ScalarField::make_root(l)};
        return QOSP_OK;
    });
}

void qosp_field_free(qosp_field* field) { delete field; }

qosp_status qosp_elem_parse(const qosp_field* field, const char* expr, qosp_elem** out) {
    if (require(field && expr && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_elem{parse_element(expr, field->field)};
        return QOSP_OK;
    });
}

qosp_status qosp_elem_generator(const qosp_field* field, const char* name, qosp_elem** out) {
    if (require(field && name && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        const std::string n = name;
        GeneratorName g;
        if (n == "e")
            g = GeneratorName::e;
        else if (n == "f")
            g = GeneratorName::f;
        else if (n == "k")
            g = GeneratorName::k;
        else if (n == "k_inv")
            g = GeneratorName::k_inv;
        else
            usage_error("unknown generator name: " + n);
        *out = new qosp_elem{generator(g, field->field)};
        return QOSP_OK;
    });
}

qosp_status qosp_elem_scasimir(const qosp_field* field, qosp_elem** out) {
    if (require(field && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_elem{scasimir(field->field)};
        return QOSP_OK;
    });
}

qosp_status qosp_elem_casimir(const qosp_field* field, qosp_elem** out) {
    if (require(field && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_elem{casimir(field->field)};
        return QOSP_OK;
    });
}

#define QOSP_BINOP(name, expr)                                                      \
    qosp_status name(const qosp_elem* x, const qosp_elem* y, qosp_elem** out) {     \
        if (require(x && y && out, "null argument")) return QOSP_USAGE_ERROR;       \
        return guarded([&] {                                                        \
            *out = new qosp_elem{expr};                                             \
            return QOSP_OK;                                                         \
        });                                                                         \
    }

QOSP_BINOP(qosp_elem_add, x->value + y->value)
QOSP_BINOP(qosp_elem_sub, x->value - y->value)
QOSP_BINOP(qosp_elem_mul, x->value * y->value)
#undef QOSP_BINOP

qosp_status qosp_elem_neg(const qosp_elem* x, qosp_elem** out) {
    if (require(x && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_elem{-x->value};
        return QOSP_OK;
    });
}

qosp_status qosp_elem_pow(const qosp_elem* x, long n, qosp_elem** out) {
    if (require(x && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = new qosp_elem{power(x->value, n)};
        return QOSP_OK;
    });
}

int qosp_elem_equal(const qosp_elem* x, const qosp_elem* y) {
    if (!x || !y) {
        g_last_error = "null argument";
        return -1;
    }
    return guarded_predicate([&] { return x->value == y->value; });
}

int qosp_elem_is_zero(const qosp_elem* x) {
    if (!x) {
        g_last_error = "null argument";
        return -1;
    }
    return guarded_predicate([&] { return x->value.is_zero(); });
}

int qosp_elem_is_central(const qosp_elem* x) {
    if (!x) {
        g_last_error = "null argument";
        return -1;
    }
    return guarded_predicate([&] { return is_central(x->value); });
}

int qosp_elem_is_scentral(const qosp_elem* x) {
    if (!x) {
        g_last_error = "null argument";
        return -1;
    }
    return guarded_predicate([&] { return is_scentral(x->value); });
}

qosp_status qosp_elem_to_text(const qosp_elem* x, char** out) {
    if (require(x && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        *out = dup_string(to_text(x->value));
        return QOSP_OK;
    });
}

qosp_status qosp_elem_to_json(const qosp_elem* x, char** out) {
    if (require(x && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] { return out_json(element_to_json(x->value), out); });
}

void qosp_elem_free(qosp_elem* x) { delete x; }

qosp_status qosp_rootdata_json(int l, char** out) {
    if (require(out != nullptr, "null output pointer")) return QOSP_USAGE_ERROR;
    return guarded([&] { return out_json(rootdata_to_json(compute_root_data(l)), out); });
}

qosp_status qosp_nf_json(int l, const char* expr, char** out) {
    if (require(expr && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        return out_json(element_to_json(parse_element(expr, field_for(l))), out);
    });
}

qosp_status qosp_cheb_json(const char* family, int m, char** out) {
    if (require(family && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        if (m < 0) usage_error("m must be nonnegative");
        const std::string fam = family;
        Poly1 p;
        if (fam == "p")
            p = cheb_p(static_cast<unsigned>(m));
        else if (fam == "q")
            p = cheb_q(static_cast<unsigned>(m));
        else if (fam == "r")
            p = cheb_r(static_cast<unsigned>(m));
        else
            usage_error("unknown family: " + fam + " (expected p, q or r)");
        Json j{{"family", fam}, {"m", m}, {"coeffs", poly_to_json(p)},
               {"variable", fam == "p" ? "S" : "C"}};
        return out_json(j, out);
    });
}

qosp_status qosp_verify_json(int l, const char* what, int max_m, const char* corrupt,
                             char** out) {
    if (require(out != nullptr, "null output pointer")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        const RootData root = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        VerifyOptions opts;
        if (what) opts.what = what;
        opts.max_m = max_m;
        if (corrupt) opts.corrupt = corrupt;
        auto results = run_verifications(root, field, opts);
        Json j = relation_results_to_json(root, results);
        out_json(j, out);
        return j.at("all_pass").get<bool>() ? QOSP_OK : QOSP_VERIFY_FAILED;
    });
}

qosp_status qosp_classify_json(int l, char** out) {
    if (require(out != nullptr, "null output pointer")) return QOSP_USAGE_ERROR;
    return guarded([&] { return out_json(classify_to_json(classify(l)), out); });
}

qosp_status qosp_rep_build_json(int l, const char* family, const char* lambda,
                                const char* phi, const char* eps, const char* sigma, int d,
                                char** out) {
    if (require(family && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        const RootData root = compute_root_data(l);
        auto field = ScalarField::make_root(l);
        auto fam = family_from_name(family);
        if (!fam) usage_error(std::string("unknown family: ") + family);
        auto scalar_arg = [&](const char* text, const char* name,
                              const char* fallback) -> Scalar {
            if (!text || !*text) {
                if (!fallback) usage_error(std::string("missing parameter --") + name);
                return parse_scalar(fallback, field);
            }
            return parse_scalar(text, field);
        };
        Representation rep;
        switch (*fam) {
            case RepFamily::MPlusBig:
                rep = build_m_plus(root, field, scalar_arg(lambda, "lambda", nullptr),
                                   scalar_arg(phi, "phi", nullptr),
                                   scalar_arg(sigma, "sigma", "0"));
                break;
            case RepFamily::MMinusBig:
                rep = build_m_minus(root, field, scalar_arg(lambda, "lambda", nullptr),
                                    scalar_arg(eps, "eps", nullptr),
                                    scalar_arg(sigma, "sigma", "0"));
                break;
            case RepFamily::MPlusSmall:
                rep = build_m_small(root, field, scalar_arg(lambda, "lambda", nullptr),
                                    scalar_arg(phi, "phi", nullptr), true);
                break;
            case RepFamily::MMinusSmall:
                rep = build_m_small(root, field, scalar_arg(lambda, "lambda", nullptr),
                                    scalar_arg(eps, "eps", nullptr), false);
                break;
            case RepFamily::Nilpotent:
                if (d < 1) usage_error("nilpotent modules need --d >= 1");
                rep = build_nilpotent(root, field, d, scalar_arg(lambda, "lambda", nullptr));
                break;
        }
        return out_json(rep_to_json(rep), out);
    });
}

qosp_status qosp_rep_check_json(const char* rep_json, char** out) {
    if (require(rep_json && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        Json input;
        try {
            input = Json::parse(rep_json);
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::io, std::string("invalid JSON: ") + e.what());
        }
        Representation rep = rep_from_json(input);
        const RootData root = compute_root_data(rep.spec.l);
        const bool relations = verify_relations(rep);
        Json j{{"family", family_name(rep.spec.family)},
               {"l", rep.spec.l},
               {"dimension", rep.dim()},
               {"relations_ok", relations},
               {"irreducible_burnside", is_irreducible_burnside(rep)},
               {"central_character",
                central_character_to_json(central_character(rep, root))}};
        out_json(j, out);
        return relations ? QOSP_OK : QOSP_VERIFY_FAILED;
    });
}

qosp_status qosp_eval_json(int l, const char* rep_json, const char* expr, char** out) {
    if (require(rep_json && expr && out, "null argument")) return QOSP_USAGE_ERROR;
    return guarded([&] {
        Json input;
        try {
            input = Json::parse(rep_json);
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::io, std::string("invalid JSON: ") + e.what());
        }
        Representation rep = rep_from_json(input);
        if (l != 0 && rep.spec.l != l) usage_error("--l disagrees with the module file");
        const AlgebraElement x = parse_element(expr, rep.field);
        return out_json(matrix_to_json(evaluate(x, rep)), out);
    });
}

void qosp_string_free(char* s) { std::free(s); }

}  // extern "C"
