#include "qosp/json_io.hpp"

#include "qosp/exprparse.hpp"

namespace qosp {

Json field_to_json(const ScalarField& field) {
    if (!field.is_root()) return Json{{"mode", "generic"}};
    return Json{{"mode", "root"}, {"l", field.l()}, {"N", field.N()}};
}

FieldPtr field_from_json(const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "generic") return ScalarField::make_generic();
    if (mode == "root") return ScalarField::make_root(j.at("l").get<int>());
    usage_error("unknown field mode: " + mode);
}

Json element_to_json(const AlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        terms.push_back(Json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coeff", c.to_string()}});
    }
    return Json{{"field", field_to_json(*x.field())}, {"terms", std::move(terms)}};
}

Json rootdata_to_json(const RootData& rd) {
    return Json{{"l", rd.l},
                {"lprime", rd.l_prime},
                {"L", rd.L},
                {"N", rd.N},
                {"twice_odd", rd.twice_odd}};
}

Json poly_to_json(const Poly1& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    return coeffs;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const Json& j, const FieldPtr& field) {
    const auto& rows = j.at("entries");
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != n) usage_error("matrix JSON is not square");
        for (int c = 0; c < n; ++c)
            m.at(i, c) = parse_scalar(row.at(c).get<std::string>(), field);
    }
    return m;
}

Json relation_results_to_json(const RootData& root,
                              const std::vector<RelationResult>& results) {
    Json arr = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        Json item{{"relation", r.relation}, {"l", root.l}, {"pass", r.pass}};
        if (!r.pass) {
            item["lhs"] = element_to_json(r.lhs);
            item["rhs"] = element_to_json(r.rhs);
            all_pass = false;
        }
        arr.push_back(std::move(item));
    }
    return Json{{"l", root.l}, {"all_pass", all_pass}, {"results", std::move(arr)}};
}

namespace {

Json spec_to_json(const RepSpec& spec) {
    Json j{{"family", family_name(spec.family)}, {"l", spec.l}};
    auto put = [&](const char* key, const std::optional<Scalar>& v) {
        if (v) j[key] = v->to_string();
    };
    put("lambda", spec.lambda);
    put("phi", spec.phi);
    put("eps", spec.eps);
    put("sigma", spec.sigma);
    if (spec.family == RepFamily::Nilpotent) j["d"] = spec.d;
    return j;
}

}  // namespace

Json rep_to_json(const Representation& rep) {
    return Json{{"field", field_to_json(*rep.field)},
                {"spec", spec_to_json(rep.spec)},
                {"matrices",
                 Json{{"e", matrix_to_json(rep.mat_e)},
                      {"f", matrix_to_json(rep.mat_f)},
                      {"k", matrix_to_json(rep.mat_k)},
                      {"kinv", matrix_to_json(rep.mat_kinv)}}}};
}

Representation rep_from_json(const Json& j) {
    Representation rep;
    rep.field = field_from_json(j.at("field"));
    const auto& spec = j.at("spec");
    auto family = family_from_name(spec.at("family").get<std::string>());
    if (!family) usage_error("unknown representation family in JSON");
    rep.spec.family = *family;
    rep.spec.l = spec.at("l").get<int>();
    auto get = [&](const char* key) -> std::optional<Scalar> {
        if (!spec.contains(key)) return std::nullopt;
        return parse_scalar(spec.at(key).get<std::string>(), rep.field);
    };
    rep.spec.lambda = get("lambda");
    rep.spec.phi = get("phi");
    rep.spec.eps = get("eps");
    rep.spec.sigma = get("sigma");
    if (spec.contains("d")) rep.spec.d = spec.at("d").get<int>();
    const auto& mats = j.at("matrices");
    rep.mat_e = matrix_from_json(mats.at("e"), rep.field);
    rep.mat_f = matrix_from_json(mats.at("f"), rep.field);
    rep.mat_k = matrix_from_json(mats.at("k"), rep.field);
    rep.mat_kinv = matrix_from_json(mats.at("kinv"), rep.field);
    const int n = rep.mat_e.dim();
    if (rep.mat_f.dim() != n || rep.mat_k.dim() != n || rep.mat_kinv.dim() != n)
        usage_error("matrix dimensions disagree");
    return rep;
}

Json central_character_to_json(const CentralCharacter& cc) {
    Json j = Json::object();
    for (const auto& [name, value] : cc.values)
        j[name] = value ? Json(value->to_string()) : Json("not-scalar");
    return j;
}

Json classify_to_json(const ClassifyCatalog& cat) {
    Json nil = Json::array();
    for (const auto& cell : cat.nilpotent) {
        nil.push_back(Json{{"d", cell.d},
                           {"lambda", cell.lambda.to_string()},
                           {"sigma", cell.sigma.to_string()},
                           {"lambda_free", cell.lambda_free},
                           {"irreducible_criterion", cell.criterion},
                           {"irreducible_burnside", cell.burnside},
                           {"relations_ok", cell.relations_ok}});
    }
    Json per = Json::array();
    for (const auto& fam : cat.periodic) {
        per.push_back(Json{{"family", fam.family},
                           {"dimension", fam.dimension},
                           {"parameters", fam.parameters},
                           {"equivalences", fam.equivalences},
                           {"witness_relations_ok", fam.witness_relations_ok},
                           {"witness_scasimir_is_sigma_u", fam.witness_scasimir_is_sigma_u}});
    }
    return Json{{"rootdata", rootdata_to_json(cat.root)},
                {"nilpotent", std::move(nil)},
                {"periodic", std::move(per)}};
}

Json cheb_identities_to_json(const std::vector<ChebIdentityResult>& results) {
    Json arr = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        arr.push_back(Json{{"identity", r.identity}, {"m", r.m}, {"pass", r.pass}});
        all_pass = all_pass && r.pass;
    }
    return Json{{"all_pass", all_pass}, {"results", std::move(arr)}};
}

}  // namespace qosp
