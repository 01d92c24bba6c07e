#pragma once

#include <json.hpp>

#include "qosp/centre.hpp"
#include "qosp/chebychev.hpp"
#include "qosp/reps.hpp"
#include "qosp/rootdata.hpp"

namespace qosp {

using Json = nlohmann::json;

Json field_to_json(const ScalarField& field);
FieldPtr field_from_json(const Json& j);

/// {"field": {...}, "terms": [{"a":..,"b":..,"c":..,"coeff":"..."}]},
/// terms sorted by the monomial order (a, b, c).
Json element_to_json(const AlgebraElement& x);

Json rootdata_to_json(const RootData& rd);

Json poly_to_json(const Poly1& p);

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, const FieldPtr& field);

Json relation_results_to_json(const RootData& root, const std::vector<RelationResult>& results);

Json rep_to_json(const Representation& rep);
Representation rep_from_json(const Json& j);

Json central_character_to_json(const CentralCharacter& cc);

Json classify_to_json(const ClassifyCatalog& cat);

Json cheb_identities_to_json(const std::vector<ChebIdentityResult>& results);

}  // namespace qosp
