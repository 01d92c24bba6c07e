#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qosp/chebychev.hpp"
#include "qosp/pbw.hpp"
#include "qosp/rootdata.hpp"

namespace qosp {

/// Outcome of one two-sided identity check. Both normal forms are kept so
/// a failure is inspectable.
struct RelationResult {
    std::string relation;
    bool pass = false;
    AlgebraElement lhs, rhs;
};

/// Named central (or scentral) element with its verification flag.
struct CatalogEntry {
    std::string name;
    AlgebraElement element;
    bool central = false;
};

/// The verified catalog of central elements for one root of unity:
/// k^l, k^{-l}, C, E = e^L, F = f^L, plus k^{l/2} S for even l and
/// e^{L/2} f^{L/2} k^{L/2} when l is twice an odd integer.
struct CentreCatalog {
    RootData root;
    std::vector<CatalogEntry> elements;
    bool has_half_twist = false;   // l even: k^{l/2} S present
    bool has_half_powers = false;  // l twice odd: extra central product present
};

/// Product formula linking the Scasimir to f^m e^m:
///   prod_{n=0}^{m-1} (S - q'^n q^{1/2} k + q'^{-n} q^{-1/2} k^{-1})
///     = epsilon(m) (-eta)^m f^m e^m.
/// Valid in generic mode and in every root mode.
bool verify_scasimir_product(int m, const FieldPtr& field);

/// E = e^L and F = f^L (root mode); both are single PBW monomials.
std::pair<AlgebraElement, AlgebraElement> build_EF(const FieldPtr& field, const RootData& root);
bool verify_EF_central(const FieldPtr& field, const RootData& root);

/// For l twice an odd integer: e^{l'} and f^{l'} anticommute with k, k^{-1},
/// S and with the opposite generator, and e^{L/2} f^{L/2} k^{L/2} is central.
bool verify_half_powers(const RootData& root, const FieldPtr& field);

/// P_{l'}(S) = q^{l'/2} k^{l'} + (-1)^{l'} q^{-l'/2} k^{-l'}
///             + epsilon(l') (-eta)^{l'} f^{l'} e^{l'}.
bool verify_srel(const RootData& root, const FieldPtr& field);

/// l not twice odd (l' = L even):
///   (-1)^{L/2} Q_{L/2}(C) = -k^L - k^{-L} + eta^L f^L e^L.
bool verify_centre_relation_even(const RootData& root, const FieldPtr& field);

/// l twice odd: the three centre relations (rel2, rel3, rel4).
std::vector<RelationResult> verify_centre_relations_twice_odd(const RootData& root,
                                                              const FieldPtr& field);

CentreCatalog centre_catalog(const RootData& root, const FieldPtr& field);

/// ---------------------------------------------------------------------
/// Relation registry: every named identity as an (lhs, rhs) pair, used by
/// the CLI `verify` subcommand. `corrupt` flips one structural sign inside
/// the named relation, a negative control for the failure path.
/// ---------------------------------------------------------------------

struct VerifyOptions {
    std::string what = "all";  // all | scasm | srel | centre
    int max_m = 0;             // scasm upper bound; 0 means L
    std::string corrupt;       // name of a relation to corrupt, or empty
};

std::vector<RelationResult> run_verifications(const RootData& root, const FieldPtr& field,
                                              const VerifyOptions& opts);

}  // namespace qosp
