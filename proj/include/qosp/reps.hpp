#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qosp/matrix.hpp"
#include "qosp/pbw.hpp"
#include "qosp/rootdata.hpp"

namespace qosp {

enum class RepFamily { MPlusBig, MMinusBig, MPlusSmall, MMinusSmall, Nilpotent };

std::string family_name(RepFamily f);
std::optional<RepFamily> family_from_name(const std::string& name);

/// Family plus exact parameters. Periodic big modules have dimension L,
/// small modules dimension l (l odd, sigma = 0), nilpotent modules
/// dimension d with sigma derived from lambda.
struct RepSpec {
    RepFamily family = RepFamily::Nilpotent;
    int l = 0;
    std::optional<Scalar> lambda;
    std::optional<Scalar> phi;    // M_+ families
    std::optional<Scalar> eps;    // M_- families
    std::optional<Scalar> sigma;  // periodic big families; derived for nilpotent
    int d = 0;                    // nilpotent only

    int dimension(const RootData& root) const;
};

struct Representation {
    RepSpec spec;
    FieldPtr field;
    ExactMatrix mat_e, mat_f, mat_k, mat_kinv;

    int dim() const { return mat_e.dim(); }
};

/// The operators of the standard basis |0>, ..., |dim-1>:
///   Q |m> = q^{-m} |m>,  U |m> = (-1)^m |m>,  P |m> = |m+1>,  P' |m> = |m-1>.
/// Periodic wraps indices mod dim (P invertible, P' = P^{-1}); otherwise
/// P |dim-1> = 0 and P' |0> = 0. Column m holds the image of |m>.
struct QUPOperators {
    ExactMatrix Q, U, P, Pprime;
};
QUPOperators build_qup(const FieldPtr& field, int dim, bool periodic);

/// M_+(lambda, phi, sigma): k = lambda Q, f = phi P,
/// e = (1/(eta phi)) P^{-1} (q^{1/2} lambda Q - q^{-1/2} lambda^{-1} Q^{-1} - sigma U).
Representation build_m_plus(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                            const Scalar& phi, const Scalar& sigma);

/// M_-(lambda, eps, sigma): k = lambda Q, e = eps P^{-1},
/// f = (1/(eta eps)) (q^{1/2} lambda Q - q^{-1/2} lambda^{-1} Q^{-1} - sigma U) P.
Representation build_m_minus(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                             const Scalar& eps, const Scalar& sigma);

/// l odd, sigma = 0, dimension l.
Representation build_m_small(const RootData& root, const FieldPtr& field, const Scalar& lambda,
                             const Scalar& phi_or_eps, bool plus);

/// Nilpotent M_d(lambda): k = lambda Q, f = P,
/// e = (1/eta) P' (q^{1/2} lambda Q - q^{-1/2} lambda^{-1} Q^{-1} - sigma U),
/// sigma = q^{1/2} lambda - q^{-1/2} lambda^{-1}; lambda must satisfy the
/// quantisation condition (q'^d - 1)(lambda^2 - q'^{d-1}) = 0.
Representation build_nilpotent(const RootData& root, const FieldPtr& field, int d,
                               const Scalar& lambda);

/// The four defining relations as exact matrix identities.
bool verify_relations(const Representation& rep);

/// Algebra morphism: sum over terms of coeff * f^a e^b k^c as matrices.
ExactMatrix evaluate(const AlgebraElement& x, const Representation& rep);

/// c when mat = c * identity, nothing otherwise.
inline std::optional<Scalar> scalar_of(const ExactMatrix& mat) { return mat.as_scalar(); }

/// Values of the central elements k^l, k^L, C, E = e^L, F = f^L and (l even)
/// k^{l/2} S on a module; entries that do not act as scalars are recorded
/// as such.
struct CentralCharacter {
    std::vector<std::pair<std::string, std::optional<Scalar>>> values;

    friend bool operator==(const CentralCharacter&, const CentralCharacter&);
};
CentralCharacter central_character(const Representation& rep, const RootData& root);

/// Quantisation condition (q'^d - 1)(lambda^2 - q'^{d-1}) = 0.
bool quantisation_holds(const RootData& root, const FieldPtr& field, int d,
                        const Scalar& lambda);

/// Closed-form irreducibility of M_d(lambda):
///   prod_{n=1}^{d-1} (q'^n - 1)(q^{1/2-d} lambda + q^{d-1/2} lambda^{-1} q'^{-n}) != 0.
/// Usage error when the quantisation condition fails.
bool irreducibility_criterion_nilpotent(const RootData& root, const FieldPtr& field, int d,
                                        const Scalar& lambda);

/// Burnside test: the span of the matrix algebra generated by
/// {1, k, k^{-1}, e, f} has dimension dim^2 iff the module is irreducible
/// (over any field extension).
bool is_irreducible_burnside(const Representation& rep);

/// Invertible T with T rho_A(g) = rho_B(g) T for g in {e, f, k}, if one
/// exists in the solution space (searched deterministically).
std::optional<ExactMatrix> intertwiner(const Representation& repA, const Representation& repB);

/// The explicit M_- -> M_+ basis change T with columns eps^m e^{-m} |0>;
/// requires e invertible on repA. T rho_{M_-}(g) = rho_A(g) T holds when
/// eps^L equals the value of e^L on repA.
ExactMatrix mplus_to_mminus_basis_change(const Representation& mplus, const Scalar& eps);

/// For l odd, sigma = 0 on a big periodic module: split along the two
/// eigenspaces of f^l (e^l for M_-) into two small irreducible pieces.
std::pair<Representation, Representation> split_sigma_zero(const Representation& rep,
                                                           const RootData& root);

/// One nilpotent classification cell: a witness lambda with its verdicts.
struct NilpotentCell {
    int d = 0;
    Scalar lambda;
    Scalar sigma;
    bool lambda_free = false;  // d = l': any lambda satisfies quantisation
    bool criterion = false;    // closed-form irreducibility
    bool burnside = false;     // oracle verdict
    bool relations_ok = false;
};

struct PeriodicFamilyInfo {
    std::string family;
    int dimension = 0;
    std::string parameters;
    std::vector<std::string> equivalences;
    bool witness_relations_ok = false;
    bool witness_scasimir_is_sigma_u = false;
};

struct ClassifyCatalog {
    RootData root;
    std::vector<NilpotentCell> nilpotent;
    std::vector<PeriodicFamilyInfo> periodic;
};

ClassifyCatalog classify(int l);

}  // namespace qosp
