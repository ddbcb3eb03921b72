#ifndef HOPFORE_CATALOG_HPP
#define HOPFORE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfore/ghoe.hpp"

namespace hopfore {

/// A presentation together with a Hopf structure on it.
struct HopfModel {
    std::shared_ptr<Presentation> pres;
    std::shared_ptr<HopfStructure> hopf;
};

/// Group algebra of Z^rank (torsion[i] = n > 0 turns factor i into Z/n)
/// with every generator group-like.
HopfModel build_group_algebra(int rank, const std::vector<long>& torsion,
                              const FieldSpec& f);

/// Enveloping algebra of a dim-dimensional Lie algebra with primitive
/// generators a, b, c, ...; abelian, or (dim = 2 only) the solvable plane
/// with b a = a b - a.
HopfModel build_env(int dim, bool abelian, const FieldSpec& f);

/// Extension data on a group algebra: tau(g_i) = chi_i g_i,
/// delta(g_i) = alpha_i (1 - r) g_i, r1 = 1, r2 = r. Checks that chi is a
/// character, r is group-like, and the compatibility law
/// (chi_j - 1) alpha_i = (chi_i - 1) alpha_j (plus its torsion analogue
/// sum_k chi_i^k alpha_i = 0) holds; Error("CocycleViolation") otherwise.
GhoeData build_group_ghoe(const HopfModel& m, const std::vector<Scalar>& chi,
                          const Element& r, const std::vector<Scalar>& alpha);

/// Extension data on the polynomial line k[a] with a middle term:
/// tau(a) = a + chi_a, Delta(z) = z (x) 1 + x (x) y + 1 (x) z. Rejects
/// x and y spanning the same line (the middle term would be removable);
/// Error("BadParameters").
GhoeData build_line_middle(const HopfModel& m, const Scalar& chi_a,
                           const Element& x, const Element& y,
                           const Element& delta_a);

/// Extension data on a 2-generator enveloping algebra with
/// tau(a) = a + chi_a, tau(b) = b + chi_b and r1 = r2 = 1.
GhoeData build_env2_ghoe(const HopfModel& m, const Scalar& chi_a,
                         const Scalar& chi_b, const Element& x, const Element& y,
                         const Element& delta_a, const Element& delta_b);

/// The mixed middle-term family on the solvable plane: requires
/// chi_a = 0 and chi_b = 1 (Error("BadParameters") otherwise).
GhoeData build_env2_mixed(const HopfModel& m, const Scalar& chi_a,
                          const Scalar& chi_b, const Element& x, const Element& y,
                          const Element& delta_a, const Element& delta_b);

/// The 4-generator half-quantum model: invertible group-likes K1, K2 and
/// skew-primitives E1, E2 with E_i K_j commutation but no relation between
/// E1 and E2. q must be a nonzero scalar (the field is taken from q).
HopfModel build_half_quantum_literal(const Scalar& q);

/// The literal extension data on that model: tau multiplies generators by
/// powers of q, delta = 0, Delta(z) = z (x) 1 + (q - q^{-1}) K2 E1 (x) E2
/// + K1 K2 (x) z. This data is NOT balanced; it is the standard refutation
/// instance.
GhoeData half_quantum_literal_data(const Scalar& q);

/// The 5-generator quotient model with the extra generator E12 and the
/// quadratic relation E2 E1 = q E1 E2 - q E12 (so the degree-3 relation
/// E1^2 E2 - (q + q^{-1}) E1 E2 E1 + E2 E1^2 = 0 holds).
HopfModel build_half_quantum_serre(const Scalar& q);

/// One catalog instance: either extension data (ghoe set) or a bare Hopf
/// model, with the expected verdict. expected_failures lists
/// (check, subject) pairs that must appear as failures.
struct CatalogEntry {
    std::string name;
    std::string description;
    std::vector<std::string> tags;
    std::optional<GhoeData> ghoe;
    std::shared_ptr<Presentation> pres; ///< bare Hopf entries
    std::shared_ptr<HopfStructure> hopf;
    std::optional<Scalar> q; ///< deformation parameter, quantum entries
    bool expect_pass = true;
    std::vector<std::pair<std::string, std::string>> expected_failures;
};

/// All entry names, positive instances first, then the negative controls
/// (suffix "-mut").
std::vector<std::string> catalog_names();

/// Builds an entry by name; Error("UnknownName") otherwise.
CatalogEntry build_named(const std::string& name);

std::vector<CatalogEntry> all_entries();

struct EntryResult {
    bool matched = false; ///< verdict and expected failures both as recorded
    Diagnostic diag;
};

/// Runs the full battery on an entry (attach_and_verify for extension data,
/// Hopf axioms plus the quotient identities for bare Hopf entries) and
/// compares the outcome against the recorded expectation.
EntryResult run_entry(const CatalogEntry& e);

/// On a half-quantum model: check that w = E1 E2 - q^{-1} E2 E1 is
/// (K1K2,1)-skew-primitive up to the literal middle term, has counit 0, and
/// that the antipode identity S(w) = -(K1 K2)^{-1} w fails by the exact
/// defect (1 - q^{-2}) K1^{-1} K2^{-1} E1 E2.
Diagnostic serre_identity_checks(const HopfModel& m, const Scalar& q);

/// The emergence computation: in the literal model the bracket
/// w E1 - q^{-1} E1 w equals -q^{-1} times the degree-3 element
/// E1^2 E2 - (q + q^{-1}) E1 E2 E1 + E2 E1^2, which is nonzero there but
/// normalizes to zero in the quotient model.
Diagnostic serre_emergence_check(const Scalar& q);

} // namespace hopfore

#endif
