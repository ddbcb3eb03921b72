#ifndef HOPFORE_GHOE_HPP
#define HOPFORE_GHOE_HPP

#include <memory>
#include <optional>
#include <variant>

#include "hopfore/hopf.hpp"
#include "hopfore/ore.hpp"

namespace hopfore {

/// Candidate comultiplication data for the extension variable:
/// Delta(z) = z (x) r1 + x (x) y + r2 (x) z with r1, r2 group-like.
struct GhoeData {
    std::shared_ptr<const Presentation> A;
    std::shared_ptr<HopfStructure> hopf; ///< Hopf structure on A
    OreData ore;                         ///< tau/delta data on A
    Element r1, r2, x, y;                ///< in A
    std::optional<std::vector<Scalar>> chi; ///< declared character (optional)
};

struct CaseA {}; // x = 0 or y = 0
struct CaseB {   // x, y scalar multiples of r2, r1
    Scalar alpha, beta;
};
struct CaseC { // x is (r3,r2)-skew-primitive, y is (r1,r3)-skew-primitive
    Element r3;
};
struct CaseInvalid {
    std::string reason;
};
using Classification = std::variant<CaseA, CaseB, CaseC, CaseInvalid>;

/// Trichotomy on the middle term x (x) y of Delta(z).
Classification classify_quadruple(const GhoeData& d);

/// Rewrites the data into the normalized shape with x (1,r2)- and
/// y (r1,1)-skew-primitive: case A/B fold x,y into the derivation (case B
/// replaces delta by delta + alpha*beta*(r2 a - tau(a) r2)); case C with
/// r3 != 1 left-divides r1, r2, x, y by r3, conjugates tau, and rescales
/// delta. Throws Error("BadParameters") on invalid data.
GhoeData normalize_case(const GhoeData& d);

struct AttachResult {
    std::shared_ptr<Presentation> H; ///< the extension A[z; tau, delta]
    std::shared_ptr<HopfStructure> Hhopf;
    int z_index = -1;
    Classification cls;
    Diagnostic diag;
};

/// Builds H = A[z; tau, delta], installs the candidate Hopf structure and
/// runs the full battery: Ore data checks, the balance checks B1-B3 per
/// generator (the free-module components of
/// Delta(z)Delta(a) - Delta(tau a)Delta(z) - Delta(delta a)),
/// B4 (counit of the derivation) and B5 (the full Hopf axiom suite on H).
AttachResult attach_and_verify(const GhoeData& d);

struct CharacterResult {
    bool ok = false;
    std::vector<Scalar> values;
    std::string message;
};

/// Derives the character chi(a) = tau(a_(1)) r1 S(a_(2)) r1^{-1} (requires
/// normalized data); fails with a message when some value is not scalar,
/// when the reconstruction tau(a) = chi(a_(1)) r1 a_(2) r1^{-1} fails, or
/// when a declared character disagrees.
CharacterResult derive_character(const GhoeData& d);

/// The equivalent-characterization conditions: t1 (tau is reconstructed
/// from chi), t2 (left/right reconstructions agree), t3 (the derivation
/// balance), plus the reduction of t3 to its delta-only form when
/// Delta(tau a)(x (x) y) = (x (x) y)Delta(a) holds for every generator.
Diagnostic check_theorem_conditions(const GhoeData& d, const std::vector<Scalar>& chi);

/// Consequences: chi is convolution-invertible via chi o S, tau is
/// invertible with both closed forms agreeing, r1 r2 = r2 r1, centrality of
/// r1^{-1} r2 under cocommutativity, chi-symmetry under commutativity.
Diagnostic check_corollaries(const GhoeData& d, const std::vector<Scalar>& chi);

} // namespace hopfore

#endif
