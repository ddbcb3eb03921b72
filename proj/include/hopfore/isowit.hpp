#ifndef HOPFORE_ISOWIT_HPP
#define HOPFORE_ISOWIT_HPP

#include <optional>
#include <utility>
#include <variant>

#include "hopfore/ghoe.hpp"

namespace hopfore {

/// Witness for an isomorphism of extensions: a Hopf isomorphism Phi of the
/// bases given by generator images (with its inverse), a unit scalar lambda,
/// a group-like r and an element b of the target, encoding
/// Psi(z) = lambda * r * (z' + b).
struct IsoWitness {
    Scalar lambda;
    Element r, b;                ///< in the target base algebra
    std::vector<Element> phi;    ///< image in A' per generator of A
    std::vector<Element> phi_inv; ///< image in A per generator of A'
};

/// Checks that the witness exhibits an isomorphism H -> H' of extensions:
/// Phi is a Hopf algebra map respecting the relations of A with the supplied
/// inverse, and the four compatibility conditions
///   (a) Phi(r_i) = r r_i'
///   (b) Delta'(b) = b (x) r1' + r2' (x) b
///                   + lambda^{-1} r^{-1}Phi(x) (x) r^{-1}Phi(y) - x' (x) y'
///       together with counit'(b) = 0
///   (c) chi' o Phi = chi on generators (with the derived characters), and
///       tau'(Phi(a)) = r^{-1} Phi(tau(a)) r
///   (d) delta'(a') = lambda^{-1} r^{-1} Phi(delta(Phi^{-1}(a')))
///                    + tau'(a') b - b a'
/// hold exactly. Throws Error("BadWitness") when lambda = 0, r is not
/// group-like, or phi/phi_inv are not mutually inverse generator maps.
Diagnostic verify_witness(const GhoeData& H, const GhoeData& Hp, const IsoWitness& w);

/// The reverse witness H' -> H of a verified witness H -> H'.
IsoWitness reverse_witness(const GhoeData& H, const GhoeData& Hp, const IsoWitness& w);

/// Standard transformations producing an isomorphic instance plus the
/// witness that verify_witness accepts.
struct RescaleXY {      // x -> alpha x, y -> beta y, delta -> alpha beta delta
    Scalar alpha, beta; // both nonzero
};
struct AbsorbX {        // requires x = alpha (1 - r2); folds x,y into delta
    Scalar alpha;
};
struct AbsorbY {        // requires y = beta (1 - r1); folds x,y into delta
    Scalar beta;
};
struct AbsorbDiagonal { // requires y = alpha x, r1 = r2 = 1, char != 2
    Scalar alpha;
};
struct TransportHopf {  // push the whole instance through a Hopf isomorphism
    std::shared_ptr<const Presentation> target;
    std::shared_ptr<HopfStructure> hopf;
    std::vector<Element> phi;     ///< per generator of the source base
    std::vector<Element> phi_inv; ///< per generator of the target base
};
using IsoTransform =
    std::variant<RescaleXY, AbsorbX, AbsorbY, AbsorbDiagonal, TransportHopf>;

/// Applies the chosen transformation; throws Error("PreconditionViolated")
/// when its shape requirement fails.
std::pair<GhoeData, IsoWitness> iso_transform(const GhoeData& d, const IsoTransform& t);

struct WitnessSearch {
    std::optional<IsoWitness> witness;
    std::string no_witness_reason; ///< set when no witness exists
};

/// Decides isomorphism for extensions of the polynomial line k[a] with a
/// primitive: parameterizes Phi(a) = alpha a, r = 1, b of degree <= bound.
/// Characteristic 0 instances are solved exactly (and must have x = y = 0);
/// characteristic p instances by exhaustive search over (lambda, alpha) in
/// (F_p^x)^2 in lexicographic order with the skew-primitive solver supplying
/// b. Throws Error("UnsupportedBase") for any other base algebra.
WitnessSearch solve_witness_1dim(const GhoeData& H, const GhoeData& Hp, long bound = 12);

} // namespace hopfore

#endif
