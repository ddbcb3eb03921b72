#ifndef HOPFORE_ORE_HPP
#define HOPFORE_ORE_HPP

#include <memory>

#include "hopfore/hopf.hpp"
#include "hopfore/ncpoly.hpp"

namespace hopfore {

/// Data of a skew-polynomial extension A[z; tau, delta]: an algebra
/// endomorphism tau and a tau-derivation delta of A, given on generators.
struct OreData {
    std::shared_ptr<const Presentation> A;
    std::vector<Element> tau;   ///< one image per generator of A
    std::vector<Element> delta; ///< one image per generator of A
    std::string z_name = "z";
};

/// tau extended as an algebra endomorphism; tau(g^{-1}) = tau(g)^{-1}
/// (throws Error("NonInvertibleT") when tau(g) is not a unit).
Element apply_tau(const OreData& d, const Element& e);

/// delta extended by the twisted Leibniz rule
/// delta(uv) = tau(u) delta(v) + delta(u) v, with
/// delta(g^{-1}) = -tau(g)^{-1} delta(g) g^{-1}.
Element apply_delta(const OreData& d, const Element& e);

/// Verifies tau respects the relations of A (including torsion) and that
/// delta is consistent on them via the twisted Leibniz rule. Throws
/// Error("NonInvertibleT") when tau maps a unit generator to a non-unit.
Diagnostic check_ore_data(const OreData& d);

struct OreExtension {
    std::shared_ptr<Presentation> H; ///< A with z appended and z-rules added
    int z_index = -1;
};

/// Builds the presentation of A[z; tau, delta] with rewriting rules
/// z*g -> tau(g) z + delta(g) for every generator letter (both signs for
/// invertible generators). The weight of z is chosen large enough for the
/// termination order to admit every delta image.
OreExtension build_ore_extension(const OreData& d);

} // namespace hopfore

#endif
