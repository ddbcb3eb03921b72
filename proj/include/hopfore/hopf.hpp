#ifndef HOPFORE_HOPF_HPP
#define HOPFORE_HOPF_HPP

#include <memory>
#include <optional>
#include <vector>

#include "hopfore/diagnostics.hpp"
#include "hopfore/ncpoly.hpp"

namespace hopfore {

/// Hopf data on a presentation: comultiplication, counit and antipode given
/// on generators, extended as algebra map / algebra map / antihomomorphism.
class HopfStructure {
public:
    explicit HopfStructure(std::shared_ptr<const Presentation> p);

    void set_delta(int gen, Tensor2 d);
    void set_counit(int gen, Scalar c);
    void set_antipode(int gen, Element s);
    /// All generators covered; invertible non-torsion generators must be
    /// group-like (their negative letters need Delta(g^{-1}) = g^{-1} (x) g^{-1}).
    void validate() const;

    const Presentation& pres() const { return *p_; }
    const std::shared_ptr<const Presentation>& pres_ptr() const { return p_; }

    const Tensor2& delta_gen(int g) const;
    const Scalar& counit_gen(int g) const;
    const Element& antipode_gen(int g) const;

    Tensor2 delta_mono(const Monomial& m) const;
    Tensor2 delta(const Element& e) const;
    Scalar counit(const Element& e) const;
    Element antipode(const Element& e) const;

private:
    std::shared_ptr<const Presentation> p_;
    std::vector<std::optional<Tensor2>> delta_;
    std::vector<std::optional<Scalar>> counit_;
    std::vector<std::optional<Element>> antipode_;
};

/// Full axiom suite: per generator coassociativity, counit laws, antipode
/// convolution laws (also on all degree-2 products), per relation the
/// compatibility of Delta, epsilon and S, torsion relations, and local
/// confluence of the underlying rewriting system.
Diagnostic check_hopf_axioms(const HopfStructure& h);

bool is_grouplike(const HopfStructure& h, const Element& e);
/// Delta(a) = a (x) g + h (x) a.
bool is_skew_primitive(const HopfStructure& h, const Element& a,
                       const Element& g, const Element& hh);

/// Sum a_(1) * b * S(a_(2)) (conjugation by a when a is group-like).
Element adjoint(const HopfStructure& h, const Element& a, const Element& b);

/// Multiplicative character determined by generator values.
struct Character {
    std::shared_ptr<const Presentation> pres;
    std::vector<Scalar> values;
    Scalar eval(const Element& e) const;
};

/// Verifies the values define an algebra map to the ground field (relations,
/// torsion, nonzero on invertible generators).
Diagnostic check_character(const Presentation& p, const std::vector<Scalar>& values);

struct SkewPrimSolutions {
    Element particular;
    std::vector<Element> kernel;
};

/// Solve Delta(c) - c (x) g - h (x) c = rhs for c in the span of normal
/// monomials of degree <= bound. nullopt when no solution exists in the
/// whole algebra representable within the bound; throws
/// Error("DegreeBoundExceeded") when the rhs itself needs larger degrees and
/// Error("NotGrouplike") when g or h is not group-like.
std::optional<SkewPrimSolutions> solve_skew_primitive_equation(
    const HopfStructure& h, const Tensor2& rhs, const Element& g,
    const Element& hh, long bound);

} // namespace hopfore

#endif
