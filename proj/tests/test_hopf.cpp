#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfore/expr.hpp"
#include "hopfore/hopf.hpp"

using namespace hopfore;

namespace {

struct Model {
    std::shared_ptr<Presentation> p;
    std::shared_ptr<HopfStructure> h;
};

/// Polynomial Hopf algebra k[a] with a primitive.
Model poly_line(const FieldSpec& f) {
    auto p = Presentation::create(f);
    int a = p->add_generator({"a"});
    p->finalize();
    auto h = std::make_shared<HopfStructure>(p);
    Element ae = Element::generator(*p, a), one = Element::one(*p);
    h->set_delta(a, Tensor2::of(ae, one) + Tensor2::of(one, ae));
    h->set_counit(a, Scalar::zero(f));
    h->set_antipode(a, -ae);
    h->validate();
    return {p, h};
}

/// Group algebra of Z with one invertible group-like generator.
Model group_line() {
    auto p = Presentation::create(FieldSpec::Q());
    int g = p->add_generator({"g", true});
    p->finalize();
    auto h = std::make_shared<HopfStructure>(p);
    Element ge = Element::generator(*p, g);
    h->set_delta(g, Tensor2::of(ge, ge));
    h->set_counit(g, Scalar::one(p->field()));
    h->set_antipode(g, invert_element(ge));
    h->validate();
    return {p, h};
}

/// Independent binomial oracle (Pascal's triangle over the given field).
std::vector<std::vector<Scalar>> pascal(const FieldSpec& f, int n) {
    std::vector<std::vector<Scalar>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, Scalar::one(f));
        for (int j = 1; j < i; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return c;
}

} // namespace

TEST_CASE("Hopf axioms hold for the primitive line and the group line") {
    for (const FieldSpec& f : {FieldSpec::Q(), FieldSpec::Fp(2), FieldSpec::Fp(3)}) {
        Model m = poly_line(f);
        Diagnostic d = check_hopf_axioms(*m.h);
        CHECK(d.pass);
    }
    Model g = group_line();
    CHECK(check_hopf_axioms(*g.h).pass);
}

TEST_CASE("a wrong antipode is caught by the convolution law") {
    auto p = Presentation::create(FieldSpec::Q());
    int a = p->add_generator({"a"});
    p->finalize();
    HopfStructure h(p);
    Element ae = Element::generator(*p, a), one = Element::one(*p);
    h.set_delta(a, Tensor2::of(ae, one) + Tensor2::of(one, ae));
    h.set_counit(a, Scalar::zero(p->field()));
    h.set_antipode(a, ae); // wrong sign
    h.validate();
    Diagnostic d = check_hopf_axioms(h);
    CHECK_FALSE(d.pass);
    CHECK(d.has_failure("antipode-left", "a"));
}

TEST_CASE("binomial comultiplication against an independent oracle") {
    for (const FieldSpec& f : {FieldSpec::Q(), FieldSpec::Fp(2), FieldSpec::Fp(3)}) {
        Model m = poly_line(f);
        auto c = pascal(f, 8);
        for (int n = 1; n <= 8; ++n) {
            Tensor2 got = m.h->delta(Element::generator(*m.p, 0).pow(n));
            Tensor2 want = Tensor2::zero(*m.p);
            for (int k = 0; k <= n; ++k)
                want += Tensor2::of(Element::generator(*m.p, 0).pow(k),
                                    Element::generator(*m.p, 0).pow(n - k)) *
                        c[static_cast<size_t>(n)][static_cast<size_t>(k)];
            CHECK(got == want);
        }
    }
}

TEST_CASE("a^p is primitive in characteristic p, a^2 is not in characteristic 0") {
    for (long pr : {2L, 3L}) {
        Model m = poly_line(FieldSpec::Fp(pr));
        Element ap = Element::generator(*m.p, 0).pow(pr);
        CHECK(is_skew_primitive(*m.h, ap, Element::one(*m.p), Element::one(*m.p)));
    }
    Model q = poly_line(FieldSpec::Q());
    Element a2 = Element::generator(*q.p, 0).pow(2);
    CHECK_FALSE(is_skew_primitive(*q.h, a2, Element::one(*q.p), Element::one(*q.p)));
}

TEST_CASE("group-likes and adjoint action") {
    Model g = group_line();
    Element ge = Element::generator(*g.p, 0);
    CHECK(is_grouplike(*g.h, ge));
    CHECK(is_grouplike(*g.h, ge.pow(3)));
    CHECK(is_grouplike(*g.h, invert_element(ge)));
    CHECK_FALSE(is_grouplike(*g.h, ge + Element::one(*g.p)));
    CHECK_FALSE(is_grouplike(*g.h, Element::zero(*g.p)));
    CHECK(adjoint(*g.h, ge, ge.pow(2)) == ge.pow(2));

    // skew pair: conjugation picks up the commutation scalar
    auto p = Presentation::create(FieldSpec::Q());
    int g1 = p->add_generator({"g1", true});
    int g2 = p->add_generator({"g2", true});
    Element G1 = Element::generator(*p, g1), G2 = Element::generator(*p, g2);
    p->add_rule({g2, false}, {g1, false}, G1 * G2 * Scalar::from_int(p->field(), 2));
    p->finalize();
    HopfStructure h(p);
    for (int i : {g1, g2}) {
        Element e = Element::generator(*p, i);
        h.set_delta(i, Tensor2::of(e, e));
        h.set_counit(i, Scalar::one(p->field()));
        h.set_antipode(i, invert_element(e));
    }
    h.validate();
    // note: this is not a Hopf algebra (group-likes must commute, and indeed
    // the delta-relation check refuses the skew rule) but the adjoint action
    // formula is still exercised by it
    CHECK(check_hopf_axioms(h).has_failure("delta-relation", "g2*g1"));
    CHECK(adjoint(h, G1, G2) == G2 * Scalar::from_mpq(p->field(), mpq_class(1, 2)));
}

TEST_CASE("characters verify against relations") {
    auto p = Presentation::create(FieldSpec::Q());
    int g1 = p->add_generator({"g1", true});
    int g2 = p->add_generator({"g2", true});
    Element G1 = Element::generator(*p, g1), G2 = Element::generator(*p, g2);
    p->add_rule({g2, false}, {g1, false}, G1 * G2); // commuting torus
    p->finalize();
    std::vector<Scalar> vals{Scalar::from_int(p->field(), 5), Scalar::from_int(p->field(), -7)};
    CHECK(check_character(*p, vals).pass);
    Character chi{p, vals};
    CHECK(chi.eval(G1 * G2) == Scalar::from_int(p->field(), -35));
    CHECK(chi.eval(invert_element(G1)) == Scalar::from_mpq(p->field(), mpq_class(1, 5)));

    // with a genuinely skew rule no character exists
    auto ps = Presentation::create(FieldSpec::Q());
    int s1 = ps->add_generator({"g1", true});
    int s2 = ps->add_generator({"g2", true});
    ps->add_rule({s2, false}, {s1, false},
                 Element::generator(*ps, s1) * Element::generator(*ps, s2) *
                     Scalar::from_int(ps->field(), 2));
    ps->finalize();
    CHECK_FALSE(check_character(*ps, vals).pass);
    // zero on an invertible generator is rejected
    std::vector<Scalar> bad{Scalar::zero(p->field()), Scalar::one(p->field())};
    CHECK_FALSE(check_character(*p, bad).pass);
}

TEST_CASE("skew-primitive solver: kernel of the primitive equation") {
    Model m = poly_line(FieldSpec::Q());
    Element one = Element::one(*m.p);
    auto sol = solve_skew_primitive_equation(*m.h, Tensor2::zero(*m.p), one, one, 6);
    REQUIRE(sol.has_value());
    CHECK(sol->particular.is_zero());
    REQUIRE(sol->kernel.size() == 1);
    CHECK(sol->kernel[0] == Element::generator(*m.p, 0));
}

TEST_CASE("skew-primitive solver: pinned characteristic-3 instance") {
    Model m = poly_line(FieldSpec::Fp(3));
    Element a = Element::generator(*m.p, 0), one = Element::one(*m.p);
    Tensor2 rhs = Tensor2::of(a, a) * Scalar::from_int(m.p->field(), -1); // -a (x) a
    auto sol = solve_skew_primitive_equation(*m.h, rhs, one, one, 3);
    REQUIRE(sol.has_value());
    // a^2 solves the equation (2 = -1 mod 3 gives Delta(a^2) correction -a (x) a)
    Element a2 = a.pow(2);
    CHECK(m.h->delta(a2) - Tensor2::of(a2, one) - Tensor2::of(one, a2) == rhs);
    // the particular solution differs from a^2 by a primitive
    Element diff = sol->particular - a2;
    CHECK(m.h->delta(diff) == Tensor2::of(diff, one) + Tensor2::of(one, diff));
    // kernel is exactly span{a, a^3} at this bound
    REQUIRE(sol->kernel.size() == 2);
    for (const Element& k : sol->kernel)
        CHECK(m.h->delta(k) == Tensor2::of(k, one) + Tensor2::of(one, k));
}

TEST_CASE("skew-primitive solver: group-like flanked solutions") {
    Model g = group_line();
    Element ge = Element::generator(*g.p, 0), one = Element::one(*g.p);
    // Delta(c) - c (x) 1 - g (x) c = (g - 1) (x) (1 - g) has solution c = 1 - g
    Element c = one - ge;
    Tensor2 rhs = g.h->delta(c) - Tensor2::of(c, one) - Tensor2::of(ge, c);
    auto sol = solve_skew_primitive_equation(*g.h, rhs, one, ge, 3);
    REQUIRE(sol.has_value());
    Element got = sol->particular;
    CHECK(g.h->delta(got) - Tensor2::of(got, one) - Tensor2::of(ge, got) == rhs);
    // c = 1 - g itself spans the homogeneous solutions
    for (const Element& k : sol->kernel)
        CHECK((g.h->delta(k) - Tensor2::of(k, one) - Tensor2::of(ge, k)).is_zero());
    bool found = false;
    for (const Element& k : sol->kernel) found = found || k == c || k == -c;
    CHECK(found);
}

TEST_CASE("skew-primitive solver: no solution and error cases") {
    Model m = poly_line(FieldSpec::Q());
    Element a = Element::generator(*m.p, 0), one = Element::one(*m.p);
    // -a (x) a has no solution in characteristic 0 within any bound:
    // Delta(c) correction of a^2 gives 2 mu = -1, but then matching fails at
    // no other monomial; actually mu = -1/2 works, so use a (x) a^2 + a^2 (x) a
    // scaled asymmetrically to break symmetry.
    Tensor2 bad = Tensor2::of(a, a.pow(2));
    CHECK_FALSE(solve_skew_primitive_equation(*m.h, bad, one, one, 5).has_value());
    CHECK_THROWS_AS(solve_skew_primitive_equation(*m.h, Tensor2::zero(*m.p), a, one, 3), Error);
    try {
        solve_skew_primitive_equation(*m.h, Tensor2::of(a.pow(4), a), one, one, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == "DegreeBoundExceeded");
    }
}
