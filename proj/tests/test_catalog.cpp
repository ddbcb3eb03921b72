#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfore/catalog.hpp"

using namespace hopfore;

namespace {

std::string find_residual(const Diagnostic& d, const std::string& check,
                          const std::string& subject) {
    for (const auto& e : d.entries)
        if (e.check == check && e.subject == subject) return e.residual;
    return "<missing>";
}

} // namespace

TEST_CASE("group builders validate their data") {
    FieldSpec f = FieldSpec::Q();
    HopfModel z4 = build_group_algebra(1, {4}, f);
    Element g = Element::generator(*z4.pres, 0);
    CHECK(g.pow(4) == Element::one(*z4.pres));

    // chi(g) = -1 with alpha(g) = 1 satisfies the torsion law on Z/4 ...
    GhoeData ok = build_group_ghoe(z4, {Scalar::from_int(f, -1)}, g.pow(2),
                                   {Scalar::one(f)});
    CHECK(ok.ore.tau[0] == -g);

    // ... but chi(g) = 1 does not (the geometric sum is 4 != 0),
    CHECK_THROWS_WITH_AS(
        build_group_ghoe(z4, {Scalar::one(f)}, g.pow(2), {Scalar::one(f)}),
        doctest::Contains("torsion law"), Error);
    // and chi(g) = 2 is not even a character of Z/4.
    CHECK_THROWS_WITH_AS(
        build_group_ghoe(z4, {Scalar::from_int(f, 2)}, g.pow(2), {Scalar::one(f)}),
        doctest::Contains("character"), Error);

    HopfModel zz = build_group_algebra(2, {0, 0}, f);
    Element g1 = Element::generator(*zz.pres, 0);
    Element g2 = Element::generator(*zz.pres, 1);
    // (chi_2 - 1) alpha_1 = 2 but (chi_1 - 1) alpha_2 = 1: pair law violated.
    CHECK_THROWS_WITH_AS(
        build_group_ghoe(zz, {Scalar::from_int(f, 2), Scalar::from_int(f, 3)},
                         g1 * g2, {Scalar::one(f), Scalar::one(f)}),
        doctest::Contains("pair law"), Error);
    // r must be group-like.
    CHECK_THROWS_WITH_AS(
        build_group_ghoe(zz, {Scalar::from_int(f, 2), Scalar::from_int(f, 3)},
                         g1 + g2, {Scalar::one(f), Scalar::from_int(f, 2)}),
        doctest::Contains("group-like"), Error);
}

TEST_CASE("middle-term builders reject degenerate shapes") {
    FieldSpec f = FieldSpec::Fp(3);
    HopfModel line = build_env(1, true, f);
    Element a = Element::generator(*line.pres, 0);
    Element zero = Element::zero(*line.pres);
    CHECK_THROWS_WITH_AS(
        build_line_middle(line, Scalar::zero(f), a, a * Scalar::from_int(f, 2), zero),
        doctest::Contains("same line"), Error);
    CHECK_NOTHROW(build_line_middle(line, Scalar::zero(f), a, a.pow(3), zero));

    HopfModel env = build_env(2, false, f);
    Element ea = Element::generator(*env.pres, 0);
    Element eb = Element::generator(*env.pres, 1);
    Element ez = Element::zero(*env.pres);
    CHECK_THROWS_WITH_AS(
        build_env2_mixed(env, Scalar::zero(f), Scalar::zero(f), ea, eb, ez, ez),
        doctest::Contains("chi(a) = 0 and chi(b) = 1"), Error);
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(build_named("no-such-entry"), Error);
    CHECK_THROWS_AS(build_named("half-quantum-literal-mut"), Error);
}

TEST_CASE("every catalog entry matches its recorded verdict") {
    std::vector<std::string> names = catalog_names();
    CHECK(names.size() == 57);
    for (const auto& name : names) {
        CAPTURE(name);
        CatalogEntry e = build_named(name);
        CHECK(e.name == name);
        EntryResult r = run_entry(e);
        if (!r.matched) {
            for (const auto& en : r.diag.entries)
                if (!en.pass)
                    MESSAGE(name, ": ", en.check, " / ", en.subject, " -> ", en.residual);
        }
        CHECK(r.matched);
    }
}

TEST_CASE("verdict mismatches are reported as such") {
    CatalogEntry e = build_named("line-zero");
    e.expect_pass = false;
    CHECK(!run_entry(e).matched);
    CatalogEntry e2 = build_named("line-zero");
    e2.expected_failures = {{"B3", "a"}};
    CHECK(!run_entry(e2).matched);
}

TEST_CASE("literal refutation residual is pinned at q = 2") {
    CatalogEntry e = build_named("half-quantum-literal-q2");
    EntryResult r = run_entry(e);
    CHECK(r.matched);
    CHECK(!r.diag.pass);
    const Presentation& p = *e.pres;
    Element k1 = Element::generator(p, p.gen_index("K1"));
    Element k2 = Element::generator(p, p.gen_index("K2"));
    Element e1 = Element::generator(p, p.gen_index("E1"));
    // 1 - q^{-2} = 3/4 at q = 2.
    Scalar c = Scalar::from_mpq(p.field(), mpq_class(3, 4));
    Tensor2 expected = Tensor2::of(k1 * k2 * e1 * c, Element::one(p));
    CHECK(find_residual(r.diag, "B2", "E1") == expected.str());
}

TEST_CASE("the quotient model is a Hopf algebra with the recorded antipode defect") {
    CatalogEntry e = build_named("half-quantum-serre");
    REQUIRE(!e.ghoe.has_value());
    Diagnostic ax = check_hopf_axioms(*e.hopf);
    CHECK(ax.pass);

    Diagnostic idc = serre_identity_checks({e.pres, e.hopf}, *e.q);
    CHECK(find_residual(idc, "serre-delta", "E12") == "0");
    CHECK(find_residual(idc, "serre-counit", "E12") == "0");
    const Presentation& p = *e.pres;
    Element e1 = Element::generator(p, p.gen_index("E1"));
    Element e2 = Element::generator(p, p.gen_index("E2"));
    Element kki = invert_element(Element::generator(p, p.gen_index("K1")) *
                                 Element::generator(p, p.gen_index("K2")));
    Scalar one = Scalar::one(p.field());
    Element defect = kki * e1 * e2 * (one - e.q->pow(-2));
    CHECK(find_residual(idc, "serre-antipode", "E12") == defect.str());

    EntryResult r = run_entry(e);
    CHECK(r.matched);
}

TEST_CASE("the quadratic generator emerges from the literal bracket") {
    for (Scalar q : {Scalar::variable(FieldSpec::Qt()),
                     Scalar::from_int(FieldSpec::Q(), 2)}) {
        CAPTURE(q.str());
        Diagnostic d = serre_emergence_check(q);
        CHECK(d.pass);
        CHECK(find_residual(d, "emerge-delta", "E12") == "0");
        CHECK(find_residual(d, "emerge-bracket", "E12") == "0");
        CHECK(find_residual(d, "emerge-nonzero", "serre") != "0");
        CHECK(find_residual(d, "emerge-quotient", "serre") == "0");
    }
}
