#include "hopfore/catalog.hpp"

#include <functional>

namespace hopfore {

namespace {

Element gen_by_name(const Presentation& p, const std::string& name) {
    int i = p.gen_index(name);
    if (i < 0) throw Error("BadParameters", "no generator named " + name);
    return Element::generator(p, i);
}

/// y = c * x for some scalar c (both nonzero, same monomial support).
bool same_line(const Element& x, const Element& y) {
    if (x.is_zero() || y.is_zero()) return false;
    if (x.terms().size() != y.terms().size()) return false;
    std::optional<Scalar> ratio;
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    for (; ix != x.terms().end(); ++ix, ++iy) {
        if (!(ix->first == iy->first)) return false;
        Scalar c = iy->second / ix->second;
        if (ratio && !(*ratio == c)) return false;
        ratio = c;
    }
    return true;
}

} // namespace

HopfModel build_group_algebra(int rank, const std::vector<long>& torsion,
                              const FieldSpec& f) {
    if (rank < 1 || torsion.size() != static_cast<size_t>(rank))
        throw Error("BadParameters", "rank/torsion mismatch");
    auto p = Presentation::create(f);
    for (int i = 0; i < rank; ++i) {
        std::string name = rank == 1 ? "g" : "g" + std::to_string(i + 1);
        p->add_generator({name, true, torsion[static_cast<size_t>(i)]});
    }
    for (int j = 1; j < rank; ++j)
        for (int i = 0; i < j; ++i)
            p->add_rule({j, false}, {i, false},
                        Element::generator(*p, i) * Element::generator(*p, j));
    p->finalize();
    auto h = std::make_shared<HopfStructure>(p);
    for (int i = 0; i < rank; ++i) {
        Element g = Element::generator(*p, i);
        h->set_delta(i, Tensor2::of(g, g));
        h->set_counit(i, Scalar::one(f));
        h->set_antipode(i, invert_element(g));
    }
    return {p, h};
}

HopfModel build_env(int dim, bool abelian, const FieldSpec& f) {
    if (dim < 1 || dim > 8) throw Error("BadParameters", "dimension out of range");
    if (!abelian && dim != 2)
        throw Error("BadParameters", "non-abelian model needs dimension 2");
    auto p = Presentation::create(f);
    for (int i = 0; i < dim; ++i)
        p->add_generator({std::string(1, static_cast<char>('a' + i))});
    if (abelian) {
        for (int j = 1; j < dim; ++j)
            for (int i = 0; i < j; ++i)
                p->add_rule({j, false}, {i, false},
                            Element::generator(*p, i) * Element::generator(*p, j));
    } else {
        Element a = Element::generator(*p, 0), b = Element::generator(*p, 1);
        p->add_rule({1, false}, {0, false}, a * b - a);
    }
    p->finalize();
    auto h = std::make_shared<HopfStructure>(p);
    Element one = Element::one(*p);
    for (int i = 0; i < dim; ++i) {
        Element g = Element::generator(*p, i);
        h->set_delta(i, Tensor2::of(g, one) + Tensor2::of(one, g));
        h->set_counit(i, Scalar::zero(f));
        h->set_antipode(i, -g);
    }
    return {p, h};
}

GhoeData build_group_ghoe(const HopfModel& m, const std::vector<Scalar>& chi,
                          const Element& r, const std::vector<Scalar>& alpha) {
    const Presentation& p = *m.pres;
    int n = p.num_generators();
    if (chi.size() != static_cast<size_t>(n) || alpha.size() != static_cast<size_t>(n))
        throw Error("BadParameters", "one chi and alpha value per generator");
    if (!check_character(p, chi).pass)
        throw Error("BadParameters", "chi is not a character");
    if (!is_grouplike(*m.hopf, r))
        throw Error("BadParameters", "r must be group-like");
    Scalar one = Scalar::one(p.field());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
            if (!((chi[sj] - one) * alpha[si] == (chi[si] - one) * alpha[sj]))
                throw Error("CocycleViolation",
                            "pair law fails on generators " + p.gen(i).name + ", " +
                                p.gen(j).name);
        }
        long t = p.gen(i).torsion;
        if (t > 0) {
            Scalar s = Scalar::zero(p.field());
            for (long k = 0; k < t; ++k) s += chi[static_cast<size_t>(i)].pow(k);
            if (!(s * alpha[static_cast<size_t>(i)]).is_zero())
                throw Error("CocycleViolation",
                            "torsion law fails on generator " + p.gen(i).name);
        }
    }
    GhoeData d;
    d.A = m.pres;
    d.hopf = m.hopf;
    d.ore.A = m.pres;
    Element rone = Element::one(p);
    for (int i = 0; i < n; ++i) {
        Element g = Element::generator(p, i);
        d.ore.tau.push_back(g * chi[static_cast<size_t>(i)]);
        d.ore.delta.push_back((rone - r) * g * alpha[static_cast<size_t>(i)]);
    }
    d.r1 = rone;
    d.r2 = r;
    d.x = Element::zero(p);
    d.y = Element::zero(p);
    d.chi = chi;
    return d;
}

GhoeData build_line_middle(const HopfModel& m, const Scalar& chi_a,
                           const Element& x, const Element& y,
                           const Element& delta_a) {
    const Presentation& p = *m.pres;
    if (p.num_generators() != 1 || p.gen(0).invertible)
        throw Error("BadParameters", "base must be the polynomial line");
    if (same_line(x, y))
        throw Error("BadParameters",
                    "x and y span the same line; absorb the middle term instead");
    GhoeData d;
    d.A = m.pres;
    d.hopf = m.hopf;
    Element a = Element::generator(p, 0);
    d.ore = {m.pres, {a + Element::constant(p, chi_a)}, {delta_a}};
    d.r1 = Element::one(p);
    d.r2 = Element::one(p);
    d.x = x;
    d.y = y;
    d.chi = std::vector<Scalar>{chi_a};
    return d;
}

GhoeData build_env2_ghoe(const HopfModel& m, const Scalar& chi_a,
                         const Scalar& chi_b, const Element& x, const Element& y,
                         const Element& delta_a, const Element& delta_b) {
    const Presentation& p = *m.pres;
    if (p.num_generators() != 2)
        throw Error("BadParameters", "base must have two generators");
    GhoeData d;
    d.A = m.pres;
    d.hopf = m.hopf;
    Element a = Element::generator(p, 0), b = Element::generator(p, 1);
    d.ore = {m.pres,
             {a + Element::constant(p, chi_a), b + Element::constant(p, chi_b)},
             {delta_a, delta_b}};
    d.r1 = Element::one(p);
    d.r2 = Element::one(p);
    d.x = x;
    d.y = y;
    d.chi = std::vector<Scalar>{chi_a, chi_b};
    return d;
}

GhoeData build_env2_mixed(const HopfModel& m, const Scalar& chi_a,
                          const Scalar& chi_b, const Element& x, const Element& y,
                          const Element& delta_a, const Element& delta_b) {
    if (!chi_a.is_zero() || !chi_b.is_one())
        throw Error("BadParameters",
                    "the mixed family needs chi(a) = 0 and chi(b) = 1");
    return build_env2_ghoe(m, chi_a, chi_b, x, y, delta_a, delta_b);
}

HopfModel build_half_quantum_literal(const Scalar& q) {
    if (q.is_zero()) throw Error("BadParameters", "q must be nonzero");
    FieldSpec f = q.field();
    auto p = Presentation::create(f);
    int K1 = p->add_generator({"K1", true});
    int K2 = p->add_generator({"K2", true});
    int E1 = p->add_generator({"E1"});
    int E2 = p->add_generator({"E2"});
    Element k1 = Element::generator(*p, K1), k2 = Element::generator(*p, K2);
    Element e1 = Element::generator(*p, E1), e2 = Element::generator(*p, E2);
    p->add_rule({K2, false}, {K1, false}, k1 * k2);
    p->add_rule({E1, false}, {K1, false}, k1 * e1 * q.pow(-2));
    p->add_rule({E1, false}, {K2, false}, k2 * e1 * q);
    p->add_rule({E2, false}, {K1, false}, k1 * e2 * q);
    p->add_rule({E2, false}, {K2, false}, k2 * e2 * q.pow(-2));
    p->finalize();

    auto h = std::make_shared<HopfStructure>(p);
    for (int k : {K1, K2}) {
        Element ke = Element::generator(*p, k);
        h->set_delta(k, Tensor2::of(ke, ke));
        h->set_counit(k, Scalar::one(f));
        h->set_antipode(k, invert_element(ke));
    }
    h->set_delta(E1, Tensor2::of(k1, e1) + Tensor2::of(e1, Element::one(*p)));
    h->set_delta(E2, Tensor2::of(k2, e2) + Tensor2::of(e2, Element::one(*p)));
    for (int e : {E1, E2}) h->set_counit(e, Scalar::zero(f));
    h->set_antipode(E1, -(invert_element(k1) * e1));
    h->set_antipode(E2, -(invert_element(k2) * e2));
    return {p, h};
}

GhoeData half_quantum_literal_data(const Scalar& q) {
    HopfModel m = build_half_quantum_literal(q);
    const Presentation& p = *m.pres;
    Element k1 = gen_by_name(p, "K1"), k2 = gen_by_name(p, "K2");
    Element e1 = gen_by_name(p, "E1"), e2 = gen_by_name(p, "E2");
    Scalar qi = q.pow(-1);
    Element zero = Element::zero(p);
    GhoeData d;
    d.A = m.pres;
    d.hopf = m.hopf;
    d.ore = {m.pres, {k1 * qi, k2 * qi, e1 * qi, e2 * q}, {zero, zero, zero, zero}};
    d.r1 = Element::one(p);
    d.r2 = k1 * k2;
    d.x = k2 * e1 * (q - qi);
    d.y = e2;
    d.chi = std::vector<Scalar>{qi, qi, Scalar::zero(q.field()),
                                Scalar::zero(q.field())};
    return d;
}

HopfModel build_half_quantum_serre(const Scalar& q) {
    if (q.is_zero()) throw Error("BadParameters", "q must be nonzero");
    FieldSpec f = q.field();
    auto p = Presentation::create(f);
    int K1 = p->add_generator({"K1", true});
    int K2 = p->add_generator({"K2", true});
    int E1 = p->add_generator({"E1"});
    int E12 = p->add_generator({"E12"});
    int E2 = p->add_generator({"E2"});
    Element k1 = Element::generator(*p, K1), k2 = Element::generator(*p, K2);
    Element e1 = Element::generator(*p, E1), e12 = Element::generator(*p, E12);
    Element e2 = Element::generator(*p, E2);
    Scalar qi = q.pow(-1);
    p->add_rule({K2, false}, {K1, false}, k1 * k2);
    p->add_rule({E1, false}, {K1, false}, k1 * e1 * q.pow(-2));
    p->add_rule({E1, false}, {K2, false}, k2 * e1 * q);
    p->add_rule({E12, false}, {K1, false}, k1 * e12 * qi);
    p->add_rule({E12, false}, {K2, false}, k2 * e12 * qi);
    p->add_rule({E2, false}, {K1, false}, k1 * e2 * q);
    p->add_rule({E2, false}, {K2, false}, k2 * e2 * q.pow(-2));
    p->add_rule({E12, false}, {E1, false}, e1 * e12 * qi);
    p->add_rule({E2, false}, {E12, false}, e12 * e2 * qi);
    p->add_rule({E2, false}, {E1, false}, e1 * e2 * q - e12 * q);
    p->finalize();

    auto h = std::make_shared<HopfStructure>(p);
    for (int k : {K1, K2}) {
        Element ke = Element::generator(*p, k);
        h->set_delta(k, Tensor2::of(ke, ke));
        h->set_counit(k, Scalar::one(f));
        h->set_antipode(k, invert_element(ke));
    }
    Element one = Element::one(*p);
    h->set_delta(E1, Tensor2::of(k1, e1) + Tensor2::of(e1, one));
    h->set_delta(E2, Tensor2::of(k2, e2) + Tensor2::of(e2, one));
    h->set_delta(E12, Tensor2::of(k1 * k2, e12) +
                          Tensor2::of(k2 * e1 * (q - qi), e2) + Tensor2::of(e12, one));
    for (int e : {E1, E12, E2}) h->set_counit(e, Scalar::zero(f));
    Element kki = invert_element(k1 * k2);
    h->set_antipode(E1, -(invert_element(k1) * e1));
    h->set_antipode(E2, -(invert_element(k2) * e2));
    h->set_antipode(E12, kki * e1 * e2 * (Scalar::one(f) - q.pow(-2)) - kki * e12);
    return {p, h};
}

Diagnostic serre_identity_checks(const HopfModel& m, const Scalar& q) {
    const Presentation& p = *m.pres;
    Element k1 = gen_by_name(p, "K1"), k2 = gen_by_name(p, "K2");
    Element e1 = gen_by_name(p, "E1"), e2 = gen_by_name(p, "E2");
    Element one = Element::one(p);
    Element w = e1 * e2 - e2 * e1 * q.pow(-1);
    Element x = k2 * e1 * (q - q.pow(-1));
    Element kk = k1 * k2;
    Diagnostic d;
    Tensor2 dres = m.hopf->delta(w) -
                   (Tensor2::of(w, one) + Tensor2::of(x, e2) + Tensor2::of(kk, w));
    d.add("serre-delta", "E12", dres.str(), dres.is_zero());
    Scalar c = m.hopf->counit(w);
    d.add("serre-counit", "E12", c.str(), c.is_zero());
    Element sres = m.hopf->antipode(w) + invert_element(kk) * w;
    d.add("serre-antipode", "E12", sres.str(), sres.is_zero());
    return d;
}

Diagnostic serre_emergence_check(const Scalar& q) {
    Diagnostic d;
    HopfModel lit = build_half_quantum_literal(q);
    const Presentation& p = *lit.pres;
    Element k1 = gen_by_name(p, "K1"), k2 = gen_by_name(p, "K2");
    Element e1 = gen_by_name(p, "E1"), e2 = gen_by_name(p, "E2");
    Element one = Element::one(p);
    Scalar qi = q.pow(-1);
    Element w = e1 * e2 - e2 * e1 * qi;
    Element x = k2 * e1 * (q - qi);

    Tensor2 dres = lit.hopf->delta(w) -
                   (Tensor2::of(w, one) + Tensor2::of(x, e2) + Tensor2::of(k1 * k2, w));
    d.add("emerge-delta", "E12", dres.str(), dres.is_zero());

    Element serre = e1 * e1 * e2 - e1 * e2 * e1 * (q + qi) + e2 * e1 * e1;
    Element bres = (w * e1 - e1 * w * qi) + serre * qi;
    d.add("emerge-bracket", "E12", bres.str(), bres.is_zero());
    d.add("emerge-nonzero", "serre", serre.str(), !serre.is_zero());

    HopfModel quo = build_half_quantum_serre(q);
    Element img = rebase(serre, *quo.pres);
    d.add("emerge-quotient", "serre", img.str(), img.is_zero());
    return d;
}

namespace {

struct EntrySpec {
    std::string name;
    std::function<CatalogEntry()> make;
};

CatalogEntry ghoe_entry(std::string name, std::string desc,
                        std::vector<std::string> tags, GhoeData d) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(desc);
    e.tags = std::move(tags);
    e.pres = std::const_pointer_cast<Presentation>(d.A);
    e.hopf = d.hopf;
    e.ghoe = std::move(d);
    return e;
}

GhoeData line_data(const FieldSpec& f, long chi_a, long delta_exp) {
    HopfModel m = build_env(1, true, f);
    const Presentation& p = *m.pres;
    Element a = Element::generator(p, 0);
    Element da = delta_exp == 0 ? Element::zero(p) : a.pow(delta_exp);
    return build_line_middle(m, Scalar::from_int(f, chi_a), Element::zero(p),
                             Element::zero(p), da);
}

std::vector<EntrySpec> positive_specs() {
    std::vector<EntrySpec> v;
    auto add = [&](std::string n, std::function<CatalogEntry()> f) {
        v.push_back({std::move(n), std::move(f)});
    };

    add("line-zero", [] {
        return ghoe_entry("line-zero", "k[a], a primitive, trivial twist and derivation",
                          {"char0", "line"}, line_data(FieldSpec::Q(), 0, 0));
    });
    add("line-linear", [] {
        return ghoe_entry("line-linear", "k[a] with delta(a) = a",
                          {"char0", "line"}, line_data(FieldSpec::Q(), 0, 1));
    });
    add("line-shift", [] {
        return ghoe_entry("line-shift", "k[a] with tau(a) = a + 1",
                          {"char0", "line"}, line_data(FieldSpec::Q(), 1, 0));
    });
    add("p3-zero", [] {
        return ghoe_entry("p3-zero", "F_3[a], trivial twist and derivation",
                          {"char3", "line"}, line_data(FieldSpec::Fp(3), 0, 0));
    });
    add("p3-shift", [] {
        return ghoe_entry("p3-shift", "F_3[a] with tau(a) = a + 1",
                          {"char3", "line"}, line_data(FieldSpec::Fp(3), 1, 0));
    });
    add("p3-frobenius", [] {
        return ghoe_entry("p3-frobenius", "F_3[a] with delta(a) = a^3",
                          {"char3", "line"}, line_data(FieldSpec::Fp(3), 0, 3));
    });
    add("p3-powers", [] {
        FieldSpec f = FieldSpec::Fp(3);
        HopfModel m = build_env(1, true, f);
        Element a = Element::generator(*m.pres, 0);
        GhoeData d = build_line_middle(m, Scalar::zero(f), a, a.pow(3),
                                       Element::zero(*m.pres));
        return ghoe_entry("p3-powers",
                          "F_3[a] with middle term a (x) a^3 (distinct p-th powers)",
                          {"char3", "line", "middle-term"}, d);
    });

    add("group-z", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_group_algebra(1, {0}, f);
        GhoeData d = build_group_ghoe(m, {Scalar::from_int(f, 2)},
                                      Element::generator(*m.pres, 0),
                                      {Scalar::one(f)});
        return ghoe_entry("group-z", "group algebra of Z, chi(g) = 2, r = g",
                          {"char0", "group"}, d);
    });
    add("group-z4", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_group_algebra(1, {4}, f);
        GhoeData d = build_group_ghoe(m, {Scalar::from_int(f, -1)},
                                      Element::generator(*m.pres, 0).pow(2),
                                      {Scalar::one(f)});
        return ghoe_entry("group-z4", "group algebra of Z/4, chi(g) = -1, r = g^2",
                          {"char0", "group", "torsion"}, d);
    });
    add("group-zz", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_group_algebra(2, {0, 0}, f);
        Element r = Element::generator(*m.pres, 0) * Element::generator(*m.pres, 1);
        GhoeData d = build_group_ghoe(
            m, {Scalar::from_int(f, 2), Scalar::from_int(f, 3)}, r,
            {Scalar::one(f), Scalar::from_int(f, 2)});
        return ghoe_entry("group-zz",
                          "group algebra of Z^2, chi = (2, 3), alpha = (1, 2), r = g1 g2",
                          {"char0", "group"}, d);
    });
    add("group-z-middle", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_group_algebra(1, {0}, f);
        const Presentation& p = *m.pres;
        Element g = Element::generator(p, 0), one = Element::one(p);
        GhoeData d;
        d.A = m.pres;
        d.hopf = m.hopf;
        d.ore = {m.pres, {g}, {Element::zero(p)}};
        d.r1 = g;
        d.r2 = g;
        d.x = one - g;
        d.y = one - g;
        d.chi = std::vector<Scalar>{Scalar::one(f)};
        return ghoe_entry("group-z-middle",
                          "group algebra of Z with middle term (1-g) (x) (1-g)",
                          {"char0", "group", "middle-term"}, d);
    });

    add("env2-linear", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), z = Element::zero(p);
        GhoeData d = build_env2_ghoe(m, Scalar::zero(f), Scalar::zero(f), z, z, a, z);
        return ghoe_entry("env2-linear",
                          "solvable plane b a = a b - a with delta(a) = a",
                          {"char0", "env"}, d);
    });
    add("env2ab-diagonal", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(2, true, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        GhoeData d = build_env2_ghoe(m, Scalar::zero(f), Scalar::zero(f), a, b, a, b);
        return ghoe_entry("env2ab-diagonal",
                          "abelian plane with middle term a (x) b and diagonal delta",
                          {"char0", "env", "middle-term"}, d);
    });
    add("env2-quadratic", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        Scalar half = Scalar::one(f) / Scalar::from_int(f, 2);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a, b,
                                      -(a.pow(2) * half), Element::zero(p));
        return ghoe_entry("env2-quadratic",
                          "solvable plane, middle term a (x) b, delta(a) = -a^2/2",
                          {"char0", "env", "middle-term"}, d);
    });
    add("env2-quadratic-11", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        Scalar half = Scalar::one(f) / Scalar::from_int(f, 2);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a, b,
                                      a - a.pow(2) * half, a + b);
        return ghoe_entry("env2-quadratic-11",
                          "env2-quadratic with the linear part eta = zeta = 1 added",
                          {"char0", "env", "middle-term"}, d);
    });

    add("p3-env2-frobenius", [] {
        FieldSpec f = FieldSpec::Fp(3);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), z = Element::zero(p);
        GhoeData d = build_env2_ghoe(m, Scalar::zero(f), Scalar::zero(f), a.pow(3),
                                     a.pow(9), z, z);
        return ghoe_entry("p3-env2-frobenius",
                          "solvable plane over F_3, middle term a^3 (x) a^9",
                          {"char3", "env", "middle-term"}, d);
    });
    add("p3-env2-mixed1", [] {
        FieldSpec f = FieldSpec::Fp(3);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a, b,
                                      a.pow(2), Element::zero(p));
        return ghoe_entry("p3-env2-mixed1",
                          "solvable plane over F_3, middle term a (x) b, delta(a) = a^2",
                          {"char3", "env", "middle-term"}, d);
    });
    add("p3-env2-mixed2", [] {
        FieldSpec f = FieldSpec::Fp(3);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), b, a,
                                      a.pow(2), Element::zero(p));
        return ghoe_entry("p3-env2-mixed2",
                          "solvable plane over F_3, middle term b (x) a, delta(a) = a^2",
                          {"char3", "env", "middle-term"}, d);
    });
    add("p3-env2-mixed3", [] {
        FieldSpec f = FieldSpec::Fp(3);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a.pow(3),
                                      a + a.pow(3), Element::zero(p), a.pow(6));
        return ghoe_entry("p3-env2-mixed3",
                          "solvable plane over F_3, middle term a^3 (x) (a + a^3), "
                          "delta(b) = a^6",
                          {"char3", "env", "middle-term"}, d);
    });

    add("p2-env2-diag1", [] {
        FieldSpec f = FieldSpec::Fp(2);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), z = Element::zero(p);
        GhoeData d = build_env2_ghoe(m, Scalar::zero(f), Scalar::zero(f), a, a, z, z);
        return ghoe_entry("p2-env2-diag1",
                          "solvable plane over F_2 with middle term a (x) a",
                          {"char2", "env", "middle-term"}, d);
    });
    add("p2-env2-diag2", [] {
        FieldSpec f = FieldSpec::Fp(2);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        GhoeData d = build_env2_ghoe(m, Scalar::zero(f), Scalar::zero(f), b, b,
                                     a * b, Element::zero(p));
        return ghoe_entry("p2-env2-diag2",
                          "solvable plane over F_2, middle term b (x) b, delta(a) = ab",
                          {"char2", "env", "middle-term"}, d);
    });
    add("p2-env2-shift1", [] {
        FieldSpec f = FieldSpec::Fp(2);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), z = Element::zero(p);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a,
                                      a.pow(2), z, z);
        return ghoe_entry("p2-env2-shift1",
                          "solvable plane over F_2, middle term a (x) a^2",
                          {"char2", "env", "middle-term"}, d);
    });
    add("p2-env2-shift2", [] {
        FieldSpec f = FieldSpec::Fp(2);
        HopfModel m = build_env(2, false, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), z = Element::zero(p);
        GhoeData d = build_env2_mixed(m, Scalar::zero(f), Scalar::one(f), a.pow(2),
                                      a, z, z);
        return ghoe_entry("p2-env2-shift2",
                          "solvable plane over F_2, middle term a^2 (x) a",
                          {"char2", "env", "middle-term"}, d);
    });

    add("env3-diagonal", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(3, true, f);
        const Presentation& p = *m.pres;
        GhoeData d;
        d.A = m.pres;
        d.hopf = m.hopf;
        d.ore.A = m.pres;
        for (int i = 0; i < 3; ++i) {
            Element g = Element::generator(p, i);
            d.ore.tau.push_back(g);
            d.ore.delta.push_back(g * Scalar::from_int(f, i + 1));
        }
        d.r1 = Element::one(p);
        d.r2 = Element::one(p);
        d.x = Element::zero(p);
        d.y = Element::zero(p);
        d.chi = std::vector<Scalar>(3, Scalar::zero(f));
        return ghoe_entry("env3-diagonal",
                          "abelian 3-space with diagonal delta = diag(1, 2, 3)",
                          {"char0", "env"}, d);
    });
    add("env3-shift", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(3, true, f);
        const Presentation& p = *m.pres;
        GhoeData d;
        d.A = m.pres;
        d.hopf = m.hopf;
        d.ore.A = m.pres;
        for (int i = 0; i < 3; ++i) {
            Element g = Element::generator(p, i);
            d.ore.tau.push_back(i == 0 ? g + Element::one(p) : g);
            d.ore.delta.push_back(Element::zero(p));
        }
        d.r1 = Element::one(p);
        d.r2 = Element::one(p);
        d.x = Element::zero(p);
        d.y = Element::zero(p);
        d.chi = std::vector<Scalar>{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
        return ghoe_entry("env3-shift", "abelian 3-space with tau(a) = a + 1",
                          {"char0", "env"}, d);
    });
    add("env3-nilpotent", [] {
        FieldSpec f = FieldSpec::Q();
        HopfModel m = build_env(3, true, f);
        const Presentation& p = *m.pres;
        Element a = Element::generator(p, 0), b = Element::generator(p, 1);
        GhoeData d;
        d.A = m.pres;
        d.hopf = m.hopf;
        d.ore.A = m.pres;
        for (int i = 0; i < 3; ++i)
            d.ore.tau.push_back(Element::generator(p, i));
        d.ore.delta = {Element::zero(p), a, b};
        d.r1 = Element::one(p);
        d.r2 = Element::one(p);
        d.x = a;
        d.y = b;
        d.chi = std::vector<Scalar>(3, Scalar::zero(f));
        return ghoe_entry("env3-nilpotent",
                          "abelian 3-space, middle term a (x) b, nilpotent delta",
                          {"char0", "env", "middle-term"}, d);
    });
    return v;
}

CatalogEntry literal_entry(const std::string& name, const Scalar& q) {
    GhoeData d = half_quantum_literal_data(q);
    CatalogEntry e = ghoe_entry(
        name,
        "half-quantum model with the literal comultiplication data; the twist is "
        "not balanced against Delta(z), so the battery must refute it",
        {"quantum", "expected-fail"}, std::move(d));
    e.q = q;
    e.expect_pass = false;
    e.expected_failures = {{"B2", "E1"}};
    return e;
}

CatalogEntry serre_entry() {
    Scalar q = Scalar::variable(FieldSpec::Qt());
    HopfModel m = build_half_quantum_serre(q);
    CatalogEntry e;
    e.name = "half-quantum-serre";
    e.description =
        "half-quantum model with the quadratic relation E2 E1 = q E1 E2 - q E12; "
        "full Hopf axioms hold, the closed antipode identity for E12 does not";
    e.tags = {"quantum", "expected-fail"};
    e.pres = m.pres;
    e.hopf = m.hopf;
    e.q = q;
    e.expect_pass = false;
    e.expected_failures = {{"serre-antipode", "E12"}};
    return e;
}

CatalogEntry mutate(CatalogEntry e) {
    GhoeData& d = *e.ghoe;
    const Presentation& p = *d.A;
    Element g0 = Element::generator(p, 0);
    Element extra;
    if (p.gen(0).invertible || p.gen(0).torsion > 0)
        extra = (Element::one(p) - d.r2) * g0.pow(2);
    else if (p.field().characteristic() == 2)
        extra = g0.pow(3);
    else
        extra = g0.pow(2);
    d.ore.delta[0] += extra;
    e.name += "-mut";
    e.description += " (derivation perturbed on the first generator)";
    e.tags.push_back("negative-control");
    e.expect_pass = false;
    e.expected_failures = {{"B3", p.gen(0).name}};
    return e;
}

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& s : positive_specs()) names.push_back(s.name);
    names.push_back("half-quantum-literal");
    names.push_back("half-quantum-literal-q2");
    names.push_back("half-quantum-serre");
    for (const auto& s : positive_specs()) names.push_back(s.name + "-mut");
    names.push_back("p3-powers-chi-mut");
    names.push_back("half-quantum-serre-mut");
    return names;
}

CatalogEntry build_named(const std::string& name) {
    if (name == "half-quantum-literal")
        return literal_entry(name, Scalar::variable(FieldSpec::Qt()));
    if (name == "half-quantum-literal-q2")
        return literal_entry(name, Scalar::from_int(FieldSpec::Q(), 2));
    if (name == "half-quantum-serre") return serre_entry();
    if (name == "half-quantum-serre-mut") {
        CatalogEntry e = serre_entry();
        int i = e.pres->gen_index("E1");
        Element k1 = gen_by_name(*e.pres, "K1");
        e.hopf->set_antipode(i, invert_element(k1) * Element::generator(*e.pres, i));
        e.name = name;
        e.description = "half-quantum-serre with the sign of S(E1) flipped";
        e.tags = {"quantum", "negative-control"};
        e.expected_failures = {{"antipode-left", "E1"}};
        return e;
    }
    if (name == "p3-powers-chi-mut") {
        CatalogEntry e = build_named("p3-powers");
        GhoeData& d = *e.ghoe;
        const Presentation& p = *d.A;
        d.ore.tau[0] = Element::generator(p, 0) + Element::one(p);
        d.chi = std::vector<Scalar>{Scalar::one(p.field())};
        e.name = name;
        e.description = "p3-powers with the twist changed to tau(a) = a + 1";
        e.tags.push_back("negative-control");
        e.expect_pass = false;
        e.expected_failures = {{"B3", "a"}};
        return e;
    }
    for (const auto& s : positive_specs()) {
        if (name == s.name) return s.make();
        if (name == s.name + "-mut") return mutate(s.make());
    }
    throw Error("UnknownName", "no catalog entry named " + name);
}

std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> v;
    for (const auto& n : catalog_names()) v.push_back(build_named(n));
    return v;
}

EntryResult run_entry(const CatalogEntry& e) {
    EntryResult r;
    if (e.ghoe) {
        r.diag = attach_and_verify(*e.ghoe).diag;
    } else {
        r.diag = check_hopf_axioms(*e.hopf);
        if (e.q) r.diag.merge(serre_identity_checks({e.pres, e.hopf}, *e.q));
    }
    r.diag.sort_entries();
    r.matched = (r.diag.pass == e.expect_pass);
    for (const auto& [check, subject] : e.expected_failures)
        if (!r.diag.has_failure(check, subject)) r.matched = false;
    return r;
}

} // namespace hopfore
