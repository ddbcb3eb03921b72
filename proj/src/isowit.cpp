#include "hopfore/isowit.hpp"

namespace hopfore {

namespace {

Element letter_elem(const Presentation& p, Letter l) {
    return p.normalize_word({Factor{l.gen, l.neg ? -1L : 1L}}, Scalar::one(p.field()));
}

Element hom(const Element& e, const Presentation& target, const std::vector<Element>& images) {
    return apply_hom(e, target, images);
}

Tensor2 hom_tensor(const Tensor2& t, const Presentation& src, const Presentation& target,
                   const std::vector<Element>& images) {
    Tensor2 out = Tensor2::zero(target);
    for (const auto& [k, c] : t.terms())
        out += Tensor2::of(hom(mono_element(src, k.first), target, images),
                           hom(mono_element(src, k.second), target, images)) *
               c;
    return out;
}

std::vector<Element> identity_images(const Presentation& p) {
    std::vector<Element> v;
    for (int g = 0; g < p.num_generators(); ++g) v.push_back(Element::generator(p, g));
    return v;
}

void require_invertible_pair(const GhoeData& H, const GhoeData& Hp, const IsoWitness& w) {
    const Presentation& A = *H.A;
    const Presentation& Ap = *Hp.A;
    if (w.lambda.is_zero()) throw Error("BadWitness", "lambda must be a unit");
    if (!is_grouplike(*Hp.hopf, w.r)) throw Error("BadWitness", "r is not group-like");
    if (static_cast<int>(w.phi.size()) != A.num_generators() ||
        static_cast<int>(w.phi_inv.size()) != Ap.num_generators())
        throw Error("BadWitness", "phi/phi_inv must give one image per generator");
    for (int g = 0; g < A.num_generators(); ++g)
        if (!(hom(w.phi[static_cast<size_t>(g)], A, w.phi_inv) == Element::generator(A, g)))
            throw Error("BadWitness",
                        "phi_inv(phi(" + A.gen(g).name + ")) is not the generator");
    for (int g = 0; g < Ap.num_generators(); ++g)
        if (!(hom(w.phi_inv[static_cast<size_t>(g)], Ap, w.phi) == Element::generator(Ap, g)))
            throw Error("BadWitness",
                        "phi(phi_inv(" + Ap.gen(g).name + ")) is not the generator");
}

} // namespace

Diagnostic verify_witness(const GhoeData& H, const GhoeData& Hp, const IsoWitness& w) {
    const Presentation& A = *H.A;
    const Presentation& Ap = *Hp.A;
    require_invertible_pair(H, Hp, w);
    Diagnostic dg;

    auto F = [&](const Element& e) { return hom(e, Ap, w.phi); };
    auto Finv = [&](const Element& e) { return hom(e, A, w.phi_inv); };

    // Phi respects the relations of A (well-defined algebra map)
    for (const auto& [lhs, rhs] : A.rules()) {
        const std::string subject = A.letter_str(lhs.first) + "*" + A.letter_str(lhs.second);
        Element res = F(letter_elem(A, lhs.first)) * F(letter_elem(A, lhs.second)) - F(rhs);
        dg.add("phi-algebra-map", subject, res.str(), res.is_zero());
    }
    for (int g = 0; g < A.num_generators(); ++g) {
        long n = A.gen(g).torsion;
        if (n > 0) {
            Element res = F(Element::generator(A, g)).pow(n) - Element::one(Ap);
            dg.add("phi-algebra-map", A.gen(g).name + "^" + std::to_string(n), res.str(),
                   res.is_zero());
        }
    }
    // Phi is a Hopf algebra map
    for (int g = 0; g < A.num_generators(); ++g) {
        const std::string name = A.gen(g).name;
        Element ge = Element::generator(A, g);
        Tensor2 dres = Hp.hopf->delta(F(ge)) - hom_tensor(H.hopf->delta_gen(g), A, Ap, w.phi);
        dg.add("phi-delta", name, dres.str(), dres.is_zero());
        Scalar eres = Hp.hopf->counit(F(ge)) - H.hopf->counit_gen(g);
        dg.add("phi-counit", name, eres.str(), eres.is_zero());
        Element sres = Hp.hopf->antipode(F(ge)) - F(H.hopf->antipode_gen(g));
        dg.add("phi-antipode", name, sres.str(), sres.is_zero());
    }

    // (a) Phi(r_i) = r r_i'
    Element a1 = F(H.r1) - w.r * Hp.r1;
    dg.add("a-r1", "ghoe", a1.str(), a1.is_zero());
    Element a2 = F(H.r2) - w.r * Hp.r2;
    dg.add("a-r2", "ghoe", a2.str(), a2.is_zero());

    // (b) the comultiplication constraint on b, and counit'(b) = 0
    Element ri = invert_element(w.r);
    Tensor2 bres = Hp.hopf->delta(w.b) - Tensor2::of(w.b, Hp.r1) - Tensor2::of(Hp.r2, w.b) -
                   Tensor2::of(ri * F(H.x), ri * F(H.y)) * w.lambda.inv() +
                   Tensor2::of(Hp.x, Hp.y);
    dg.add("b-delta", "ghoe", bres.str(), bres.is_zero());
    Scalar bcu = Hp.hopf->counit(w.b);
    dg.add("b-counit", "ghoe", bcu.str(), bcu.is_zero());

    // (c) chi' o Phi = chi via the derived characters, plus the endomorphism
    // transport tau'(Phi(a)) = r^{-1} Phi(tau(a)) r
    CharacterResult cH = derive_character(H), cHp = derive_character(Hp);
    if (cH.ok && cHp.ok) {
        Character chi{H.A, cH.values};
        Character chip{Hp.A, cHp.values};
        for (int g = 0; g < A.num_generators(); ++g) {
            Scalar res = chip.eval(F(Element::generator(A, g))) -
                         chi.values[static_cast<size_t>(g)];
            dg.add("c-chi", A.gen(g).name, res.str(), res.is_zero());
        }
    } else {
        dg.add("c-chi", "ghoe", cH.ok ? cHp.message : cH.message, false);
    }
    for (int g = 0; g < A.num_generators(); ++g) {
        Element ge = Element::generator(A, g);
        Element res = apply_tau(Hp.ore, F(ge)) - ri * F(apply_tau(H.ore, ge)) * w.r;
        dg.add("c-tau", A.gen(g).name, res.str(), res.is_zero());
    }

    // (d) the derivation transport with the inner correction by b
    for (int g = 0; g < Ap.num_generators(); ++g) {
        Element ge = Element::generator(Ap, g);
        Element res = Hp.ore.delta[static_cast<size_t>(g)] -
                      ri * F(apply_delta(H.ore, Finv(ge))) * w.lambda.inv() -
                      apply_tau(Hp.ore, ge) * w.b + w.b * ge;
        dg.add("d-delta", Ap.gen(g).name, res.str(), res.is_zero());
    }
    dg.sort_entries();
    return dg;
}

IsoWitness reverse_witness(const GhoeData& H, const GhoeData& Hp, const IsoWitness& w) {
    require_invertible_pair(H, Hp, w);
    const Presentation& A = *H.A;
    IsoWitness rev;
    rev.lambda = w.lambda.inv();
    rev.r = invert_element(hom(w.r, A, w.phi_inv));
    rev.b = -(hom(w.r * w.b, A, w.phi_inv) * w.lambda);
    rev.phi = w.phi_inv;
    rev.phi_inv = w.phi;
    return rev;
}

std::pair<GhoeData, IsoWitness> iso_transform(const GhoeData& d, const IsoTransform& t) {
    const Presentation& A = *d.A;
    const Element one = Element::one(A);
    GhoeData out = d;
    IsoWitness w;
    w.lambda = Scalar::one(A.field());
    w.r = one;
    w.b = Element::zero(A);
    w.phi = identity_images(A);
    w.phi_inv = identity_images(A);

    if (auto* s = std::get_if<RescaleXY>(&t)) {
        if (s->alpha.is_zero() || s->beta.is_zero())
            throw Error("PreconditionViolated", "rescaling requires unit scalars");
        out.x = d.x * s->alpha;
        out.y = d.y * s->beta;
        Scalar ab = s->alpha * s->beta;
        for (auto& de : out.ore.delta) de = de * ab;
        w.lambda = ab.inv();
        return {out, w};
    }
    if (auto* s = std::get_if<AbsorbX>(&t)) {
        if (!(d.x == (one - d.r2) * s->alpha))
            throw Error("PreconditionViolated", "x must equal alpha (1 - r2)");
        for (int g = 0; g < A.num_generators(); ++g) {
            Element ge = Element::generator(A, g);
            out.ore.delta[static_cast<size_t>(g)] =
                d.ore.delta[static_cast<size_t>(g)] +
                (apply_tau(d.ore, ge) * d.y - d.y * ge) * s->alpha;
        }
        out.x = Element::zero(A);
        out.y = Element::zero(A);
        w.b = d.y * s->alpha;
        return {out, w};
    }
    if (auto* s = std::get_if<AbsorbY>(&t)) {
        if (!(d.y == (one - d.r1) * s->beta))
            throw Error("PreconditionViolated", "y must equal beta (1 - r1)");
        for (int g = 0; g < A.num_generators(); ++g) {
            Element ge = Element::generator(A, g);
            out.ore.delta[static_cast<size_t>(g)] =
                d.ore.delta[static_cast<size_t>(g)] +
                (apply_tau(d.ore, ge) * d.x - d.x * ge) * s->beta;
        }
        out.x = Element::zero(A);
        out.y = Element::zero(A);
        w.b = d.x * s->beta;
        return {out, w};
    }
    if (auto* s = std::get_if<AbsorbDiagonal>(&t)) {
        if (A.field().characteristic() == 2)
            throw Error("PreconditionViolated", "not available in characteristic 2");
        if (!(d.y == d.x * s->alpha) || !(d.r1 == one) || !(d.r2 == one))
            throw Error("PreconditionViolated",
                        "requires y = alpha x with r1 = r2 = 1");
        Scalar half_a = s->alpha / Scalar::from_int(A.field(), 2);
        Element x2 = d.x * d.x;
        for (int g = 0; g < A.num_generators(); ++g) {
            Element ge = Element::generator(A, g);
            out.ore.delta[static_cast<size_t>(g)] =
                d.ore.delta[static_cast<size_t>(g)] +
                (apply_tau(d.ore, ge) * x2 - x2 * ge) * half_a;
        }
        out.x = Element::zero(A);
        out.y = Element::zero(A);
        w.b = x2 * half_a;
        return {out, w};
    }
    const auto& s = std::get<TransportHopf>(t);
    const Presentation& Ap = *s.target;
    if (static_cast<int>(s.phi.size()) != A.num_generators() ||
        static_cast<int>(s.phi_inv.size()) != Ap.num_generators())
        throw Error("PreconditionViolated", "one image per generator required");
    GhoeData moved;
    moved.A = s.target;
    moved.hopf = s.hopf;
    moved.r1 = hom(d.r1, Ap, s.phi);
    moved.r2 = hom(d.r2, Ap, s.phi);
    moved.x = hom(d.x, Ap, s.phi);
    moved.y = hom(d.y, Ap, s.phi);
    moved.ore.A = s.target;
    for (int g = 0; g < Ap.num_generators(); ++g) {
        Element pre = s.phi_inv[static_cast<size_t>(g)];
        moved.ore.tau.push_back(hom(apply_tau(d.ore, pre), Ap, s.phi));
        moved.ore.delta.push_back(hom(apply_delta(d.ore, pre), Ap, s.phi));
    }
    if (d.chi) {
        Character chi{d.A, *d.chi};
        std::vector<Scalar> moved_chi;
        for (int g = 0; g < Ap.num_generators(); ++g)
            moved_chi.push_back(chi.eval(s.phi_inv[static_cast<size_t>(g)]));
        moved.chi = moved_chi;
    }
    w.r = Element::one(Ap);
    w.b = Element::zero(Ap);
    w.phi = s.phi;
    w.phi_inv = s.phi_inv;
    return {moved, w};
}

namespace {

/// Requires the base of a 1-dim instance to be the polynomial line k[a].
void require_poly_line(const GhoeData& d) {
    const Presentation& A = *d.A;
    if (A.num_generators() != 1 || A.gen(0).invertible || A.gen(0).torsion != 0 ||
        !A.rules().empty())
        throw Error("UnsupportedBase", "base must be a polynomial line k[a]");
    if (!(d.r1 == Element::one(A)) || !(d.r2 == Element::one(A)))
        throw Error("UnsupportedBase", "r1 and r2 must be trivial over k[a]");
}

/// The coefficient eta with delta(a) = eta a; nullopt for any other shape.
std::optional<Scalar> linear_coefficient(const Element& e, const Presentation& A) {
    if (e.is_zero()) return Scalar::zero(A.field());
    if (e.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *e.terms().begin();
    if (m.factors().size() == 1 && m.factors()[0].gen == 0 && m.factors()[0].exp == 1)
        return c;
    return std::nullopt;
}

IsoWitness make_1dim_witness(const GhoeData& H, const GhoeData& Hp, const Scalar& lambda,
                             const Scalar& alpha, const Element& b) {
    IsoWitness w;
    w.lambda = lambda;
    w.r = Element::one(*Hp.A);
    w.b = b;
    w.phi = {Element::generator(*Hp.A, 0) * alpha};
    w.phi_inv = {Element::generator(*H.A, 0) * alpha.inv()};
    return w;
}

} // namespace

WitnessSearch solve_witness_1dim(const GhoeData& H, const GhoeData& Hp, long bound) {
    require_poly_line(H);
    require_poly_line(Hp);
    const Presentation& A = *H.A;
    const Presentation& Ap = *Hp.A;
    if (!(A.field() == Ap.field()))
        throw Error("UnsupportedBase", "both instances must share the ground field");
    CharacterResult cH = derive_character(H), cHp = derive_character(Hp);
    if (!cH.ok) throw Error("UnsupportedBase", "source: " + cH.message);
    if (!cHp.ok) throw Error("UnsupportedBase", "target: " + cHp.message);
    const Scalar chi = cH.values[0], chip = cHp.values[0];
    long p = A.field().characteristic();
    WitnessSearch out;

    if (p == 0) {
        if (!H.x.is_zero() || !H.y.is_zero() || !Hp.x.is_zero() || !Hp.y.is_zero())
            throw Error("UnsupportedBase",
                        "nonzero x, y over characteristic 0 is outside the solver's scope");
        auto eta = linear_coefficient(H.ore.delta[0], A);
        auto zeta = linear_coefficient(Hp.ore.delta[0], Ap);
        if (!eta || !zeta)
            throw Error("UnsupportedBase", "derivation images must be primitive (eta a)");
        Scalar one = Scalar::one(A.field());
        if (!chip.is_zero()) {
            Scalar alpha = chi / chip;
            if (alpha.is_zero()) {
                out.no_witness_reason =
                    "condition (c) forces alpha = chi(a)/chi'(a) = 0, not a unit";
                return out;
            }
            // lambda canonicalized to 1; b = beta a absorbs the derivation gap
            Scalar beta = (*zeta - *eta) / chip;
            IsoWitness w = make_1dim_witness(H, Hp, one, alpha,
                                             Element::generator(Ap, 0) * beta);
            if (verify_witness(H, Hp, w).pass) out.witness = w;
            else out.no_witness_reason = "candidate witness failed verification";
            return out;
        }
        if (!chi.is_zero()) {
            out.no_witness_reason = "condition (c) needs chi(a) = 0 when chi'(a) = 0";
            return out;
        }
        // chi = chi' = 0: condition (d) reduces to zeta = lambda^{-1} eta
        if (eta->is_zero() != zeta->is_zero()) {
            out.no_witness_reason =
                "condition (d) reduces to zeta = lambda^{-1} eta, infeasible when "
                "exactly one of eta, zeta vanishes";
            return out;
        }
        Scalar lambda = zeta->is_zero() ? one : *eta / *zeta;
        IsoWitness w = make_1dim_witness(H, Hp, lambda, one, Element::zero(Ap));
        if (verify_witness(H, Hp, w).pass) out.witness = w;
        else out.no_witness_reason = "candidate witness failed verification";
        return out;
    }

    // characteristic p: exhaustive over (lambda, alpha) in (F_p^x)^2
    Element ap = Element::generator(Ap, 0);
    for (long li = 1; li < p; ++li) {
        for (long ai = 1; ai < p; ++ai) {
            Scalar lambda = Scalar::from_int(A.field(), li);
            Scalar alpha = Scalar::from_int(A.field(), ai);
            if (!(chi == alpha * chip)) continue;
            std::vector<Element> phi{ap * alpha};
            std::vector<Element> phi_inv{Element::generator(A, 0) * alpha.inv()};
            // condition (d): chi'(a) b = delta'(a) - lambda^{-1} Phi delta Phi^{-1}(a)
            Element conj = hom(apply_delta(H.ore, phi_inv[0]), Ap, phi);
            Element r1 = Hp.ore.delta[0] - conj * lambda.inv();
            // condition (b) right-hand side
            Tensor2 r2 = Tensor2::of(hom(H.x, Ap, phi), hom(H.y, Ap, phi)) * lambda.inv() -
                         Tensor2::of(Hp.x, Hp.y);
            Element b = Element::zero(Ap);
            if (!chip.is_zero()) {
                b = r1 * chip.inv();
                Tensor2 res = Hp.hopf->delta(b) - Tensor2::of(b, Element::one(Ap)) -
                              Tensor2::of(Element::one(Ap), b) - r2;
                if (!res.is_zero()) continue;
            } else {
                if (!r1.is_zero()) continue;
                auto sol = solve_skew_primitive_equation(*Hp.hopf, r2, Element::one(Ap),
                                                         Element::one(Ap), bound);
                if (!sol) continue;
                b = sol->particular;
                Scalar e = Hp.hopf->counit(b);
                if (!e.is_zero()) {
                    bool fixed = false;
                    for (const Element& k : sol->kernel) {
                        Scalar ek = Hp.hopf->counit(k);
                        if (!ek.is_zero()) {
                            b = b - k * (e / ek);
                            fixed = true;
                            break;
                        }
                    }
                    if (!fixed) continue;
                }
            }
            if (!Hp.hopf->counit(b).is_zero()) continue;
            IsoWitness w = make_1dim_witness(H, Hp, lambda, alpha, b);
            if (verify_witness(H, Hp, w).pass) {
                out.witness = w;
                return out;
            }
        }
    }
    out.no_witness_reason =
        "exhausted all (lambda, alpha) in (F_p^x)^2 with b of degree <= " +
        std::to_string(bound);
    return out;
}

} // namespace hopfore
