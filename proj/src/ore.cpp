#include "hopfore/ore.hpp"

namespace hopfore {

namespace {

void validate_sizes(const OreData& d) {
    if (!d.A) throw Error("BadParameters", "null base presentation");
    if (!d.A->finalized()) throw Error("InvariantViolation", "base presentation not finalized");
    size_t n = static_cast<size_t>(d.A->num_generators());
    if (d.tau.size() != n || d.delta.size() != n)
        throw Error("BadParameters", "tau/delta must give one image per generator");
}

Element tau_inverse(const OreData& d, int g) {
    try {
        return invert_element(d.tau.at(static_cast<size_t>(g)));
    } catch (const Error&) {
        throw Error("NonInvertibleT",
                    "tau image of unit generator " + d.A->gen(g).name + " is not a unit");
    }
}

Element tau_letter(const OreData& d, Letter l) {
    return l.neg ? tau_inverse(d, l.gen) : d.tau.at(static_cast<size_t>(l.gen));
}

Element delta_letter(const OreData& d, Letter l) {
    const Element& dg = d.delta.at(static_cast<size_t>(l.gen));
    if (!l.neg) return dg;
    Element ginv = invert_element(Element::generator(*d.A, l.gen));
    return -(tau_inverse(d, l.gen) * dg * ginv);
}

std::vector<Letter> letters_of(const Monomial& m) {
    std::vector<Letter> ls;
    for (const auto& f : m.factors())
        for (long i = 0; i < std::labs(f.exp); ++i) ls.push_back({f.gen, f.exp < 0});
    return ls;
}

Element letter_element(const Presentation& p, Letter l) {
    return p.normalize_word({Factor{l.gen, l.neg ? -1L : 1L}}, Scalar::one(p.field()));
}

} // namespace

Element apply_tau(const OreData& d, const Element& e) {
    validate_sizes(d);
    const Presentation& p = *d.A;
    Element out = Element::zero(p);
    for (const auto& [m, c] : e.terms()) {
        Element acc = Element::constant(p, c);
        for (Letter l : letters_of(m)) acc = acc * tau_letter(d, l);
        out += acc;
    }
    return out;
}

Element apply_delta(const OreData& d, const Element& e) {
    validate_sizes(d);
    const Presentation& p = *d.A;
    Element out = Element::zero(p);
    for (const auto& [m, c] : e.terms()) {
        std::vector<Letter> ls = letters_of(m);
        Element tau_prefix = Element::constant(p, c);
        for (size_t i = 0; i < ls.size(); ++i) {
            std::vector<Factor> rest;
            for (size_t j = i + 1; j < ls.size(); ++j)
                rest.push_back(Factor{ls[j].gen, ls[j].neg ? -1L : 1L});
            Element suffix = p.normalize_word(std::move(rest), Scalar::one(p.field()));
            out += tau_prefix * delta_letter(d, ls[i]) * suffix;
            tau_prefix = tau_prefix * tau_letter(d, ls[i]);
        }
    }
    return out;
}

Diagnostic check_ore_data(const OreData& d) {
    validate_sizes(d);
    const Presentation& p = *d.A;
    Diagnostic diag;
    for (int g = 0; g < p.num_generators(); ++g) {
        if (p.letter_invertible(g)) (void)tau_inverse(d, g); // throws NonInvertibleT
        long n = p.gen(g).torsion;
        if (n > 0) {
            const std::string subject = p.gen(g).name + "^" + std::to_string(n);
            Element te = d.tau[static_cast<size_t>(g)].pow(n) - Element::one(p);
            diag.add("ore-endo", subject, te.str(), te.is_zero());
            // delta of the unreduced word g^n must vanish (Leibniz expansion)
            Element acc = Element::zero(p);
            Element tp = Element::one(p);
            Element ge = Element::generator(p, g);
            for (long i = 0; i < n; ++i) {
                acc += tp * d.delta[static_cast<size_t>(g)] * ge.pow(n - 1 - i);
                tp = tp * d.tau[static_cast<size_t>(g)];
            }
            diag.add("ore-der", subject, acc.str(), acc.is_zero());
        }
    }
    for (const auto& [lhs, rhs] : p.rules()) {
        const Letter u = lhs.first, v = lhs.second;
        const std::string subject = p.letter_str(u) + "*" + p.letter_str(v);
        Element te = tau_letter(d, u) * tau_letter(d, v) - apply_tau(d, rhs);
        diag.add("ore-endo", subject, te.str(), te.is_zero());
        Element de = tau_letter(d, u) * delta_letter(d, v) +
                     delta_letter(d, u) * letter_element(p, v) - apply_delta(d, rhs);
        diag.add("ore-der", subject, de.str(), de.is_zero());
    }
    diag.sort_entries();
    return diag;
}

OreExtension build_ore_extension(const OreData& d) {
    validate_sizes(d);
    const Presentation& A = *d.A;
    if (A.gen_index(d.z_name) >= 0)
        throw Error("BadParameters", "variable name " + d.z_name + " already used in the base");

    // rule right-hand sides in A, including the inverse-letter variants
    struct ZRule {
        Letter g;
        Element tau, delta; // in A
    };
    std::vector<ZRule> zrules;
    for (int g = 0; g < A.num_generators(); ++g) {
        zrules.push_back({{g, false}, d.tau[static_cast<size_t>(g)], d.delta[static_cast<size_t>(g)]});
        if (A.gen(g).invertible && A.gen(g).torsion == 0)
            zrules.push_back({{g, true}, tau_letter(d, {g, true}), delta_letter(d, {g, true})});
    }
    // weight of z: every delta image must sit strictly below z*g
    long zw = 1;
    for (const auto& zr : zrules) {
        long gw = A.gen(zr.g.gen).weight;
        for (const auto& [m, c] : zr.delta.terms())
            zw = std::max(zw, m.weighted_degree(A) - gw + 1);
    }

    auto H = Presentation::create(A.field());
    for (int g = 0; g < A.num_generators(); ++g) H->add_generator(A.gen(g));
    int zi = H->add_generator({d.z_name, false, 0, zw});
    for (const auto& [lhs, rhs] : A.rules()) H->add_rule(lhs.first, lhs.second, rebase(rhs, *H));
    Element ze = Element::generator(*H, zi);
    for (const auto& zr : zrules) {
        Element rhs = rebase(zr.tau, *H) * ze + rebase(zr.delta, *H);
        H->add_rule({zi, false}, zr.g, rhs);
    }
    H->set_degree_cap(std::max(A.degree_cap(), 4 * zw));
    H->finalize();
    return {H, zi};
}

} // namespace hopfore
