#include "hopfore/hopf.hpp"

namespace hopfore {

HopfStructure::HopfStructure(std::shared_ptr<const Presentation> p) : p_(std::move(p)) {
    if (!p_) throw Error("BadParameters", "null presentation");
    if (!p_->finalized()) throw Error("InvariantViolation", "presentation not finalized");
    size_t n = static_cast<size_t>(p_->num_generators());
    delta_.resize(n);
    counit_.resize(n);
    antipode_.resize(n);
}

void HopfStructure::set_delta(int gen, Tensor2 d) {
    if (&d.pres() != p_.get()) throw Error("BadParameters", "delta over foreign presentation");
    delta_.at(static_cast<size_t>(gen)) = std::move(d);
}

void HopfStructure::set_counit(int gen, Scalar c) {
    if (c.field() != p_->field()) throw Error("FieldMismatch", "counit value field mismatch");
    counit_.at(static_cast<size_t>(gen)) = std::move(c);
}

void HopfStructure::set_antipode(int gen, Element s) {
    if (&s.pres() != p_.get()) throw Error("BadParameters", "antipode over foreign presentation");
    antipode_.at(static_cast<size_t>(gen)) = std::move(s);
}

void HopfStructure::validate() const {
    for (int g = 0; g < p_->num_generators(); ++g) {
        const std::string& name = p_->gen(g).name;
        if (!delta_[static_cast<size_t>(g)] || !counit_[static_cast<size_t>(g)] ||
            !antipode_[static_cast<size_t>(g)])
            throw Error("BadParameters", "incomplete Hopf data on generator " + name);
        const GeneratorInfo& gi = p_->gen(g);
        if (gi.invertible && gi.torsion == 0) {
            Element eg = Element::generator(*p_, g);
            if (!(delta_gen(g) == Tensor2::of(eg, eg)))
                throw Error("InvariantViolation",
                            "invertible generator " + name + " must be group-like");
            if (counit_gen(g).is_zero())
                throw Error("InvariantViolation",
                            "counit must be nonzero on invertible generator " + name);
        }
    }
}

const Tensor2& HopfStructure::delta_gen(int g) const {
    const auto& v = delta_.at(static_cast<size_t>(g));
    if (!v) throw Error("BadParameters", "delta unset on generator " + p_->gen(g).name);
    return *v;
}

const Scalar& HopfStructure::counit_gen(int g) const {
    const auto& v = counit_.at(static_cast<size_t>(g));
    if (!v) throw Error("BadParameters", "counit unset on generator " + p_->gen(g).name);
    return *v;
}

const Element& HopfStructure::antipode_gen(int g) const {
    const auto& v = antipode_.at(static_cast<size_t>(g));
    if (!v) throw Error("BadParameters", "antipode unset on generator " + p_->gen(g).name);
    return *v;
}

Tensor2 HopfStructure::delta_mono(const Monomial& m) const {
    Tensor2 acc = Tensor2::of(Element::one(*p_), Element::one(*p_));
    for (const auto& f : m.factors()) {
        Tensor2 base;
        long reps;
        if (f.exp < 0) {
            // invertible generators are group-like, so Delta(g^e) = g^e (x) g^e
            Element ge = Element::generator(*p_, f.gen, f.exp);
            base = Tensor2::of(ge, ge);
            reps = 1;
        } else {
            base = delta_gen(f.gen);
            reps = f.exp;
        }
        for (long i = 0; i < reps; ++i) acc = acc * base;
    }
    return acc;
}

Tensor2 HopfStructure::delta(const Element& e) const {
    Tensor2 acc = Tensor2::zero(*p_);
    for (const auto& [m, c] : e.terms()) acc += delta_mono(m) * c;
    return acc;
}

Scalar HopfStructure::counit(const Element& e) const {
    Scalar acc = Scalar::zero(p_->field());
    for (const auto& [m, c] : e.terms()) {
        Scalar v = c;
        for (const auto& f : m.factors()) {
            Scalar ce = counit_gen(f.gen);
            if (f.exp < 0) ce = ce.inv();
            v = v * ce.pow(std::labs(f.exp));
        }
        acc += v;
    }
    return acc;
}

Element HopfStructure::antipode(const Element& e) const {
    Element acc = Element::zero(*p_);
    for (const auto& [m, c] : e.terms()) {
        Element prod = Element::constant(*p_, c);
        const auto& fs = m.factors();
        for (size_t k = fs.size(); k-- > 0;) {
            const Factor& f = fs[k];
            Element s = antipode_gen(f.gen);
            Element piece = f.exp >= 0 ? s.pow(f.exp) : invert_element(s).pow(-f.exp);
            prod = prod * piece;
        }
        acc += prod;
    }
    return acc;
}

Diagnostic check_hopf_axioms(const HopfStructure& h) {
    const Presentation& p = h.pres();
    Diagnostic d;
    const Element one = Element::one(p);
    const Tensor2 unit2 = Tensor2::of(one, one);
    auto dmono = [&](const Monomial& m) { return h.delta_mono(m); };
    auto emono = [&](const Monomial& m) { return mono_element(p, m); };
    auto smono = [&](const Monomial& m) { return h.antipode(mono_element(p, m)); };
    auto epsmono = [&](const Monomial& m) {
        return Element::constant(p, h.counit(mono_element(p, m)));
    };

    for (int g = 0; g < p.num_generators(); ++g) {
        const std::string name = p.gen(g).name;
        const Tensor2& dg = h.delta_gen(g);
        Element ge = Element::generator(p, g);

        Tensor3 co = expand_slot(dg, 0, dmono) - expand_slot(dg, 1, dmono);
        d.add("coassoc", name, co.str(), co.is_zero());

        Element cl = fold_multiply(dg, epsmono, emono) - ge;
        d.add("counit-left", name, cl.str(), cl.is_zero());
        Element cr = fold_multiply(dg, emono, epsmono) - ge;
        d.add("counit-right", name, cr.str(), cr.is_zero());

        Element eps1 = Element::constant(p, h.counit_gen(g));
        Element al = fold_multiply(dg, smono, emono) - eps1;
        d.add("antipode-left", name, al.str(), al.is_zero());
        Element ar = fold_multiply(dg, emono, smono) - eps1;
        d.add("antipode-right", name, ar.str(), ar.is_zero());

        long n = p.gen(g).torsion;
        if (n > 0) {
            Tensor2 dt = dg.pow(n) - unit2;
            d.add("delta-relation", name + "^" + std::to_string(n), dt.str(), dt.is_zero());
            Scalar et = h.counit_gen(g).pow(n) - Scalar::one(p.field());
            d.add("counit-relation", name + "^" + std::to_string(n), et.str(), et.is_zero());
            Element st = h.antipode_gen(g).pow(n) - one;
            d.add("antipode-relation", name + "^" + std::to_string(n), st.str(), st.is_zero());
        }
    }

    for (const auto& [lhs, rhs] : p.rules()) {
        const Letter u = lhs.first, v = lhs.second;
        const std::string subject = p.letter_str(u) + "*" + p.letter_str(v);
        const Monomial lm(std::vector<Factor>{{u.gen, u.neg ? -1L : 1L}, {v.gen, v.neg ? -1L : 1L}});
        Element ue = p.normalize_word({{u.gen, u.neg ? -1L : 1L}}, Scalar::one(p.field()));
        Element ve = p.normalize_word({{v.gen, v.neg ? -1L : 1L}}, Scalar::one(p.field()));

        Tensor2 dl = h.delta_mono(lm) - h.delta(rhs);
        d.add("delta-relation", subject, dl.str(), dl.is_zero());

        Scalar el = h.counit(ue) * h.counit(ve) - h.counit(rhs);
        d.add("counit-relation", subject, el.str(), el.is_zero());

        Element sl = h.antipode(ve) * h.antipode(ue) - h.antipode(rhs);
        d.add("antipode-relation", subject, sl.str(), sl.is_zero());
    }

    // degree-2 antipode products
    for (int g = 0; g < p.num_generators(); ++g) {
        for (int g2 = 0; g2 < p.num_generators(); ++g2) {
            Element e = Element::generator(p, g) * Element::generator(p, g2);
            const std::string subject = p.gen(g).name + "*" + p.gen(g2).name;
            Tensor2 de = h.delta(e);
            Element eps = Element::constant(p, h.counit(e));
            Element al = fold_multiply(de, smono, emono) - eps;
            d.add("antipode-left", subject, al.str(), al.is_zero());
            Element ar = fold_multiply(de, emono, smono) - eps;
            d.add("antipode-right", subject, ar.str(), ar.is_zero());
        }
    }

    d.merge(p.check_local_confluence());
    d.sort_entries();
    return d;
}

bool is_grouplike(const HopfStructure& h, const Element& e) {
    if (e.is_zero()) return false;
    if (!(h.delta(e) == Tensor2::of(e, e))) return false;
    return h.counit(e).is_one();
}

bool is_skew_primitive(const HopfStructure& h, const Element& a,
                       const Element& g, const Element& hh) {
    return h.delta(a) == Tensor2::of(a, g) + Tensor2::of(hh, a);
}

Element adjoint(const HopfStructure& h, const Element& a, const Element& b) {
    const Presentation& p = h.pres();
    return fold_multiply(h.delta(a),
                         [&](const Monomial& m) { return mono_element(p, m) * b; },
                         [&](const Monomial& m) { return h.antipode(mono_element(p, m)); });
}

Scalar Character::eval(const Element& e) const {
    Scalar acc = Scalar::zero(pres->field());
    for (const auto& [m, c] : e.terms()) {
        Scalar v = c;
        for (const auto& f : m.factors()) {
            Scalar gv = values.at(static_cast<size_t>(f.gen));
            if (f.exp < 0) gv = gv.inv();
            v = v * gv.pow(std::labs(f.exp));
        }
        acc += v;
    }
    return acc;
}

Diagnostic check_character(const Presentation& p, const std::vector<Scalar>& values) {
    Diagnostic d;
    if (static_cast<int>(values.size()) != p.num_generators())
        throw Error("BadParameters", "one character value per generator required");
    auto eval = [&](const Element& e) {
        Scalar acc = Scalar::zero(p.field());
        for (const auto& [m, c] : e.terms()) {
            Scalar v = c;
            for (const auto& f : m.factors()) {
                Scalar gv = values.at(static_cast<size_t>(f.gen));
                if (f.exp < 0) gv = gv.inv();
                v = v * gv.pow(std::labs(f.exp));
            }
            acc += v;
        }
        return acc;
    };
    for (int g = 0; g < p.num_generators(); ++g) {
        const GeneratorInfo& gi = p.gen(g);
        if (p.letter_invertible(g)) {
            bool ok = !values[static_cast<size_t>(g)].is_zero();
            d.add("character-invertible", gi.name, ok ? "0" : "value 0 on a unit", ok);
            if (!ok) return d; // cannot evaluate relations safely
        }
        if (gi.torsion > 0) {
            Scalar t = values[static_cast<size_t>(g)].pow(gi.torsion) - Scalar::one(p.field());
            d.add("character-relation", gi.name + "^" + std::to_string(gi.torsion), t.str(),
                  t.is_zero());
        }
    }
    for (const auto& [lhs, rhs] : p.rules()) {
        const Letter u = lhs.first, v = lhs.second;
        Scalar uv = values.at(static_cast<size_t>(u.gen));
        if (u.neg) uv = uv.inv();
        Scalar vv = values.at(static_cast<size_t>(v.gen));
        if (v.neg) vv = vv.inv();
        Scalar res = uv * vv - eval(rhs);
        d.add("character-relation", p.letter_str(u) + "*" + p.letter_str(v), res.str(),
              res.is_zero());
    }
    d.sort_entries();
    return d;
}

std::optional<SkewPrimSolutions> solve_skew_primitive_equation(
    const HopfStructure& h, const Tensor2& rhs, const Element& g,
    const Element& hh, long bound) {
    const Presentation& p = h.pres();
    if (!is_grouplike(h, g) || !is_grouplike(h, hh))
        throw Error("NotGrouplike", "skew-primitive equation needs group-like flankers");
    for (const auto& [k, c] : rhs.terms()) {
        if (k.first.degree() > bound || k.second.degree() > bound)
            throw Error("DegreeBoundExceeded",
                        "right-hand side exceeds the degree bound " + std::to_string(bound));
    }

    std::vector<Monomial> basis = p.normal_monomials(bound);
    std::vector<Tensor2> cols;
    cols.reserve(basis.size());
    std::map<std::pair<Monomial, Monomial>, size_t> rows;
    auto touch = [&](const Tensor2& t) {
        for (const auto& [k, c] : t.terms())
            rows.emplace(k, rows.size());
    };
    for (const Monomial& m : basis) {
        Element me = mono_element(p, m);
        Tensor2 col = h.delta_mono(m) - Tensor2::of(me, g) - Tensor2::of(hh, me);
        touch(col);
        cols.push_back(std::move(col));
    }
    touch(rhs);
    // re-number rows deterministically in key order
    size_t idx = 0;
    for (auto& [k, v] : rows) v = idx++;

    const FieldSpec& f = p.field();
    std::vector<std::vector<Scalar>> mat(rows.size(),
                                         std::vector<Scalar>(basis.size(), Scalar::zero(f)));
    std::vector<Scalar> vec(rows.size(), Scalar::zero(f));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, c] : cols[j].terms()) mat[rows.at(k)][j] = c;
    for (const auto& [k, c] : rhs.terms()) vec[rows.at(k)] = c;

    auto sol = solve_linear(mat, vec, f);
    if (!sol) return std::nullopt;
    SkewPrimSolutions out;
    out.particular = Element::zero(p);
    for (size_t j = 0; j < basis.size(); ++j) out.particular.add_term(basis[j], sol->particular[j]);
    for (const auto& kv : sol->kernel) {
        Element k = Element::zero(p);
        for (size_t j = 0; j < basis.size(); ++j) k.add_term(basis[j], kv[j]);
        out.kernel.push_back(std::move(k));
    }
    return out;
}

} // namespace hopfore
