#include "hopfore/ncpoly.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace hopfore {

namespace {

Letter letter_of(const Factor& f) { return Letter{f.gen, f.exp < 0}; }

long sign_of(long e) { return e > 0 ? 1 : -1; }

/// Shared term formatting for elements and tensors: coefficient c attached
/// to a printed monomial, parenthesizing composite scalars so that the
/// output re-parses to the same value.
std::string format_term(const Scalar& c, const std::string& mstr) {
    std::string cs = c.str();
    bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    if (mstr == "1") return wrap ? "(" + cs + ")" : cs;
    if (!wrap && cs == "1") return mstr;
    if (!wrap && cs == "-1") return "-" + mstr;
    return (wrap ? "(" + cs + ")" : cs) + "*" + mstr;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

} // namespace

// ----------------------------------------------------------------- Monomial

long Monomial::degree() const {
    long d = 0;
    for (const auto& f : f_) d += std::labs(f.exp);
    return d;
}

long Monomial::weighted_degree(const Presentation& p) const {
    long d = 0;
    for (const auto& f : f_) d += std::labs(f.exp) * p.gen(f.gen).weight;
    return d;
}

bool Monomial::operator<(const Monomial& o) const {
    long d1 = degree(), d2 = o.degree();
    if (d1 != d2) return d1 < d2;
    size_t i = 0, j = 0;
    long ci = 0, cj = 0; // letters already consumed inside the current factor
    while (i < f_.size() && j < o.f_.size()) {
        Letter a = letter_of(f_[i]), b = letter_of(o.f_[j]);
        if (a != b) return a < b;
        long ri = std::labs(f_[i].exp) - ci;
        long rj = std::labs(o.f_[j].exp) - cj;
        long step = ri < rj ? ri : rj;
        ci += step;
        cj += step;
        if (ci == std::labs(f_[i].exp)) { ++i; ci = 0; }
        if (cj == std::labs(o.f_[j].exp)) { ++j; cj = 0; }
    }
    return false; // same degree and all letters equal
}

std::string Monomial::str(const Presentation& p) const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < f_.size(); ++i) {
        if (i) os << "*";
        os << p.gen(f_[i].gen).name;
        if (f_[i].exp != 1) os << "^" << f_[i].exp;
    }
    return os.str();
}

// ------------------------------------------------------------------ Element

Element Element::zero(const Presentation& p) { return Element(p); }

Element Element::one(const Presentation& p) {
    Element e(p);
    e.t_.emplace(Monomial(), Scalar::one(p.field()));
    return e;
}

Element Element::constant(const Presentation& p, const Scalar& c) {
    if (c.field() != p.field()) throw Error("FieldMismatch", "constant field mismatch");
    Element e(p);
    if (!c.is_zero()) e.t_.emplace(Monomial(), c);
    return e;
}

Element Element::generator(const Presentation& p, int gen, long exp) {
    if (gen < 0 || gen >= p.num_generators())
        throw Error("BadParameters", "generator index out of range");
    return p.normalize_word({Factor{gen, exp}}, Scalar::one(p.field()));
}

const Presentation& Element::pres() const {
    if (!p_) throw Error("InvariantViolation", "detached element has no presentation");
    return *p_;
}

long Element::max_degree() const {
    long d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (!p_) throw Error("InvariantViolation", "detached element");
    if (c.field() != p_->field()) throw Error("FieldMismatch", "term coefficient field mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    if (!r.p_) r.p_ = o.p_;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
    Element r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Element Element::operator*(const Element& o) const { return pres().multiply(*this, o); }

Element Element::operator*(const Scalar& c) const {
    Element r = Element(pres());
    for (const auto& [m, cm] : t_) r.add_term(m, cm * c);
    return r;
}

Element Element::pow(long e) const {
    if (e < 0) return invert_element(*this).pow(-e);
    Element acc = Element::one(pres());
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::optional<Scalar> Element::as_scalar() const {
    if (t_.empty()) return Scalar::zero(pres().field());
    if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
    return std::nullopt;
}

std::optional<Monomial> Element::as_monomial() const {
    if (t_.size() == 1 && t_.begin()->second.is_one()) return t_.begin()->first;
    return std::nullopt;
}

std::string Element::str() const {
    std::vector<std::string> parts;
    for (const auto& [m, c] : t_) parts.push_back(format_term(c, m.str(pres())));
    return join_terms(parts);
}

Element invert_element(const Element& e) {
    const Presentation& p = e.pres();
    if (e.terms().size() != 1)
        throw Error("NonInvertible", "only single-term elements are invertible: " + e.str());
    const auto& [m, c] = *e.terms().begin();
    for (const auto& f : m.factors())
        if (!p.letter_invertible(f.gen))
            throw Error("NonInvertible",
                        "generator " + p.gen(f.gen).name + " is not invertible");
    std::vector<Factor> w;
    for (size_t i = m.factors().size(); i-- > 0;)
        w.push_back(Factor{m.factors()[i].gen, -m.factors()[i].exp});
    Element inv = p.normalize_word(std::move(w), c.inv());
    Element check = p.multiply(e, inv);
    if (!(check == Element::one(p)))
        throw Error("NonInvertible", "inverse verification failed for " + e.str());
    return inv;
}

Element rebase(const Element& e, const Presentation& target) {
    const Presentation& src = e.pres();
    if (src.field() != target.field()) throw Error("FieldMismatch", "rebase across fields");
    Element out = Element::zero(target);
    for (const auto& [m, c] : e.terms()) {
        std::vector<Factor> w;
        for (const auto& f : m.factors()) {
            int idx = target.gen_index(src.gen(f.gen).name);
            if (idx < 0)
                throw Error("UnknownName",
                            "generator " + src.gen(f.gen).name + " absent from target presentation");
            w.push_back(Factor{idx, f.exp});
        }
        out += target.normalize_word(std::move(w), c);
    }
    return out;
}

Element apply_hom(const Element& e, const Presentation& target,
                  const std::vector<Element>& images, bool antihom) {
    const Presentation& src = e.pres();
    if (static_cast<int>(images.size()) != src.num_generators())
        throw Error("BadParameters", "one image per generator required");
    Element out = Element::zero(target);
    for (const auto& [m, c] : e.terms()) {
        Element acc = Element::constant(target, c);
        const auto& fs = m.factors();
        for (size_t k = 0; k < fs.size(); ++k) {
            const Factor& f = antihom ? fs[fs.size() - 1 - k] : fs[k];
            const Element& img = images[static_cast<size_t>(f.gen)];
            Element piece = f.exp >= 0 ? img.pow(f.exp) : invert_element(img).pow(-f.exp);
            acc = acc * piece;
        }
        out += acc;
    }
    return out;
}

Element mono_element(const Presentation& p, const Monomial& m) {
    Element e = Element::zero(p);
    e.add_term(m, Scalar::one(p.field()));
    return e;
}

Tensor2 rebase_tensor(const Tensor2& t, const Presentation& target) {
    Tensor2 out = Tensor2::zero(target);
    for (const auto& [k, c] : t.terms()) {
        Element a = rebase(mono_element(t.pres(), k.first), target);
        Element b = rebase(mono_element(t.pres(), k.second), target);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, c * ca * cb);
    }
    return out;
}

// ------------------------------------------------------------- Presentation

std::shared_ptr<Presentation> Presentation::create(FieldSpec f) {
    return std::shared_ptr<Presentation>(new Presentation(std::move(f)));
}

int Presentation::add_generator(GeneratorInfo info) {
    if (finalized_) throw Error("InvariantViolation", "presentation already finalized");
    if (info.name.empty() || !std::isalpha(static_cast<unsigned char>(info.name[0])))
        throw Error("BadParameters", "generator names start with a letter");
    for (char ch : info.name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw Error("BadParameters", "invalid character in generator name " + info.name);
    if (gen_index(info.name) >= 0)
        throw Error("BadParameters", "duplicate generator name " + info.name);
    if (info.weight < 1) throw Error("BadParameters", "generator weight must be positive");
    if (info.torsion < 0) throw Error("BadParameters", "negative torsion");
    if (info.torsion > 0) info.invertible = true; // torsion elements are units
    gens_.push_back(std::move(info));
    return static_cast<int>(gens_.size()) - 1;
}

int Presentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Presentation::letter_invertible(int gen) const {
    const GeneratorInfo& g = gens_[static_cast<size_t>(gen)];
    return g.invertible || g.torsion > 0;
}

std::string Presentation::letter_str(Letter l) const {
    std::string s = gens_[static_cast<size_t>(l.gen)].name;
    if (l.neg) s += "^-1";
    return s;
}

void Presentation::validate_rule(Letter u, Letter v, const Element& rhs) const {
    auto check_letter = [&](Letter l) {
        if (l.gen < 0 || l.gen >= num_generators())
            throw Error("BadParameters", "rule letter index out of range");
        const GeneratorInfo& g = gens_[static_cast<size_t>(l.gen)];
        if (l.neg && !(g.invertible && g.torsion == 0))
            throw Error("BadParameters", "negative rule letter on " + g.name);
    };
    check_letter(u);
    check_letter(v);
    if (u.gen == v.gen)
        throw Error("UnsupportedRule", "rules must relate two distinct generators");
    if (&rhs.pres() != this) throw Error("BadParameters", "rule right-hand side over foreign presentation");

    const long lw = gens_[static_cast<size_t>(u.gen)].weight + gens_[static_cast<size_t>(v.gen)].weight;
    const Monomial lhs(std::vector<Factor>{{u.gen, u.neg ? -1L : 1L}, {v.gen, v.neg ? -1L : 1L}});
    for (const auto& [m, c] : rhs.terms()) {
        long mw = m.weighted_degree(*this);
        long md = m.degree();
        bool smaller = false;
        if (mw != lw) smaller = mw < lw;
        else if (md != 2) smaller = md < 2;
        else smaller = m < lhs; // equal degree: letter-lex comparison
        if (!smaller)
            throw Error("TerminationOrder",
                        "rule " + letter_str(u) + "*" + letter_str(v) +
                            " -> " + rhs.str() + " does not decrease the term order");
    }
}

void Presentation::add_rule(Letter u, Letter v, const Element& rhs) {
    if (finalized_) throw Error("InvariantViolation", "presentation already finalized");
    // re-canonicalize defensively (no rule application)
    Element canon = Element::zero(*this);
    for (const auto& [m, c] : rhs.terms()) {
        std::vector<Factor> w = m.factors();
        canonicalize_factors(w);
        canon.add_term(Monomial(std::move(w)), c);
    }
    validate_rule(u, v, canon);
    if (rules_.count({u, v}))
        throw Error("BadParameters",
                    "duplicate rule for " + letter_str(u) + "*" + letter_str(v));
    rules_.emplace(std::make_pair(u, v), std::move(canon));
}

void Presentation::finalize() {
    if (finalized_) throw Error("InvariantViolation", "presentation already finalized");
    auto neg_ok = [&](int g) {
        return gens_[static_cast<size_t>(g)].invertible && gens_[static_cast<size_t>(g)].torsion == 0;
    };
    // Derive mirrors of plain skew-commutation rules u*v -> c*v*u for the
    // signed variants that can occur in canonical words.
    auto snapshot = rules_;
    for (const auto& [lhs, rhs] : snapshot) {
        const Letter u = lhs.first, v = lhs.second;
        if (rhs.terms().size() != 1) continue;
        const auto& [m, c] = *rhs.terms().begin();
        const std::vector<Factor> want{{v.gen, v.neg ? -1L : 1L}, {u.gen, u.neg ? -1L : 1L}};
        if (!(m.factors() == want)) continue;
        struct Variant { Letter u2, v2; Scalar c2; };
        std::vector<Variant> vars;
        const Letter un{u.gen, !u.neg}, vn{v.gen, !v.neg};
        if (neg_ok(u.gen)) vars.push_back({un, v, c.inv()});
        if (neg_ok(v.gen)) vars.push_back({u, vn, c.inv()});
        if (neg_ok(u.gen) && neg_ok(v.gen)) vars.push_back({un, vn, c});
        for (const auto& var : vars) {
            if (rules_.count({var.u2, var.v2})) continue;
            Element r = Element::zero(*this);
            r.add_term(Monomial(std::vector<Factor>{{var.v2.gen, var.v2.neg ? -1L : 1L},
                                                    {var.u2.gen, var.u2.neg ? -1L : 1L}}),
                       var.c2);
            validate_rule(var.u2, var.v2, r);
            rules_.emplace(std::make_pair(var.u2, var.v2), std::move(r));
        }
    }
    // Coverage: if some signed variant of a rewritten pair can occur in a
    // canonical word, a rule must exist for it, otherwise normal forms would
    // depend on the sign of an exponent.
    for (const auto& [lhs, rhs] : rules_) {
        const Letter u = lhs.first, v = lhs.second;
        for (bool su : {false, true}) {
            if (su && !neg_ok(u.gen)) continue;
            for (bool sv : {false, true}) {
                if (sv && !neg_ok(v.gen)) continue;
                if (!rules_.count({Letter{u.gen, su}, Letter{v.gen, sv}}))
                    throw Error("IncompleteRules",
                                "missing rule for " + letter_str({u.gen, su}) + "*" +
                                    letter_str({v.gen, sv}));
            }
        }
    }
    finalized_ = true;
}

void Presentation::canonicalize_factors(std::vector<Factor>& w) const {
    std::vector<Factor> out;
    auto reduce = [&](Factor f) -> std::optional<Factor> {
        if (f.gen < 0 || f.gen >= num_generators())
            throw Error("BadParameters", "generator index out of range");
        const GeneratorInfo& gi = gens_[static_cast<size_t>(f.gen)];
        if (gi.torsion > 0) {
            long e = f.exp % gi.torsion;
            if (e < 0) e += gi.torsion;
            f.exp = e;
        }
        if (f.exp == 0) return std::nullopt;
        if (f.exp < 0 && !(gi.invertible && gi.torsion == 0))
            throw Error("NonInvertible",
                        "negative exponent on non-invertible generator " + gi.name);
        return f;
    };
    for (const Factor& raw : w) {
        auto rf = reduce(raw);
        if (!rf) continue;
        out.push_back(*rf);
        while (out.size() >= 2 && out[out.size() - 2].gen == out.back().gen) {
            Factor merged{out.back().gen, out[out.size() - 2].exp + out.back().exp};
            out.pop_back();
            out.pop_back();
            auto mf = reduce(merged);
            if (mf) out.push_back(*mf);
        }
    }
    w = std::move(out);
}

Element Presentation::normalize_word(std::vector<Factor> w, const Scalar& c, Strategy s) const {
    if (c.field() != f_) throw Error("FieldMismatch", "coefficient field mismatch");
    Element out(*this);
    std::vector<std::pair<Scalar, std::vector<Factor>>> work;
    work.emplace_back(c, std::move(w));
    while (!work.empty()) {
        auto [co, word] = std::move(work.back());
        work.pop_back();
        if (co.is_zero()) continue;
        canonicalize_factors(word);
        long deg = 0;
        for (const auto& f : word) deg += std::labs(f.exp);
        if (deg > cap_)
            throw Error("DegreeCapExceeded",
                        "intermediate word of degree " + std::to_string(deg) +
                            " exceeds the cap " + std::to_string(cap_));
        const long n = static_cast<long>(word.size());
        long pos = -1;
        if (s == Strategy::Leftmost) {
            for (long i = 0; i + 1 < n; ++i)
                if (rules_.count({letter_of(word[static_cast<size_t>(i)]),
                                  letter_of(word[static_cast<size_t>(i + 1)])})) {
                    pos = i;
                    break;
                }
        } else {
            for (long i = n - 2; i >= 0; --i)
                if (rules_.count({letter_of(word[static_cast<size_t>(i)]),
                                  letter_of(word[static_cast<size_t>(i + 1)])})) {
                    pos = i;
                    break;
                }
        }
        if (pos < 0) {
            out.add_term(Monomial(std::move(word)), co);
            continue;
        }
        Factor lf = word[static_cast<size_t>(pos)];
        Factor rf = word[static_cast<size_t>(pos + 1)];
        const Element& rhs = rules_.at({letter_of(lf), letter_of(rf)});
        lf.exp -= sign_of(lf.exp); // peel one letter off each side of the redex
        rf.exp -= sign_of(rf.exp);
        std::vector<Factor> prefix(word.begin(), word.begin() + pos);
        std::vector<Factor> suffix(word.begin() + pos + 2, word.end());
        for (const auto& [m, cm] : rhs.terms()) {
            std::vector<Factor> nw = prefix;
            if (lf.exp != 0) nw.push_back(lf);
            for (const auto& f : m.factors()) nw.push_back(f);
            if (rf.exp != 0) nw.push_back(rf);
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.emplace_back(co * cm, std::move(nw));
        }
    }
    return out;
}

Element Presentation::multiply(const Element& a, const Element& b, Strategy s) const {
    if (&a.pres() != this || &b.pres() != this)
        throw Error("BadParameters", "multiplication across presentations");
    Element out(*this);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Factor> w = ma.factors();
            w.insert(w.end(), mb.factors().begin(), mb.factors().end());
            out += normalize_word(std::move(w), ca * cb, s);
        }
    }
    return out;
}

Diagnostic Presentation::check_local_confluence() const {
    Diagnostic d;
    for (const auto& [l1, r1] : rules_) {
        for (const auto& [l2, r2] : rules_) {
            if (!(l1.second == l2.first)) continue;
            const Letter u = l1.first, v = l1.second, w = l2.second;
            // resolve the overlap u*v*w both ways and normalize fully
            Element path1 = Element::zero(*this);
            for (const auto& [m, c] : r1.terms()) {
                std::vector<Factor> nw = m.factors();
                nw.push_back(Factor{w.gen, w.neg ? -1L : 1L});
                path1 += normalize_word(std::move(nw), c);
            }
            Element path2 = Element::zero(*this);
            for (const auto& [m, c] : r2.terms()) {
                std::vector<Factor> nw{Factor{u.gen, u.neg ? -1L : 1L}};
                nw.insert(nw.end(), m.factors().begin(), m.factors().end());
                path2 += normalize_word(std::move(nw), c);
            }
            Element diff = path1 - path2;
            d.add("confluence",
                  letter_str(u) + "*" + letter_str(v) + "*" + letter_str(w),
                  diff.str(), diff.is_zero());
        }
    }
    return d;
}

std::vector<Monomial> Presentation::normal_monomials(long max_degree, bool positive_only) const {
    std::vector<Letter> letters;
    for (int g = 0; g < num_generators(); ++g) {
        letters.push_back({g, false});
        if (!positive_only && gens_[static_cast<size_t>(g)].invertible &&
            gens_[static_cast<size_t>(g)].torsion == 0)
            letters.push_back({g, true});
    }
    std::vector<Monomial> out;
    out.emplace_back();
    std::vector<std::vector<Factor>> level{{}};
    for (long d = 1; d <= max_degree; ++d) {
        std::vector<std::vector<Factor>> next;
        for (const auto& word : level) {
            for (const Letter& l : letters) {
                std::vector<Factor> nw = word;
                if (!nw.empty()) {
                    Letter last = letter_of(nw.back());
                    if (rules_.count({last, l})) continue; // redex
                    if (last.gen == l.gen) {
                        if (last.neg != l.neg) continue; // would cancel
                        const GeneratorInfo& gi = gens_[static_cast<size_t>(l.gen)];
                        long mag = std::labs(nw.back().exp) + 1;
                        if (gi.torsion > 0 && mag >= gi.torsion) continue;
                        nw.back().exp += l.neg ? -1 : 1;
                    } else {
                        nw.push_back(Factor{l.gen, l.neg ? -1L : 1L});
                    }
                } else {
                    nw.push_back(Factor{l.gen, l.neg ? -1L : 1L});
                }
                out.emplace_back(nw);
                next.push_back(std::move(nw));
            }
        }
        level = std::move(next);
    }
    return out;
}

// ------------------------------------------------------------------ Tensor2

Tensor2 Tensor2::zero(const Presentation& p) { return Tensor2(p); }

Tensor2 Tensor2::of(const Element& a, const Element& b) {
    if (&a.pres() != &b.pres()) throw Error("BadParameters", "tensor slots over different presentations");
    Tensor2 t(a.pres());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
    return t;
}

const Presentation& Tensor2::pres() const {
    if (!p_) throw Error("InvariantViolation", "detached tensor has no presentation");
    return *p_;
}

void Tensor2::add_term(const Monomial& a, const Monomial& b, const Scalar& c) {
    if (!p_) throw Error("InvariantViolation", "detached tensor");
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 r = *this;
    if (!r.p_) r.p_ = o.p_;
    for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
    return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const { return *this + (-o); }

Tensor2 Tensor2::operator-() const {
    Tensor2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
    const Presentation& p = pres();
    if (&o.pres() != &p) throw Error("BadParameters", "tensor product across presentations");
    Tensor2 r(p);
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            std::vector<Factor> wl = ka.first.factors();
            wl.insert(wl.end(), kb.first.factors().begin(), kb.first.factors().end());
            Element left = p.normalize_word(std::move(wl), Scalar::one(p.field()));
            std::vector<Factor> wr = ka.second.factors();
            wr.insert(wr.end(), kb.second.factors().begin(), kb.second.factors().end());
            Element right = p.normalize_word(std::move(wr), Scalar::one(p.field()));
            Scalar cc = ca * cb;
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms()) r.add_term(lm, rm, cc * lc * rc);
        }
    }
    return r;
}

Tensor2 Tensor2::operator*(const Scalar& c) const {
    Tensor2 r(pres());
    for (const auto& [k, cm] : t_) r.add_term(k.first, k.second, cm * c);
    return r;
}

Tensor2 Tensor2::pow(long e) const {
    if (e < 0) throw Error("BadParameters", "negative tensor power");
    Tensor2 acc = Tensor2::of(Element::one(pres()), Element::one(pres()));
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Tensor2 Tensor2::flip() const {
    Tensor2 r(pres());
    for (const auto& [k, c] : t_) r.add_term(k.second, k.first, c);
    return r;
}

std::string Tensor2::str() const {
    std::vector<std::string> parts;
    for (const auto& [k, c] : t_)
        parts.push_back(format_term(c, k.first.str(pres())) + " (x) " + k.second.str(pres()));
    return join_terms(parts);
}

Tensor2 map_slots(const Tensor2& t, const MonoFn& f1, const MonoFn& f2) {
    Tensor2 r = Tensor2::zero(t.pres());
    for (const auto& [k, c] : t.terms()) {
        Element a = f1(k.first), b = f2(k.second);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) r.add_term(ma, mb, c * ca * cb);
    }
    return r;
}

Element fold_multiply(const Tensor2& t, const MonoFn& f1, const MonoFn& f2) {
    Element r = Element::zero(t.pres());
    for (const auto& [k, c] : t.terms()) r += (f1(k.first) * f2(k.second)) * c;
    return r;
}

// ------------------------------------------------------------------ Tensor3

Tensor3 Tensor3::zero(const Presentation& p) { return Tensor3(p); }

void Tensor3::add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s) {
    if (!p_) throw Error("InvariantViolation", "detached tensor");
    if (s.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(std::move(key), s);
    } else {
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    Tensor3 r = *this;
    if (!r.p_) r.p_ = o.p_;
    for (const auto& [k, c] : o.t_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return r;
}

std::string Tensor3::str() const {
    if (!p_ || t_.empty()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, c] : t_)
        parts.push_back(format_term(c, std::get<0>(k).str(*p_)) + " (x) " +
                        std::get<1>(k).str(*p_) + " (x) " + std::get<2>(k).str(*p_));
    return join_terms(parts);
}

Tensor3 expand_slot(const Tensor2& t, int slot,
                    const std::function<Tensor2(const Monomial&)>& f) {
    Tensor3 r = Tensor3::zero(t.pres());
    for (const auto& [k, c] : t.terms()) {
        Tensor2 ex = f(slot == 0 ? k.first : k.second);
        for (const auto& [k2, c2] : ex.terms()) {
            if (slot == 0)
                r.add_term(k2.first, k2.second, k.second, c * c2);
            else
                r.add_term(k.first, k2.first, k2.second, c * c2);
        }
    }
    return r;
}

} // namespace hopfore
