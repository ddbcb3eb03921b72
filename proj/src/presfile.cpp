#include "hopfore/presfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfore {

// ------------------------------------------------------------- expressions

namespace {

struct Tok {
    enum K { Name, Int, Plus, Minus, Star, Slash, Caret, LPar, RPar, Tensor, End } k;
    std::string s;
    size_t col = 0; // 1-based
};

[[noreturn]] void syntax_fail(const std::string& loc, size_t col, const std::string& msg) {
    std::string prefix = loc.empty() ? "" : loc + ": ";
    throw Error("SyntaxError", prefix + "column " + std::to_string(col) + ": " + msg);
}

std::vector<Tok> lex(const std::string& s, const std::string& loc) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t col = i + 1;
        if (c == '(' && i + 2 < s.size() && s[i + 1] == 'x' && s[i + 2] == ')') {
            out.push_back({Tok::Tensor, "(x)", col});
            i += 3;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Name, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        Tok::K k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LPar; break;
        case ')': k = Tok::RPar; break;
        default: syntax_fail(loc, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

/// Either a plain element or a 2-tensor (an expression containing "(x)").
struct Val {
    std::optional<Element> el;
    std::optional<Tensor2> tn;
};

class ExprParser {
public:
    ExprParser(const std::string& s, const Presentation& p, std::string loc)
        : p_(p), loc_(std::move(loc)), toks_(lex(s, loc_)) {}

    Val run() {
        Val v = expr();
        expect_end();
        return v;
    }

private:
    const Presentation& p_;
    std::string loc_;
    std::vector<Tok> toks_;
    size_t i_ = 0;

    const Tok& cur() const { return toks_[i_]; }
    void advance() { ++i_; }
    [[noreturn]] void fail(const std::string& msg) { syntax_fail(loc_, cur().col, msg); }
    void expect_end() {
        if (cur().k != Tok::End) fail("unexpected trailing input");
    }

    Val expr() {
        bool neg = false;
        if (cur().k == Tok::Minus) { neg = true; advance(); }
        Val acc = term();
        if (neg) acc = negate(acc);
        while (cur().k == Tok::Plus || cur().k == Tok::Minus) {
            bool minus = cur().k == Tok::Minus;
            advance();
            Val rhs = term();
            acc = combine(acc, minus ? negate(rhs) : rhs);
        }
        return acc;
    }

    Val negate(Val v) {
        if (v.el) v.el = -*v.el;
        if (v.tn) v.tn = -*v.tn;
        return v;
    }

    Val combine(Val a, Val b) {
        if (a.el && b.el) return {*a.el + *b.el, std::nullopt};
        Tensor2 ta = as_tensor(a), tb = as_tensor(b);
        return {std::nullopt, ta + tb};
    }

    Tensor2 as_tensor(const Val& v) {
        if (v.tn) return *v.tn;
        if (v.el->is_zero()) return Tensor2::zero(p_);
        fail("cannot mix tensor and plain terms in a sum");
    }

    Val term() {
        Val a = prod();
        if (cur().k == Tok::Tensor) {
            size_t col = cur().col;
            advance();
            if (cur().k == Tok::End || cur().k == Tok::Plus || cur().k == Tok::Minus ||
                cur().k == Tok::RPar)
                syntax_fail(loc_, cur().col, "missing right factor of the tensor");
            Val b = prod();
            if (!a.el || !b.el)
                syntax_fail(loc_, col, "nested tensors are not supported");
            return {std::nullopt, Tensor2::of(*a.el, *b.el)};
        }
        return a;
    }

    Val prod() {
        Val a = factor();
        while (cur().k == Tok::Star || cur().k == Tok::Slash) {
            bool div = cur().k == Tok::Slash;
            size_t col = cur().col;
            advance();
            Val b = factor();
            if (!a.el || !b.el) syntax_fail(loc_, col, "tensors cannot appear in a product");
            if (div) {
                std::optional<Scalar> s = b.el->as_scalar();
                if (!s) syntax_fail(loc_, col, "division by a non-scalar");
                if (s->is_zero()) syntax_fail(loc_, col, "division by zero");
                a.el = *a.el * s->inv();
            } else {
                a.el = *a.el * *b.el;
            }
        }
        return a;
    }

    Val factor() {
        if (cur().k == Tok::Minus) {
            advance();
            return negate(factor());
        }
        Val a = atom();
        if (cur().k == Tok::Caret) {
            size_t col = cur().col;
            advance();
            long sign = 1;
            if (cur().k == Tok::Minus) { sign = -1; advance(); }
            if (cur().k != Tok::Int) fail("expected an integer exponent");
            long e = std::stol(cur().s);
            advance();
            if (!a.el) syntax_fail(loc_, col, "cannot raise a tensor to a power");
            a.el = a.el->pow(sign * e);
        }
        return a;
    }

    Val atom() {
        switch (cur().k) {
        case Tok::Int: {
            mpq_class v(cur().s, 10);
            advance();
            return {Element::constant(p_, Scalar::from_mpq(p_.field(), v)), std::nullopt};
        }
        case Tok::Name: {
            std::string name = cur().s;
            size_t col = cur().col;
            advance();
            int g = p_.gen_index(name);
            if (g >= 0) return {Element::generator(p_, g), std::nullopt};
            const FieldSpec& f = p_.field();
            if (f.kind == FieldKind::RationalFunctions && name == f.var)
                return {Element::constant(p_, Scalar::variable(f)), std::nullopt};
            throw Error("UnknownGenerator",
                        (loc_.empty() ? "" : loc_ + ": ") + "column " +
                            std::to_string(col) + ": unknown name '" + name + "'");
        }
        case Tok::LPar: {
            advance();
            Val v = expr();
            if (cur().k != Tok::RPar) fail("expected ')'");
            advance();
            return v;
        }
        default: fail("expected a value");
        }
    }
};

} // namespace

Element parse_element(const std::string& s, const Presentation& p, const std::string& loc) {
    Val v = ExprParser(s, p, loc).run();
    if (v.el) return *v.el;
    if (v.tn->is_zero()) return Element::zero(p);
    throw Error("SyntaxError",
                (loc.empty() ? "" : loc + ": ") + "tensor expression where an element was expected");
}

Tensor2 parse_tensor2(const std::string& s, const Presentation& p, const std::string& loc) {
    Val v = ExprParser(s, p, loc).run();
    if (v.tn) return *v.tn;
    if (v.el->is_zero()) return Tensor2::zero(p);
    throw Error("SyntaxError",
                (loc.empty() ? "" : loc + ": ") + "plain expression where a tensor was expected");
}

// --------------------------------------------------------------- file model

namespace {

struct KeyVal {
    std::string key, value;
    int line = 0;
    bool quoted = false;
};

struct Block {
    std::string section; // "field", "generator", "relation", "hopf", ...
    int line = 0;
    std::vector<KeyVal> items;
};

int section_rank(const std::string& s) {
    if (s == "field") return 0;
    if (s == "generator") return 1;
    if (s == "relation") return 2;
    if (s == "hopf") return 3;
    if (s == "ore") return 4;
    if (s == "ghoe") return 5;
    if (s == "witness") return 6;
    return -1;
}

[[noreturn]] void file_fail(const std::string& name, int line, const std::string& msg) {
    throw Error("SyntaxError", name + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    bool quote = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quote = !quote;
        if (s[i] == '#' && !quote) return s.substr(0, i);
    }
    return s;
}

std::vector<Block> collect_blocks(const std::string& text, const std::string& name) {
    std::vector<Block> blocks;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int max_rank = -1;
    Block* cur = nullptr;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (s.front() == '[') {
            bool dbl = s.size() >= 2 && s[1] == '[';
            size_t pre = dbl ? 2 : 1;
            if (s.size() < 2 * pre + 1 ||
                s.substr(s.size() - pre) != std::string(pre, ']'))
                file_fail(name, line, "malformed section header " + s);
            std::string sec = s.substr(pre, s.size() - 2 * pre);
            int rank = section_rank(sec);
            if (rank < 0) file_fail(name, line, "unknown section [" + sec + "]");
            bool repeatable = (rank == 1 || rank == 2);
            if (repeatable != dbl)
                file_fail(name, line,
                          repeatable ? "section must be written [[" + sec + "]]"
                                     : "section must be written [" + sec + "]");
            if (rank < max_rank) file_fail(name, line, "section [" + sec + "] out of order");
            if (!repeatable && rank == max_rank)
                file_fail(name, line, "duplicate section [" + sec + "]");
            max_rank = rank;
            blocks.push_back({sec, line, {}});
            cur = &blocks.back();
            continue;
        }
        if (!cur) file_fail(name, line, "content before the first section header");
        size_t eq = s.find('=');
        if (eq == std::string::npos) file_fail(name, line, "expected key = value");
        KeyVal kv;
        kv.key = trim(s.substr(0, eq));
        kv.line = line;
        std::string v = trim(s.substr(eq + 1));
        if (kv.key.empty()) file_fail(name, line, "empty key");
        if (v.empty()) file_fail(name, line, "empty value for key " + kv.key);
        if (v.front() == '"') {
            if (v.size() < 2 || v.back() != '"')
                file_fail(name, line, "unterminated quoted value");
            kv.value = v.substr(1, v.size() - 2);
            kv.quoted = true;
        } else {
            if (v.find('"') != std::string::npos)
                file_fail(name, line, "stray quote in bare value");
            kv.value = v;
        }
        for (const auto& other : cur->items)
            if (other.key == kv.key)
                file_fail(name, line, "duplicate key " + kv.key);
        cur->items.push_back(std::move(kv));
    }
    return blocks;
}

long parse_long(const KeyVal& kv, const std::string& name) {
    try {
        size_t pos = 0;
        long v = std::stol(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        file_fail(name, kv.line, "expected an integer for key " + kv.key);
    }
}

bool parse_bool(const KeyVal& kv, const std::string& name) {
    if (kv.value == "true") return true;
    if (kv.value == "false") return false;
    file_fail(name, kv.line, "expected true or false for key " + kv.key);
}

const KeyVal* find_key(const Block& b, const std::string& key) {
    for (const auto& kv : b.items)
        if (kv.key == key) return &kv;
    return nullptr;
}

const KeyVal& need_key(const Block& b, const std::string& key, const std::string& name) {
    const KeyVal* kv = find_key(b, key);
    if (!kv) file_fail(name, b.line, "missing key " + key + " in [" + b.section + "]");
    return *kv;
}

std::string loc_of(const std::string& name, const KeyVal& kv) {
    return name + ":" + std::to_string(kv.line);
}

FieldSpec parse_field_block(const Block& b, const std::string& name) {
    const KeyVal& kind = need_key(b, "kind", name);
    FieldSpec f;
    if (kind.value == "Q") {
        f = FieldSpec::Q();
    } else if (kind.value == "Fp") {
        f = FieldSpec::Fp(parse_long(need_key(b, "p", name), name));
    } else if (kind.value == "Qt") {
        const KeyVal* var = find_key(b, "var");
        f = FieldSpec::Qt(var ? var->value : "q");
    } else {
        file_fail(name, kind.line, "unknown field kind " + kind.value);
    }
    for (const auto& kv : b.items) {
        bool ok = kv.key == "kind" || (kind.value == "Fp" && kv.key == "p") ||
                  (kind.value == "Qt" && kv.key == "var");
        if (!ok) file_fail(name, kv.line, "unknown key " + kv.key + " in [field]");
    }
    return f;
}

/// lhs of a relation: a product of exactly two signed letters.
std::pair<Letter, Letter> parse_letter_pair(const KeyVal& kv, const Presentation& p,
                                            const std::string& name) {
    std::string loc = loc_of(name, kv);
    std::vector<Tok> toks = lex(kv.value, loc);
    auto letter = [&](size_t& i) -> Letter {
        if (toks[i].k != Tok::Name) syntax_fail(loc, toks[i].col, "expected a generator");
        int g = p.gen_index(toks[i].s);
        if (g < 0)
            throw Error("UnknownGenerator", loc + ": unknown generator '" + toks[i].s + "'");
        ++i;
        bool neg = false;
        if (toks[i].k == Tok::Caret) {
            ++i;
            bool minus = false;
            if (toks[i].k == Tok::Minus) { minus = true; ++i; }
            if (toks[i].k != Tok::Int || toks[i].s != "1")
                syntax_fail(loc, toks[i].col, "relation letters must have exponent 1 or -1");
            ++i;
            neg = minus;
        }
        return Letter{g, neg};
    };
    size_t i = 0;
    Letter u = letter(i);
    if (toks[i].k != Tok::Star) syntax_fail(loc, toks[i].col, "expected '*' between the two letters");
    ++i;
    Letter v = letter(i);
    if (toks[i].k != Tok::End) syntax_fail(loc, toks[i].col, "relation lhs must be a two-letter product");
    return {u, v};
}

/// Splits "prefix.genname" keys; returns the generator index or fails.
int keyed_gen(const KeyVal& kv, const std::string& prefix, const Presentation& p,
              const std::string& name) {
    std::string g = kv.key.substr(prefix.size() + 1);
    int i = p.gen_index(g);
    if (i < 0)
        throw Error("UnknownGenerator", loc_of(name, kv) + ": unknown generator '" + g + "'");
    return i;
}

bool has_prefix(const std::string& key, const std::string& prefix) {
    return key.size() > prefix.size() + 1 && key.compare(0, prefix.size(), prefix) == 0 &&
           key[prefix.size()] == '.';
}

} // namespace

ParsedModel parse_presentation_text(const std::string& text, const std::string& name,
                                    const std::optional<FieldSpec>& field_override) {
    std::vector<Block> blocks = collect_blocks(text, name);
    std::optional<FieldSpec> field = field_override;
    if (!field) {
        for (const auto& b : blocks)
            if (b.section == "field") field = parse_field_block(b, name);
        if (!field)
            throw Error("InvariantViolation", name + ": missing [field] section");
    }

    auto pres = Presentation::create(*field);
    ParsedModel m;
    m.pres = pres;

    for (const auto& b : blocks) {
        if (b.section == "field") continue;
        if (b.section == "generator") {
            GeneratorInfo info;
            info.name = need_key(b, "name", name).value;
            for (const auto& kv : b.items) {
                if (kv.key == "name") continue;
                if (kv.key == "invertible") info.invertible = parse_bool(kv, name);
                else if (kv.key == "torsion") info.torsion = parse_long(kv, name);
                else if (kv.key == "weight") info.weight = parse_long(kv, name);
                else file_fail(name, kv.line, "unknown key " + kv.key + " in [[generator]]");
            }
            if (pres->gen_index(info.name) >= 0)
                throw Error("InvariantViolation",
                            name + ":" + std::to_string(b.line) + ": duplicate generator " +
                                info.name);
            pres->add_generator(info);
            continue;
        }
        if (b.section == "relation") {
            const KeyVal& lhs = need_key(b, "lhs", name);
            const KeyVal& rhs = need_key(b, "rhs", name);
            for (const auto& kv : b.items)
                if (kv.key != "lhs" && kv.key != "rhs")
                    file_fail(name, kv.line, "unknown key " + kv.key + " in [[relation]]");
            auto [u, v] = parse_letter_pair(lhs, *pres, name);
            pres->add_rule(u, v, parse_element(rhs.value, *pres, loc_of(name, rhs)));
            continue;
        }
        if (!pres->finalized()) pres->finalize();

        if (b.section == "hopf") {
            auto h = std::make_shared<HopfStructure>(pres);
            for (const auto& kv : b.items) {
                std::string loc = loc_of(name, kv);
                if (has_prefix(kv.key, "delta"))
                    h->set_delta(keyed_gen(kv, "delta", *pres, name),
                                 parse_tensor2(kv.value, *pres, loc));
                else if (has_prefix(kv.key, "counit")) {
                    std::optional<Scalar> s =
                        parse_element(kv.value, *pres, loc).as_scalar();
                    if (!s) file_fail(name, kv.line, "counit value must be a scalar");
                    h->set_counit(keyed_gen(kv, "counit", *pres, name), *s);
                } else if (has_prefix(kv.key, "antipode"))
                    h->set_antipode(keyed_gen(kv, "antipode", *pres, name),
                                    parse_element(kv.value, *pres, loc));
                else
                    file_fail(name, kv.line, "unknown key " + kv.key + " in [hopf]");
            }
            h->validate();
            m.hopf = h;
            continue;
        }
        if (b.section == "ore") {
            OreData d;
            d.A = pres;
            int n = pres->num_generators();
            std::vector<std::optional<Element>> tau(static_cast<size_t>(n));
            std::vector<std::optional<Element>> del(static_cast<size_t>(n));
            for (const auto& kv : b.items) {
                std::string loc = loc_of(name, kv);
                if (kv.key == "z") d.z_name = kv.value;
                else if (has_prefix(kv.key, "tau"))
                    tau[static_cast<size_t>(keyed_gen(kv, "tau", *pres, name))] =
                        parse_element(kv.value, *pres, loc);
                else if (has_prefix(kv.key, "delta"))
                    del[static_cast<size_t>(keyed_gen(kv, "delta", *pres, name))] =
                        parse_element(kv.value, *pres, loc);
                else
                    file_fail(name, kv.line, "unknown key " + kv.key + " in [ore]");
            }
            for (int i = 0; i < n; ++i) {
                if (!tau[static_cast<size_t>(i)])
                    throw Error("InvariantViolation",
                                name + ": missing tau." + pres->gen(i).name + " in [ore]");
                if (!del[static_cast<size_t>(i)])
                    throw Error("InvariantViolation",
                                name + ": missing delta." + pres->gen(i).name + " in [ore]");
                d.tau.push_back(*tau[static_cast<size_t>(i)]);
                d.delta.push_back(*del[static_cast<size_t>(i)]);
            }
            m.ore = std::move(d);
            continue;
        }
        if (b.section == "ghoe") {
            if (!m.hopf)
                throw Error("InvariantViolation",
                            name + ":" + std::to_string(b.line) + ": hopf structure required");
            if (!m.ore)
                throw Error("InvariantViolation",
                            name + ":" + std::to_string(b.line) + ": ore data required");
            GhoeData d;
            d.A = pres;
            d.hopf = m.hopf;
            d.ore = *m.ore;
            int n = pres->num_generators();
            std::vector<std::optional<Scalar>> chi(static_cast<size_t>(n));
            bool any_chi = false;
            std::map<std::string, Element> parts;
            for (const auto& kv : b.items) {
                std::string loc = loc_of(name, kv);
                if (kv.key == "r1" || kv.key == "r2" || kv.key == "x" || kv.key == "y")
                    parts.emplace(kv.key, parse_element(kv.value, *pres, loc));
                else if (has_prefix(kv.key, "chi")) {
                    std::optional<Scalar> s =
                        parse_element(kv.value, *pres, loc).as_scalar();
                    if (!s) file_fail(name, kv.line, "chi value must be a scalar");
                    chi[static_cast<size_t>(keyed_gen(kv, "chi", *pres, name))] = *s;
                    any_chi = true;
                } else
                    file_fail(name, kv.line, "unknown key " + kv.key + " in [ghoe]");
            }
            for (const char* k : {"r1", "r2", "x", "y"})
                if (!parts.count(k))
                    file_fail(name, b.line, std::string("missing key ") + k + " in [ghoe]");
            d.r1 = parts.at("r1");
            d.r2 = parts.at("r2");
            d.x = parts.at("x");
            d.y = parts.at("y");
            if (any_chi) {
                std::vector<Scalar> values;
                for (int i = 0; i < n; ++i) {
                    if (!chi[static_cast<size_t>(i)])
                        throw Error("InvariantViolation",
                                    name + ": chi is declared for some generators only");
                    values.push_back(*chi[static_cast<size_t>(i)]);
                }
                d.chi = std::move(values);
            }
            m.ghoe = std::move(d);
            continue;
        }
        if (b.section == "witness") {
            for (const auto& kv : b.items) m.witness[kv.key] = kv.value;
            continue;
        }
    }
    if (!pres->finalized()) pres->finalize();
    return m;
}

ParsedModel parse_presentation(const std::string& path,
                               const std::optional<FieldSpec>& field_override) {
    std::ifstream in(path);
    if (!in) throw Error("BadParameters", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str(), path, field_override);
}

// ----------------------------------------------------------------- printing

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void print_field(std::ostream& os, const FieldSpec& f) {
    os << "[field]\n";
    switch (f.kind) {
    case FieldKind::Rationals: os << "kind = Q\n"; break;
    case FieldKind::PrimeField: os << "kind = Fp\np = " << f.p << "\n"; break;
    case FieldKind::RationalFunctions: os << "kind = Qt\nvar = " << f.var << "\n"; break;
    }
}

} // namespace

std::string print_presentation(const ParsedModel& m) {
    const Presentation& p = *m.pres;
    std::ostringstream os;
    print_field(os, p.field());
    for (int i = 0; i < p.num_generators(); ++i) {
        const GeneratorInfo& g = p.gen(i);
        os << "\n[[generator]]\nname = " << g.name << "\n";
        if (g.invertible) os << "invertible = true\n";
        if (g.torsion > 0) os << "torsion = " << g.torsion << "\n";
        if (g.weight != 1) os << "weight = " << g.weight << "\n";
    }
    for (const auto& [lhs, rhs] : p.rules()) {
        if (lhs.first.neg || lhs.second.neg) continue; // mirrors are re-derived
        os << "\n[[relation]]\nlhs = "
           << quoted(p.letter_str(lhs.first) + "*" + p.letter_str(lhs.second)) << "\n"
           << "rhs = " << quoted(rhs.str()) << "\n";
    }
    if (m.hopf) {
        os << "\n[hopf]\n";
        for (int i = 0; i < p.num_generators(); ++i) {
            const std::string& n = p.gen(i).name;
            os << "delta." << n << " = " << quoted(m.hopf->delta_gen(i).str()) << "\n";
            os << "counit." << n << " = " << quoted(m.hopf->counit_gen(i).str()) << "\n";
            os << "antipode." << n << " = " << quoted(m.hopf->antipode_gen(i).str()) << "\n";
        }
    }
    if (m.ore) {
        os << "\n[ore]\n";
        if (m.ore->z_name != "z") os << "z = " << m.ore->z_name << "\n";
        for (int i = 0; i < p.num_generators(); ++i) {
            const std::string& n = p.gen(i).name;
            os << "tau." << n << " = " << quoted(m.ore->tau[static_cast<size_t>(i)].str())
               << "\n";
            os << "delta." << n << " = "
               << quoted(m.ore->delta[static_cast<size_t>(i)].str()) << "\n";
        }
    }
    if (m.ghoe) {
        os << "\n[ghoe]\n";
        os << "r1 = " << quoted(m.ghoe->r1.str()) << "\n";
        os << "r2 = " << quoted(m.ghoe->r2.str()) << "\n";
        os << "x = " << quoted(m.ghoe->x.str()) << "\n";
        os << "y = " << quoted(m.ghoe->y.str()) << "\n";
        if (m.ghoe->chi)
            for (int i = 0; i < p.num_generators(); ++i)
                os << "chi." << p.gen(i).name << " = "
                   << quoted((*m.ghoe->chi)[static_cast<size_t>(i)].str()) << "\n";
    }
    if (!m.witness.empty()) {
        os << "\n[witness]\n";
        auto emit = [&](const std::string& key) {
            auto it = m.witness.find(key);
            if (it != m.witness.end()) os << key << " = " << quoted(it->second) << "\n";
        };
        emit("lambda");
        emit("r");
        emit("b");
        for (const auto& [k, v] : m.witness)
            if (has_prefix(k, "phi")) os << k << " = " << quoted(v) << "\n";
        for (const auto& [k, v] : m.witness)
            if (has_prefix(k, "phi_inv")) os << k << " = " << quoted(v) << "\n";
    }
    return os.str();
}

ParsedModel model_from_entry(const CatalogEntry& e) {
    ParsedModel m;
    m.pres = e.pres;
    m.hopf = e.hopf;
    if (e.ghoe) {
        m.ore = e.ghoe->ore;
        m.ghoe = e.ghoe;
    }
    return m;
}

// ----------------------------------------------------------- specialization

namespace {

Element spec_elem(const Element& e, const Presentation& tgt, const mpq_class& q0) {
    Element out = Element::zero(tgt);
    for (const auto& [mo, c] : e.terms())
        out += tgt.normalize_word(mo.factors(), c.specialize_q(q0));
    return out;
}

Tensor2 spec_tensor(const Tensor2& t, const Presentation& tgt, const mpq_class& q0) {
    Tensor2 out = Tensor2::zero(tgt);
    for (const auto& [k, c] : t.terms()) {
        Element a = tgt.normalize_word(k.first.factors(), c.specialize_q(q0));
        Element b = tgt.normalize_word(k.second.factors(), Scalar::one(tgt.field()));
        out += Tensor2::of(a, b);
    }
    return out;
}

} // namespace

ParsedModel specialize_model(const ParsedModel& m, const mpq_class& q0) {
    const Presentation& src = *m.pres;
    if (src.field().kind != FieldKind::RationalFunctions)
        throw Error("FieldMismatch", "only rational-function models can be specialized");
    auto tgt = Presentation::create(FieldSpec::Q());
    for (int i = 0; i < src.num_generators(); ++i) tgt->add_generator(src.gen(i));
    for (const auto& [lhs, rhs] : src.rules()) {
        if (lhs.first.neg || lhs.second.neg) continue;
        tgt->add_rule(lhs.first, lhs.second, spec_elem(rhs, *tgt, q0));
    }
    tgt->finalize();
    tgt->set_degree_cap(src.degree_cap());

    ParsedModel out;
    out.pres = tgt;
    if (m.hopf) {
        auto h = std::make_shared<HopfStructure>(tgt);
        for (int i = 0; i < src.num_generators(); ++i) {
            h->set_delta(i, spec_tensor(m.hopf->delta_gen(i), *tgt, q0));
            h->set_counit(i, m.hopf->counit_gen(i).specialize_q(q0));
            h->set_antipode(i, spec_elem(m.hopf->antipode_gen(i), *tgt, q0));
        }
        h->validate();
        out.hopf = h;
    }
    if (m.ore) {
        OreData d;
        d.A = tgt;
        d.z_name = m.ore->z_name;
        for (size_t i = 0; i < m.ore->tau.size(); ++i) {
            d.tau.push_back(spec_elem(m.ore->tau[i], *tgt, q0));
            d.delta.push_back(spec_elem(m.ore->delta[i], *tgt, q0));
        }
        out.ore = std::move(d);
    }
    if (m.ghoe) {
        GhoeData d;
        d.A = tgt;
        d.hopf = out.hopf;
        d.ore = *out.ore;
        d.r1 = spec_elem(m.ghoe->r1, *tgt, q0);
        d.r2 = spec_elem(m.ghoe->r2, *tgt, q0);
        d.x = spec_elem(m.ghoe->x, *tgt, q0);
        d.y = spec_elem(m.ghoe->y, *tgt, q0);
        if (m.ghoe->chi) {
            std::vector<Scalar> chi;
            for (const Scalar& s : *m.ghoe->chi) chi.push_back(s.specialize_q(q0));
            d.chi = std::move(chi);
        }
        out.ghoe = std::move(d);
    }
    out.witness = m.witness;
    return out;
}

// -------------------------------------------------------------- witness

IsoWitness resolve_witness(const ParsedModel& src, const ParsedModel& dst) {
    if (!src.ghoe || !dst.ghoe)
        throw Error("InvariantViolation", "witness checking needs extension data on both sides");
    if (dst.witness.empty())
        throw Error("InvariantViolation", "missing [witness] section in the target file");
    const Presentation& A = *src.pres;
    const Presentation& Ap = *dst.pres;
    const auto& w = dst.witness;

    auto need = [&](const std::string& key) -> const std::string& {
        auto it = w.find(key);
        if (it == w.end())
            throw Error("InvariantViolation", "missing witness key " + key);
        return it->second;
    };

    IsoWitness out;
    std::optional<Scalar> lambda =
        parse_element(need("lambda"), Ap, "witness lambda").as_scalar();
    if (!lambda) throw Error("BadParameters", "witness lambda must be a scalar");
    out.lambda = *lambda;
    out.r = parse_element(need("r"), Ap, "witness r");
    out.b = parse_element(need("b"), Ap, "witness b");
    for (int i = 0; i < A.num_generators(); ++i)
        out.phi.push_back(
            parse_element(need("phi." + A.gen(i).name), Ap, "witness phi." + A.gen(i).name));
    for (int i = 0; i < Ap.num_generators(); ++i)
        out.phi_inv.push_back(parse_element(need("phi_inv." + Ap.gen(i).name), A,
                                            "witness phi_inv." + Ap.gen(i).name));

    std::vector<std::string> allowed = {"lambda", "r", "b"};
    for (int i = 0; i < A.num_generators(); ++i)
        allowed.push_back("phi." + A.gen(i).name);
    for (int i = 0; i < Ap.num_generators(); ++i)
        allowed.push_back("phi_inv." + Ap.gen(i).name);
    for (const auto& [k, v] : w)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw Error("SyntaxError", "unknown witness key " + k);
    return out;
}

} // namespace hopfore
