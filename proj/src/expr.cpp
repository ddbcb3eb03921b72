#include "hopfore/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace hopfore {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };

struct Token {
    Tok kind;
    std::string text;
    size_t col; // 1-based column of the first character
};

struct Lexer {
    const std::string& src;
    int line;
    size_t pos = 0;
    std::vector<Token> tokens;

    [[noreturn]] void fail(const std::string& msg, size_t col) const {
        throw Error("ParseError", msg + " at line " + std::to_string(line == 0 ? 1 : line) +
                                      ", column " + std::to_string(col));
    }

    void run() {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) { ++pos; continue; }
            size_t col = pos + 1;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                tokens.push_back({Tok::Number, src.substr(start, pos - start), col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                    ++pos;
                tokens.push_back({Tok::Name, src.substr(start, pos - start), col});
                continue;
            }
            switch (c) {
            case '+': tokens.push_back({Tok::Plus, "+", col}); ++pos; break;
            case '-': tokens.push_back({Tok::Minus, "-", col}); ++pos; break;
            case '*': tokens.push_back({Tok::Star, "*", col}); ++pos; break;
            case '/': tokens.push_back({Tok::Slash, "/", col}); ++pos; break;
            case '^': tokens.push_back({Tok::Caret, "^", col}); ++pos; break;
            case ')': tokens.push_back({Tok::RParen, ")", col}); ++pos; break;
            case '(':
                if (pos + 2 < src.size() && src[pos + 1] == 'x' && src[pos + 2] == ')') {
                    tokens.push_back({Tok::Tensor, "(x)", col});
                    pos += 3;
                } else {
                    tokens.push_back({Tok::LParen, "(", col});
                    ++pos;
                }
                break;
            default:
                fail(std::string("unexpected character '") + c + "'", col);
            }
        }
        tokens.push_back({Tok::End, "", src.size() + 1});
    }
};

/// Parsed value: an element or a 2-tensor.
struct PVal {
    std::optional<Element> e;
    std::optional<Tensor2> t;
};

struct Parser {
    const Presentation& p;
    const std::vector<Token>& toks;
    int line;
    size_t i = 0;

    const Token& peek() const { return toks[i]; }
    Token next() { return toks[i++]; }

    [[noreturn]] void fail(const std::string& msg, size_t col) const {
        throw Error("ParseError", msg + " at line " + std::to_string(line == 0 ? 1 : line) +
                                      ", column " + std::to_string(col));
    }

    Element require_element(PVal v, size_t col) const {
        if (!v.e) fail("tensor expression where an element is required", col);
        return *v.e;
    }

    long parse_exponent() {
        bool negate = false;
        if (peek().kind == Tok::Minus) {
            negate = true;
            next();
        }
        if (peek().kind != Tok::Number) fail("integer exponent expected", peek().col);
        Token t = next();
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (...) {
            fail("exponent out of range", t.col);
        }
        return negate ? -v : v;
    }

    PVal parse_atom() {
        const Token t = next();
        switch (t.kind) {
        case Tok::Number: {
            mpz_class n(t.text);
            return {Element::constant(p, Scalar::from_mpq(p.field(), mpq_class(n))), std::nullopt};
        }
        case Tok::Name: {
            int g = p.gen_index(t.text);
            if (g >= 0) return {Element::generator(p, g), std::nullopt};
            if (p.field().kind == FieldKind::RationalFunctions && t.text == p.field().var)
                return {Element::constant(p, Scalar::variable(p.field())), std::nullopt};
            fail("unknown name '" + t.text + "'", t.col);
        }
        case Tok::LParen: {
            PVal v = parse_sum();
            if (peek().kind != Tok::RParen) fail("')' expected", peek().col);
            next();
            return v;
        }
        default:
            fail("unexpected token '" + t.text + "'", t.col);
        }
    }

    PVal parse_power() {
        size_t col = peek().col;
        PVal v = parse_atom();
        if (peek().kind == Tok::Caret) {
            next();
            long e = parse_exponent();
            return {require_element(std::move(v), col).pow(e), std::nullopt};
        }
        return v;
    }

    PVal parse_unary() {
        if (peek().kind == Tok::Minus) {
            size_t col = peek().col;
            next();
            PVal v = parse_unary();
            if (v.e) return {-*v.e, std::nullopt};
            if (v.t) return {std::nullopt, -*v.t};
            fail("operand expected after '-'", col);
        }
        return parse_power();
    }

    PVal parse_product() {
        size_t col = peek().col;
        PVal v = parse_unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Token op = next();
            size_t rcol = peek().col;
            Element lhs = require_element(std::move(v), col);
            Element rhs = require_element(parse_unary(), rcol);
            if (op.kind == Tok::Star) {
                v = {lhs * rhs, std::nullopt};
            } else {
                auto s = rhs.as_scalar();
                if (!s) fail("division by a non-scalar", rcol);
                v = {lhs * s->inv(), std::nullopt};
            }
        }
        return v;
    }

    PVal parse_tensor_term() {
        size_t col = peek().col;
        PVal v = parse_product();
        if (peek().kind == Tok::Tensor) {
            next();
            size_t rcol = peek().col;
            Element lhs = require_element(std::move(v), col);
            Element rhs = require_element(parse_product(), rcol);
            if (peek().kind == Tok::Tensor) fail("at most one '(x)' per summand", peek().col);
            return {std::nullopt, Tensor2::of(lhs, rhs)};
        }
        return v;
    }

    PVal parse_sum() {
        size_t col = peek().col;
        PVal v = parse_tensor_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = next();
            size_t rcol = peek().col;
            PVal rhs = parse_tensor_term();
            bool add = op.kind == Tok::Plus;
            if (v.e && rhs.e) {
                v = {add ? *v.e + *rhs.e : *v.e - *rhs.e, std::nullopt};
            } else if (v.t && rhs.t) {
                v = {std::nullopt, add ? *v.t + *rhs.t : *v.t - *rhs.t};
            } else {
                // mixing is allowed only when the element side is zero
                if (v.e && v.e->is_zero() && rhs.t) {
                    v = {std::nullopt, add ? *rhs.t : -*rhs.t};
                } else if (rhs.e && rhs.e->is_zero() && v.t) {
                    // keep v unchanged
                } else {
                    fail("cannot add an element to a tensor", rcol);
                }
            }
            (void)col;
        }
        return v;
    }
};

PVal parse_top(const Presentation& p, const std::string& src, int line) {
    Lexer lx{src, line};
    lx.run();
    Parser ps{p, lx.tokens, line};
    PVal v = ps.parse_sum();
    if (ps.peek().kind != Tok::End) ps.fail("trailing input", ps.peek().col);
    return v;
}

} // namespace

Element parse_element(const Presentation& p, const std::string& src, int line) {
    PVal v = parse_top(p, src, line);
    if (v.t) {
        throw Error("ParseError", "tensor expression where an element is required at line " +
                                      std::to_string(line == 0 ? 1 : line));
    }
    return *v.e;
}

Tensor2 parse_tensor2(const Presentation& p, const std::string& src, int line) {
    PVal v = parse_top(p, src, line);
    if (v.t) return *v.t;
    if (v.e && v.e->is_zero()) return Tensor2::zero(p);
    throw Error("ParseError", "element expression where a tensor is required at line " +
                                  std::to_string(line == 0 ? 1 : line));
}

Scalar parse_scalar(const Presentation& p, const std::string& src, int line) {
    Element e = parse_element(p, src, line);
    auto s = e.as_scalar();
    if (!s)
        throw Error("ParseError", "scalar expected, got '" + e.str() + "' at line " +
                                      std::to_string(line == 0 ? 1 : line));
    return *s;
}

} // namespace hopfore
