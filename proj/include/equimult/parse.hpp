#ifndef EQUIMULT_PARSE_HPP
#define EQUIMULT_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace equimult {

// Infix polynomial syntax: +, -, *, ^, parentheses, integer coefficients,
// declared variable names. Errors carry line/column positions.
namespace parse_detail {

struct cursor {
    const std::string& s;
    std::size_t i = 0;
    std::size_t line = 1, col = 1;

    explicit cursor(const std::string& text) : s(text) {}

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    char get() {
        char c = s[i++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) get();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line, col, msg); }
};

template <class K>
struct poly_parser {
    cursor& c;
    const std::vector<std::string>& names;
    unsigned nvars;
    field_ctx<K> ctx;

    poly<K> parse_expr() {
        c.skip_ws();
        bool neg = false;
        if (c.peek() == '-') {
            c.get();
            neg = true;
        } else if (c.peek() == '+') {
            c.get();
        }
        poly<K> acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            c.skip_ws();
            char ch = c.peek();
            if (ch == '+') {
                c.get();
                acc += parse_term();
            } else if (ch == '-') {
                c.get();
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    poly<K> parse_term() {
        poly<K> acc = parse_factor();
        for (;;) {
            c.skip_ws();
            if (c.peek() == '*') {
                c.get();
                acc *= parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    poly<K> parse_factor() {
        poly<K> base = parse_atom();
        c.skip_ws();
        if (c.peek() == '^') {
            c.get();
            c.skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected exponent");
            unsigned e = parse_nat();
            return base.pow(e);
        }
        return base;
    }

    unsigned parse_nat() {
        unsigned v = 0;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            v = v * 10 + static_cast<unsigned>(c.get() - '0');
            if (v > 1'000'000) c.fail("exponent too large");
        }
        return v;
    }

    poly<K> parse_atom() {
        c.skip_ws();
        char ch = c.peek();
        if (ch == '(') {
            c.get();
            poly<K> p = parse_expr();
            c.skip_ws();
            if (c.peek() != ')') c.fail("expected ')'");
            c.get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            bigint v = 0;
            while (std::isdigit(static_cast<unsigned char>(c.peek())))
                v = v * 10 + (c.get() - '0');
            return poly<K>::constant(nvars, ctx, ctx.from_integer(v));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t l = c.line, co = c.col;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_' ||
                   c.peek() == '\'')
                name += c.get();
            for (unsigned i = 0; i < names.size(); ++i)
                if (names[i] == name) return poly<K>::variable(nvars, ctx, i);
            throw parse_error(l, co, "undeclared variable '" + name + "'");
        }
        c.fail("expected polynomial atom");
    }
};

}  // namespace parse_detail

template <class K>
poly<K> parse_poly(const std::string& text, const std::vector<std::string>& names, field_ctx<K> ctx) {
    parse_detail::cursor c(text);
    parse_detail::poly_parser<K> p{c, names, static_cast<unsigned>(names.size()), ctx};
    poly<K> r = p.parse_expr();
    c.skip_ws();
    if (!c.eof()) c.fail("unexpected trailing input");
    return r;
}

template <class K>
ideal<K> parse_ideal(const std::vector<std::string>& gens, const std::vector<std::string>& names,
                     field_ctx<K> ctx) {
    std::vector<poly<K>> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, names, ctx));
    return ideal<K>(static_cast<unsigned>(names.size()), ctx, std::move(ps));
}

}  // namespace equimult

#endif
