#include "ivpoly/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ivpoly {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + what);
    }
};

unsigned long parse_nat(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        c.fail("expected number");
    unsigned long v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + static_cast<unsigned long>(c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

Rat parse_coeff(Cursor& c) {
    bool neg = false;
    if (c.eat('-')) neg = true;
    Int num(static_cast<long>(parse_nat(c)));
    Rat q(num);
    std::size_t save = c.i;
    if (c.eat('/')) {
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Int den(static_cast<long>(parse_nat(c)));
            if (den == 0) c.fail("zero denominator");
            q = Rat(num) / Rat(den);
        } else {
            c.i = save;
        }
    }
    return neg ? Rat(-q) : q;
}

const std::vector<std::string> kXY{"X", "Y"};

MPoly parse_primary(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size()) c.fail("expected atom");
    char ch = c.s[c.i];
    if (ch == 'C') {
        ++c.i;
        if (!c.eat('(')) c.fail("expected ( after C");
        char v = c.peek();
        if (v != 'X' && v != 'Y') c.fail("expected X or Y in C(...)");
        ++c.i;
        if (!c.eat(',')) c.fail("expected , in C(...)");
        unsigned long n = parse_nat(c);
        if (!c.eat(')')) c.fail("expected ) in C(...)");
        MPoly b = binom_poly(static_cast<unsigned>(n));
        return v == 'X' ? b.with_vars(kXY)
                        : b.substitute({MPoly::var("Y", kXY)});
    }
    if (ch == 'X' || ch == 'Y') {
        ++c.i;
        unsigned long e = 1;
        if (c.eat('^')) e = parse_nat(c);
        MPoly v = MPoly::var(std::string(1, ch), kXY);
        MPoly r = MPoly::constant(Rat(1), kXY);
        for (unsigned long k = 0; k < e; ++k) r = r * v;
        return r;
    }
    c.fail("expected atom");
}

MPoly parse_term(Cursor& c) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        Rat q = parse_coeff(c);
        if (c.eat('*')) {
            MPoly a = parse_primary(c);
            while (c.eat('*')) a = a * parse_primary(c);
            return a.scaled(q);
        }
        return MPoly::constant(q, kXY);
    }
    MPoly a = parse_primary(c);
    while (c.eat('*')) a = a * parse_primary(c);
    return a;
}

}  // namespace

MPoly parse_poly_xy(const std::string& text) {
    Cursor c{text};
    bool neg = c.eat('-');
    MPoly acc = parse_term(c);
    if (neg) acc = -acc;
    for (;;) {
        c.skip_ws();
        if (c.i >= c.s.size()) break;
        if (c.eat('+'))
            acc += parse_term(c);
        else if (c.eat('-'))
            acc -= parse_term(c);
        else
            c.fail("expected + or -");
    }
    return acc;
}

BPoly parse_bpoly(const std::string& text) {
    MPoly p = parse_poly_xy(text);
    if (p.degree(1) > 0) throw std::invalid_argument("expected univariate polynomial in X");
    return to_binomial(p.with_vars({"X"}));
}

TBPoly parse_tbpoly(const std::string& text) {
    return TBPoly::from_mpoly_xy(parse_poly_xy(text));
}

namespace {

void append_signed(std::ostringstream& os, bool first, const Rat& c, const std::string& body) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? "-" : "+");
    }
    if (body.empty()) {
        os << a.get_str();
    } else if (a == 1) {
        os << body;
    } else {
        os << a.get_str() << "*" << body;
    }
}

}  // namespace

std::string to_text(const BPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        const Rat& c = f.coeffs()[n];
        if (c == 0) continue;
        std::string body;
        if (n == 1)
            body = "X";
        else if (n > 1)
            body = "C(X," + std::to_string(n) + ")";
        append_signed(os, first, c, body);
        first = false;
    }
    return os.str();
}

std::string to_text(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string body;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += f.vars()[i];
            if (e[i] > 1) body += "^" + std::to_string(e[i]);
        }
        append_signed(os, first, c, body);
        first = false;
    }
    return os.str();
}

std::string to_text(const TBPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : f.terms()) {
        auto part = [](char v, unsigned n) -> std::string {
            if (n == 0) return "";
            if (n == 1) return std::string(1, v);
            return std::string("C(") + v + "," + std::to_string(n) + ")";
        };
        std::string body = part('X', ij.first);
        std::string by = part('Y', ij.second);
        if (!body.empty() && !by.empty())
            body += "*" + by;
        else if (!by.empty())
            body = by;
        append_signed(os, first, c, body);
        first = false;
    }
    return os.str();
}

}  // namespace ivpoly
