#include "iterfact/parse.hpp"

#include <cctype>

namespace iterfact {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void err(const std::string& what) {
        fail(errc::parse_error,
             "parse error at position " + std::to_string(pos) + ": " + what);
    }
    u64 integer(u64 modulo) {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected integer");
        u64 v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (u64)(s[pos] - '0');
            if (modulo) v %= modulo;
            ++pos;
        }
        return v;
    }
    u64 exponent(u64 cap) {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected exponent");
        u64 v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (u64)(s[pos] - '0');
            if (v > cap)
                fail(errc::degree_overflow, "exponent exceeds degree cap at position " +
                                                std::to_string(pos));
            ++pos;
        }
        return v;
    }
};

// polynomial in `t` with integer coefficients, inside parentheses
FieldElem parse_t_poly(Cursor& cur, const FieldPtr& F) {
    if (F->m == 1) cur.err("generator 't' is not available over a prime field");
    FieldElem acc = zero_elem(F);
    bool first = true;
    while (true) {
        cur.skip_ws();
        i64 sign = 1;
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        // term: int, int*t^e, t^e, t
        u64 coeff = 1;
        bool have_coeff = false;
        if (std::isdigit((unsigned char)cur.peek())) {
            coeff = cur.integer(F->p);
            have_coeff = true;
        }
        u64 e = 0;
        bool have_t = false;
        if (have_coeff && cur.eat('*')) {
            if (cur.peek() != 't') cur.err("expected 't' after '*'");
        }
        if (cur.eat('t')) {
            have_t = true;
            e = cur.eat('^') ? cur.exponent(4 * Field::max_degree) : 1;
        }
        if (!have_coeff && !have_t) cur.err("expected term");
        FieldElem term = scalar_elem(F, sign * (i64)coeff);
        if (have_t) {
            if (e >= F->m) {
                // reduce t^e via field arithmetic
                term = term * gen_elem(F).pow(e);
            } else {
                FieldElem mono = zero_elem(F);
                mono.c[e] = 1;
                term = term * mono;
            }
        }
        acc = acc + term;
    }
    return acc;
}

// one multiplicative factor; collects into coeff and the x-exponent
void parse_factor(Cursor& cur, const FieldPtr& F, char var, u64 cap, FieldElem& coeff,
                  u64& xexp, bool& saw_x) {
    char c = cur.peek();
    if (std::isdigit((unsigned char)c)) {
        u64 v = cur.integer(F->p);
        coeff = coeff * scalar_elem(F, (i64)v);
        return;
    }
    if (c == '(') {
        cur.eat('(');
        FieldElem e = parse_t_poly(cur, F);
        if (!cur.eat(')')) cur.err("expected ')'");
        coeff = coeff * e;
        return;
    }
    if (c == var) {
        cur.eat(var);
        if (saw_x) cur.err(std::string("repeated '") + var + "' in term");
        saw_x = true;
        xexp = cur.eat('^') ? cur.exponent(cap) : 1;
        return;
    }
    if (c == 't' && var != 't') {
        cur.eat('t');
        if (F->m == 1) cur.err("generator 't' is not available over a prime field");
        u64 e = cur.eat('^') ? cur.exponent(4 * Field::max_degree) : 1;
        coeff = coeff * gen_elem(F).pow(e);
        return;
    }
    cur.err("expected coefficient or variable");
}

}  // namespace

Poly parse_poly(const std::string& text, const FieldPtr& F, char var, u64 degree_cap) {
    Cursor cur{text};
    Poly acc(F);
    bool first = true;
    while (!cur.eof()) {
        i64 sign = 1;
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first) {
            cur.err("expected '+' or '-'");
        }
        first = false;
        FieldElem coeff = one_elem(F);
        u64 xexp = 0;
        bool saw_x = false;
        parse_factor(cur, F, var, degree_cap, coeff, xexp, saw_x);
        while (cur.eat('*')) parse_factor(cur, F, var, degree_cap, coeff, xexp, saw_x);
        if (sign < 0) coeff = -coeff;
        acc = acc + Poly::monomial(F, xexp, coeff);
    }
    if (first) cur.err("empty polynomial");
    return acc;
}

std::string elem_to_string(const FieldElem& a) {
    const Field& F = *a.F;
    bool scalar = true;
    for (u32 i = 1; i < F.m; ++i)
        if (a.c[i]) scalar = false;
    if (scalar) return std::to_string(a.c[0]);
    std::string out = "(";
    bool first = true;
    for (u32 i = F.m; i-- > 0;) {
        if (!a.c[i]) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += std::to_string(a.c[i]);
        } else {
            if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    out += ")";
    return out;
}

std::string poly_to_string(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (i64 i = f.degree(); i >= 0; --i) {
        FieldElem c = f.coeff((u64)i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string xpart =
            i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
        if (i == 0) {
            out += elem_to_string(c);
        } else if (c.is_one()) {
            out += xpart;
        } else {
            out += elem_to_string(c) + "*" + xpart;
        }
    }
    return out;
}

std::string factorization_to_string(const Factorization& fz) {
    std::string out = elem_to_string(fz.leading);
    for (const auto& [g, e] : fz.factors) {
        out += " * (" + poly_to_string(g) + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::pair<u64, u32> parse_field_text(const std::string& text) {
    Cursor cur{text};
    u64 p = cur.integer(0);
    u32 m = 1;
    if (cur.eat('^')) m = (u32)cur.exponent(Field::max_degree);
    if (!cur.eof()) cur.err("trailing characters in field spec");
    return {p, m};
}

std::string field_to_string(const Field& F) {
    if (F.m == 1) return std::to_string(F.p);
    return std::to_string(F.p) + "^" + std::to_string(F.m);
}

}  // namespace iterfact
