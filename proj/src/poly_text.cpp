#include "hsl/poly.hpp"

#include <cctype>
#include <sstream>

namespace hsl {

namespace {

constexpr int kMaxExponent = 1 << 20;

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

    long long parse_uint(const char* what) {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail(std::string("expected ") + what);
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > kMaxExponent * 16LL) fail("integer literal too large");
            ++i;
        }
        return v;
    }
};

bool starts_var(char c) { return c == 'x' || c == 'u'; }

VarRef parse_var(Cursor& cur, const Context& ctx) {
    cur.skip_ws();
    char c = cur.s[cur.i++];
    if (c == 'x') {
        long long comp = cur.parse_uint("x component");
        if (comp < 1 || comp > ctx.m) cur.fail("x component out of range");
        return var_x(int(comp));
    }
    long long block = cur.parse_uint("block index");
    if (!cur.accept('_')) cur.fail("expected '_' in dummy variable");
    long long comp = cur.parse_uint("component");
    if (block < 1 || block > ctx.k) cur.fail("block index out of range");
    if (comp < 1 || comp > ctx.m) cur.fail("component out of range");
    return var_u(int(block), int(comp));
}

// factor := var ('^' uint)?
std::pair<VarRef, int> parse_factor(Cursor& cur, const Context& ctx) {
    VarRef v = parse_var(cur, ctx);
    int exp = 1;
    if (cur.accept('^')) {
        long long e = cur.parse_uint("exponent");
        if (e > kMaxExponent) cur.fail("exponent overflow");
        exp = int(e);
    }
    return {v, exp};
}

// term := rational ('*' factor)* | factor ('*' factor)*
void parse_term(Cursor& cur, const Context& ctx, int sign, Poly& acc) {
    cur.skip_ws();
    Rat coef = sign;
    bool have_coef = false;
    if (cur.i < cur.s.size() &&
        (std::isdigit(static_cast<unsigned char>(cur.s[cur.i])) || cur.s[cur.i] == '-')) {
        bool neg = cur.accept('-');
        long long num = cur.parse_uint("integer");
        Rat r(num);
        if (cur.accept('/')) {
            long long den = cur.parse_uint("denominator");
            if (den == 0) cur.fail("zero denominator");
            r /= den;
        }
        if (neg) r = -r;
        coef *= r;
        have_coef = true;
    }
    std::vector<Monomial::Entry> entries;
    bool expect_factor = !have_coef;
    while (true) {
        if (expect_factor || cur.accept('*')) {
            cur.skip_ws();
            if (cur.i >= cur.s.size() || !starts_var(cur.s[cur.i])) {
                if (expect_factor) cur.fail("expected variable factor");
                cur.fail("expected factor after '*'");
            }
            entries.push_back(parse_factor(cur, ctx));
            expect_factor = false;
        } else {
            break;
        }
    }
    acc.add_term(Monomial(std::move(entries)), coef);
}

}  // namespace

Poly parse_poly(const std::string& text, Context ctx) {
    Cursor cur{text};
    Poly acc(ctx);
    if (cur.eof()) throw ParseError("empty polynomial", 0);
    int sign = 1;
    if (cur.accept('-')) sign = -1;
    parse_term(cur, ctx, sign, acc);
    while (!cur.eof()) {
        if (cur.accept('+'))
            parse_term(cur, ctx, 1, acc);
        else if (cur.accept('-'))
            parse_term(cur, ctx, -1, acc);
        else
            cur.fail("expected '+' or '-'");
    }
    return acc;
}

namespace {

std::string format_monomial(const Monomial& mo) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : mo.entries()) {
        if (!first) os << "*";
        first = false;
        if (v.block == 0)
            os << "x" << v.component;
        else
            os << "u" << v.block << "_" << v.component;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        first = false;
        if (mo.is_one()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << format_monomial(mo);
        }
    }
    return os.str();
}

}  // namespace hsl
