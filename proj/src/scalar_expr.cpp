#include "hsl/scalar_expr.hpp"

#include <cctype>
#include <sstream>

namespace hsl {

namespace {
void trim(SymPoly::Mono& mo) {
    while (!mo.empty() && mo.back() == 0) mo.pop_back();
}
}  // namespace

SymPoly SymPoly::constant(Int c) {
    SymPoly p;
    p.add_term({}, c);
    return p;
}

SymPoly SymPoly::symbol_m() {
    SymPoly p;
    p.add_term({1}, 1);
    return p;
}

SymPoly SymPoly::euler(int block) {
    SymPoly p;
    Mono mo(block + 2, 0);
    mo[block + 1] = 1;
    p.add_term(std::move(mo), 1);
    return p;
}

void SymPoly::add_term(Mono mo, const Int& c) {
    if (c == 0) return;
    trim(mo);
    auto [it, inserted] = terms_.try_emplace(std::move(mo), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [mo, c] : o.terms_) r.add_term(mo, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [mo, c] : o.terms_) r.add_term(mo, -c);
    return r;
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [mo, c] : terms_) r.terms_.emplace(mo, -c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono mo(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) mo[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) mo[i] += mb[i];
            r.add_term(std::move(mo), ca * cb);
        }
    }
    return r;
}

Rat SymPoly::eval(const MultiDegree& d, int m) const {
    Rat acc = 0;
    for (const auto& [mo, c] : terms_) {
        Rat t = Rat(c);
        for (size_t i = 0; i < mo.size(); ++i) {
            if (mo[i] == 0) continue;
            Rat base;
            if (i == 0) {
                base = m;
            } else {
                size_t blk = i - 1;
                if (blk >= d.degrees.size())
                    throw ContextError("scalar expression references E" + std::to_string(blk) +
                                       " outside the context");
                base = d.degrees[blk];
            }
            for (int e = 0; e < mo[i]; ++e) t *= base;
        }
        acc += t;
    }
    return acc;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print higher-order terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            if (c < 0) {
                os << "-";
                c = -c;
            } else {
                os << "+";
            }
        }
        first = false;
        const auto& mo = it->first;
        bool has_sym = false;
        std::ostringstream syms;
        for (size_t i = 0; i < mo.size(); ++i) {
            if (mo[i] == 0) continue;
            if (has_sym) syms << "*";
            has_sym = true;
            if (i == 0)
                syms << "m";
            else
                syms << "E" << (i - 1);
            if (mo[i] > 1) syms << "^" << int(mo[i]);
        }
        if (!has_sym) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << syms.str();
        }
    }
    return os.str();
}

ScalarExpr ScalarExpr::from_poly(SymPoly p) {
    ScalarExpr e;
    if (p.is_zero()) {
        e.coef_ = 0;
        return e;
    }
    // Pure constants fold into the rational coefficient.
    if (p.terms().size() == 1 && p.terms().begin()->first.empty()) {
        e.coef_ = Rat(p.terms().begin()->second);
        return e;
    }
    e.num_.push_back(std::move(p));
    return e;
}

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
    ScalarExpr r = *this;
    r.coef_ *= o.coef_;
    if (r.coef_ == 0) return ScalarExpr(Rat(0));
    r.num_.insert(r.num_.end(), o.num_.begin(), o.num_.end());
    r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
    return r;
}

ScalarExpr ScalarExpr::operator/(const ScalarExpr& o) const {
    if (o.coef_ == 0) throw PoleError("division of scalar expressions by zero");
    ScalarExpr r = *this;
    r.coef_ /= o.coef_;
    r.num_.insert(r.num_.end(), o.den_.begin(), o.den_.end());
    r.den_.insert(r.den_.end(), o.num_.begin(), o.num_.end());
    return r;
}

std::pair<SymPoly, SymPoly> ScalarExpr::expanded() const {
    SymPoly n = SymPoly::constant(Int(numerator(coef_)));
    for (const auto& f : num_) n = n * f;
    SymPoly d = SymPoly::constant(Int(denominator(coef_)));
    for (const auto& f : den_) d = d * f;
    return {n, d};
}

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
    auto [an, ad] = expanded();
    auto [bn, bd] = o.expanded();
    ScalarExpr r;
    r.coef_ = 1;
    SymPoly num = an * bd + bn * ad;
    if (num.is_zero()) return ScalarExpr(Rat(0));
    r.num_.push_back(num);
    SymPoly den = ad * bd;
    if (!(den.terms().size() == 1 && den.terms().begin()->first.empty()))
        r.den_.push_back(den);
    else
        r.coef_ /= Rat(den.terms().begin()->second);
    // Fold constant numerators.
    if (r.num_.size() == 1 && r.num_[0].terms().size() == 1 &&
        r.num_[0].terms().begin()->first.empty()) {
        r.coef_ *= Rat(r.num_[0].terms().begin()->second);
        r.num_.clear();
    }
    return r;
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const {
    ScalarExpr neg = o;
    neg.coef_ = -neg.coef_;
    return *this + neg;
}

Rat ScalarExpr::eval(const MultiDegree& d, int m) const {
    Rat v = coef_;
    if (v == 0) return v;
    for (const auto& f : num_) v *= f.eval(d, m);
    for (const auto& f : den_) {
        Rat fv = f.eval(d, m);
        if (fv == 0) {
            std::ostringstream os;
            os << "pole in scalar '" << to_string() << "' at degree (";
            for (size_t i = 0; i < d.degrees.size(); ++i)
                os << (i ? "," : "") << d.degrees[i];
            os << "), m=" << m;
            throw PoleError(os.str());
        }
        v /= fv;
    }
    return v;
}

std::string ScalarExpr::to_string() const {
    std::ostringstream os;
    bool printed = false;
    if (num_.empty() || coef_ != 1) {
        os << coef_;
        printed = true;
    }
    for (const auto& f : num_) {
        if (printed) os << "*";
        os << "(" << f.to_string() << ")";
        printed = true;
    }
    for (const auto& f : den_) os << "/(" << f.to_string() << ")";
    return os.str();
}

namespace {

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-'* primary ; primary := uint | 'm' | 'E' uint | '(' expr ')'
struct ExprParser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool accept(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) { throw ParseError(m, i); }

    ScalarExpr parse_expr() {
        ScalarExpr acc = parse_term();
        while (true) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }
    ScalarExpr parse_term() {
        ScalarExpr acc = parse_unary();
        while (true) {
            if (accept('*'))
                acc = acc * parse_unary();
            else if (accept('/'))
                acc = acc / parse_unary();
            else
                return acc;
        }
    }
    ScalarExpr parse_unary() {
        if (accept('-')) return ScalarExpr(Rat(-1)) * parse_unary();
        return parse_primary();
    }
    ScalarExpr parse_primary() {
        skip();
        if (i >= s.size()) fail("unexpected end of scalar expression");
        char c = s[i];
        if (c == '(') {
            ++i;
            ScalarExpr e = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            return ScalarExpr(Rat(v));
        }
        if (c == 'm') {
            ++i;
            return ScalarExpr::symbol_m();
        }
        if (c == 'E') {
            ++i;
            skip();
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("expected index after 'E'");
            long long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            if (v > 255) fail("Euler index too large");
            return ScalarExpr::euler(int(v));
        }
        fail("unexpected character in scalar expression");
    }
};

}  // namespace

ScalarExpr ScalarExpr::parse(const std::string& text) {
    ExprParser p{text};
    ScalarExpr e = p.parse_expr();
    p.skip();
    if (p.i != text.size()) throw ParseError("trailing characters in scalar expression", p.i);
    return e;
}

}  // namespace hsl
