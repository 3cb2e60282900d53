#include "hsl/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hsl {

std::size_t max_monomials() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("HSL_MAX_MONOMIALS")) {
            long v = std::atol(env);
            if (v > 0) return std::size_t(v);
        }
        return std::size_t(50000);
    }();
    return cap;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw ParseError("invalid rational '" + s + "'", 0);
    }
}

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second == 0) continue;
        if (entries_[i].second < 0) throw InvalidInput("negative exponent in monomial");
        if (w > 0 && entries_[w - 1].first == entries_[i].first)
            entries_[w - 1].second += entries_[i].second;
        else
            entries_[w++] = entries_[i];
    }
    entries_.resize(w);
}

Monomial Monomial::var(VarRef v, int exp) {
    Monomial mo;
    if (exp != 0) mo.entries_.push_back({v, exp});
    return mo;
}

int Monomial::exponent(VarRef v) const {
    for (const auto& [w, e] : entries_)
        if (w == v) return e;
    return 0;
}

int Monomial::block_degree(int block) const {
    int d = 0;
    for (const auto& [v, e] : entries_)
        if (v.block == block) d += e;
    return d;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

MultiDegree Monomial::multidegree(int nblocks) const {
    MultiDegree md;
    md.degrees.assign(nblocks, 0);
    for (const auto& [v, e] : entries_) md.degrees[v.block] += e;
    return md;
}

Monomial Monomial::mul(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() && j < other.entries_.size()) {
        if (entries_[i].first == other.entries_[j].first) {
            out.entries_.push_back({entries_[i].first, entries_[i].second + other.entries_[j].second});
            ++i, ++j;
        } else if (entries_[i].first < other.entries_[j].first) {
            out.entries_.push_back(entries_[i++]);
        } else {
            out.entries_.push_back(other.entries_[j++]);
        }
    }
    for (; i < entries_.size(); ++i) out.entries_.push_back(entries_[i]);
    for (; j < other.entries_.size(); ++j) out.entries_.push_back(other.entries_[j]);
    return out;
}

std::optional<Monomial> Monomial::divide_var(VarRef v) const {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].first == v) {
            Monomial out = *this;
            if (out.entries_[i].second == 1)
                out.entries_.erase(out.entries_.begin() + i);
            else
                out.entries_[i].second -= 1;
            return out;
        }
    }
    return std::nullopt;
}

size_t Monomial::hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (const auto& [v, e] : entries_) {
        h ^= (size_t(v.id()) << 20) ^ size_t(e);
        h *= 0x100000001b3ull;
    }
    return h;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    for (int blk = 0; blk < nblocks; ++blk) {
        int da = a.block_degree(blk), db = b.block_degree(blk);
        if (da != db) return da > db;
    }
    // Same degree tuple: lexicographic over variable ids, larger power first.
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
        ++i, ++j;
    }
    return false;  // identical (sizes must agree once degrees and entries match)
}

Poly::Poly(Context ctx) : ctx_(ctx), terms_(MonomialOrder{ctx.blocks()}) {}

Poly Poly::constant(Context ctx, const Rat& c) {
    Poly p(ctx);
    p.add_term(Monomial::one(), c);
    return p;
}

Poly Poly::monomial(Context ctx, Monomial mo, const Rat& c) {
    for (const auto& [v, e] : mo.entries()) {
        if (v.block > ctx.k || v.component < 1 || v.component > ctx.m)
            throw ContextError("variable out of range for context");
    }
    Poly p(ctx);
    p.add_term(mo, c);
    return p;
}

void Poly::add_term(const Monomial& mo, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mo, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_context(const Poly& q) const {
    if (!(ctx_ == q.ctx_)) throw ContextError("polynomial context mismatch");
}

Poly& Poly::operator+=(const Poly& q) {
    check_context(q);
    for (const auto& [mo, c] : q.terms_) add_term(mo, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    check_context(q);
    for (const auto& [mo, c] : q.terms_) add_term(mo, -c);
    return *this;
}

Poly Poly::operator+(const Poly& q) const {
    Poly r = *this;
    r += q;
    return r;
}

Poly Poly::operator-(const Poly& q) const {
    Poly r = *this;
    r -= q;
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator*(const Poly& q) const {
    check_context(q);
    Poly r(ctx_);
    const Poly& small = term_count() <= q.term_count() ? *this : q;
    const Poly& big = term_count() <= q.term_count() ? q : *this;
    for (const auto& [ma, ca] : small.terms_)
        for (const auto& [mb, cb] : big.terms_)
            r.add_term(ma.mul(mb), ca * cb);
    return r;
}

bool Poly::operator==(const Poly& q) const {
    return ctx_ == q.ctx_ && terms_ == q.terms_;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    for (const auto& [mo, coef] : terms_) r.terms_.emplace_hint(r.terms_.end(), mo, coef * c);
    return r;
}

Rat Poly::coefficient(const Monomial& mo) const {
    auto it = terms_.find(mo);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly scale(const Rat& c, const Poly& p) { return p.scaled(c); }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly diff(const Poly& p, VarRef v) {
    Poly r(p.context());
    for (const auto& [mo, c] : p.terms()) {
        int e = mo.exponent(v);
        if (e == 0) continue;
        r.add_term(*mo.divide_var(v), c * e);
    }
    return r;
}

Poly mul_var(const Poly& p, VarRef v) {
    Poly r(p.context());
    Monomial mv = Monomial::var(v);
    for (const auto& [mo, c] : p.terms()) r.add_term(mo.mul(mv), c);
    return r;
}

DegreeReport multidegree(const Poly& p) {
    DegreeReport rep;
    if (p.is_zero()) {
        rep.kind = DegreeReport::Kind::Zero;
        return rep;
    }
    int nb = p.context().blocks();
    rep.degree = p.terms().begin()->first.multidegree(nb);
    std::vector<bool> bad(nb, false);
    bool any_bad = false;
    for (const auto& [mo, c] : p.terms()) {
        MultiDegree md = mo.multidegree(nb);
        for (int b = 0; b < nb; ++b) {
            if (md.degrees[b] != rep.degree.degrees[b]) {
                bad[b] = true;
                any_bad = true;
            }
        }
    }
    if (any_bad) {
        rep.kind = DegreeReport::Kind::Inhomogeneous;
        for (int b = 0; b < nb; ++b)
            if (bad[b]) rep.offending.push_back(b);
    } else {
        rep.kind = DegreeReport::Kind::Homogeneous;
    }
    return rep;
}

MultiDegree require_multidegree(const Poly& p, const char* who) {
    DegreeReport rep = multidegree(p);
    if (rep.kind == DegreeReport::Kind::Zero)
        throw HomogeneityError(std::string(who) + ": degree of zero undefined");
    if (rep.kind == DegreeReport::Kind::Inhomogeneous)
        throw HomogeneityError(std::string(who) + ": polynomial not multihomogeneous");
    return rep.degree;
}

Rat fischer(const Poly& p, const Poly& q) {
    if (!(p.context() == q.context())) throw ContextError("fischer: context mismatch");
    // Iterate over the smaller poly; pairing is diagonal in the monomial basis.
    const Poly& a = p.term_count() <= q.term_count() ? p : q;
    const Poly& b = p.term_count() <= q.term_count() ? q : p;
    Rat acc = 0;
    for (const auto& [mo, ca] : a.terms()) {
        Rat cb = b.coefficient(mo);
        if (cb == 0) continue;
        Int f = 1;
        for (const auto& [v, e] : mo.entries())
            for (int t = 2; t <= e; ++t) f *= t;
        acc += ca * cb * Rat(f);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << format_poly(p);
}

}  // namespace hsl
