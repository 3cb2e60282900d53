#include "hsl/operator_word.hpp"

namespace hsl {

namespace {

void check_block(const Poly& p, int b) {
    if (b < 0 || b > p.context().k)
        throw ContextError("generator block index " + std::to_string(b) +
                           " out of range for context");
}

}  // namespace

Poly apply_generator(const Generator& g, const Poly& p) {
    const Context& ctx = p.context();
    switch (g.kind) {
        case Generator::Kind::InnerUU: {
            check_block(p, g.i);
            check_block(p, g.j);
            Poly r(ctx);
            for (int c = 1; c <= ctx.m; ++c) {
                Monomial mo = Monomial::var(var_u(g.i, c)).mul(Monomial::var(var_u(g.j, c)));
                for (const auto& [m0, coef] : p.terms()) r.add_term(m0.mul(mo), coef);
            }
            return r;
        }
        case Generator::Kind::InnerDD: {
            check_block(p, g.i);
            check_block(p, g.j);
            Poly r(ctx);
            for (int c = 1; c <= ctx.m; ++c) r += diff(diff(p, var_u(g.i, c)), var_u(g.j, c));
            return r;
        }
        case Generator::Kind::InnerUD: {
            check_block(p, g.i);
            check_block(p, g.j);
            Poly r(ctx);
            for (int c = 1; c <= ctx.m; ++c) r += mul_var(diff(p, var_u(g.j, c)), var_u(g.i, c));
            return r;
        }
        case Generator::Kind::Euler: {
            check_block(p, g.i);
            Poly r(ctx);
            for (const auto& [mo, coef] : p.terms()) {
                int d = mo.block_degree(g.i);
                if (d != 0) r.add_term(mo, coef * d);
            }
            return r;
        }
        case Generator::Kind::CoordMul:
            return mul_var(p, g.v);
        case Generator::Kind::CoordDiff:
            return diff(p, g.v);
    }
    throw std::logic_error("unreachable generator kind");
}

OperatorWord OperatorWord::zero() {
    OperatorWord w;
    w.zero_ = true;
    return w;
}

OperatorWord OperatorWord::gen(Generator g, Rat coef) {
    OperatorWord w;
    w.seqs_.push_back({std::move(coef), {Item(g)}});
    return w;
}

OperatorWord OperatorWord::scalar(ScalarExpr s) {
    OperatorWord w;
    w.seqs_.push_back({Rat(1), {Item(std::move(s))}});
    return w;
}

OperatorWord OperatorWord::sequence(std::vector<Item> items, Rat coef) {
    OperatorWord w;
    w.seqs_.push_back({std::move(coef), std::move(items)});
    return w;
}

OperatorWord OperatorWord::operator*(const OperatorWord& o) const {
    if (zero_ || o.zero_) return zero();
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    OperatorWord r;
    for (const auto& a : seqs_) {
        for (const auto& b : o.seqs_) {
            Sequence s;
            s.coef = a.coef * b.coef;
            s.items = a.items;
            s.items.insert(s.items.end(), b.items.begin(), b.items.end());
            r.seqs_.push_back(std::move(s));
        }
    }
    return r;
}

OperatorWord OperatorWord::operator+(const OperatorWord& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    OperatorWord r = *this;
    if (r.is_identity()) r.seqs_.push_back({Rat(1), {}});
    r.seqs_.insert(r.seqs_.end(), o.seqs_.begin(), o.seqs_.end());
    if (o.is_identity()) r.seqs_.push_back({Rat(1), {}});
    return r;
}

OperatorWord OperatorWord::operator-(const OperatorWord& o) const {
    return *this + o.scaled(-1);
}

OperatorWord OperatorWord::scaled(const Rat& c) const {
    if (zero_ || c == 0) return zero();
    OperatorWord r = *this;
    if (r.is_identity()) r.seqs_.push_back({Rat(1), {}});
    for (auto& s : r.seqs_) s.coef *= c;
    return r;
}

Poly OperatorWord::apply(const Poly& p) const {
    if (zero_) return Poly::zero(p.context());
    if (is_identity()) return p;
    Poly acc(p.context());
    for (const auto& seq : seqs_) {
        Poly w = p;
        for (auto it = seq.items.rbegin(); it != seq.items.rend(); ++it) {
            if (w.is_zero()) break;
            if (std::holds_alternative<Generator>(*it)) {
                w = apply_generator(std::get<Generator>(*it), w);
            } else {
                const ScalarExpr& s = std::get<ScalarExpr>(*it);
                if (s.is_constant()) {
                    w = w.scaled(s.constant_part());
                } else {
                    MultiDegree d = require_multidegree(w, "apply_word scalar item");
                    w = w.scaled(s.eval(d, w.context().m));
                }
            }
        }
        if (!w.is_zero()) acc += w.scaled(seq.coef);
    }
    return acc;
}

Poly apply_word(const OperatorWord& w, const Poly& p) { return w.apply(p); }

OperatorWord gl_generator(int i, int j) {
    if (i == j) {
        ScalarExpr e = ScalarExpr::euler(i) + ScalarExpr::symbol_m() / ScalarExpr(Rat(2));
        return OperatorWord::scalar(e);
    }
    return OperatorWord::gen(Generator::inner_ud(i, j));
}

Rat eval_scalar(const ScalarExpr& s, const MultiDegree& d, int m) { return s.eval(d, m); }

}  // namespace hsl
