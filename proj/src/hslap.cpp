#include "hsl/hslap.hpp"

#include <sstream>

namespace hsl {

void HSLaplaceSpec::validate() const {
    if (m < 3) throw InvalidInput("spec: m >= 3 required");
    if (k < 0) throw InvalidInput("spec: k >= 0 required");
    if (int(lambda.size()) != k) throw InvalidInput("spec: lambda must have k entries");
    if (!is_dominant(lambda)) throw InvalidInput("spec: lambda must be dominant");
    if (k > 0 && !(k < m / 2)) throw InvalidInput("spec: k < floor(m/2) required");
}

ScalarExpr c_coeff_expr(int p) {
    ScalarExpr m = ScalarExpr::symbol_m();
    ScalarExpr two(Rat(2));
    ScalarExpr c = ScalarExpr(Rat(-4)) /
                   (two * ScalarExpr::euler(p) + m - ScalarExpr(Rat(2 * p)));
    for (int j = 1; j < p; ++j) {
        ScalarExpr base = two * ScalarExpr::euler(j) + m - ScalarExpr(Rat(2 * j));
        c = c * (base + two) / base;
    }
    return c;
}

Rat c_coeff_value(int p, const HSLaplaceSpec& spec) {
    spec.validate();
    if (p < 1 || p > spec.k) throw InvalidInput("c_coeff: p out of range");
    MultiDegree d;
    d.degrees.assign(spec.k + 1, 0);
    for (int i = 1; i <= spec.k; ++i) d.degrees[i] = spec.lambda[i - 1];
    return c_coeff_expr(p).eval(d, spec.m);
}

void require_value_space(const HSLaplaceSpec& spec, const Poly& f) {
    if (f.is_zero()) return;
    for (int i = 1; i <= spec.k; ++i) {
        int deg = -1;
        for (const auto& [mo, c] : f.terms()) {
            int d = mo.block_degree(i);
            if (deg < 0)
                deg = d;
            else if (d != deg)
                throw ValueSpaceError("field is not homogeneous in dummy block " +
                                      std::to_string(i));
        }
        if (deg != spec.lambda[i - 1])
            throw ValueSpaceError("dummy degree in block " + std::to_string(i) +
                                  " does not match lambda");
    }
    for (const auto& op : simplicial_constraints(spec.context(), 1, spec.k)) {
        if (!op.op(f).is_zero())
            throw ValueSpaceError("field is not H_lambda-valued: " + op.name +
                                  " does not vanish");
    }
}

namespace {

std::vector<ProjectorFactor> dlambda_factors(const HSLaplaceSpec& spec, Mutation mutation) {
    std::vector<int> blocks;
    for (int b = 1; b <= spec.k; ++b) blocks.push_back(b);
    auto factors = simplicial_factors(blocks);
    if (mutation == Mutation::DropProjectorFactor && !factors.empty()) factors.pop_back();
    return factors;
}

}  // namespace

Poly apply_Dlambda(const HSLaplaceSpec& spec, const Poly& f, const ApplyOptions& opts) {
    spec.validate();
    if (!(f.context() == spec.context()))
        throw ContextError("apply_Dlambda: field context does not match the spec");
    if (opts.value_check) require_value_space(spec, f);
    MultiDegree d;
    d.degrees.assign(spec.k + 1, 0);
    for (int i = 1; i <= spec.k; ++i) d.degrees[i] = spec.lambda[i - 1];

    Poly acc = apply_generator(Generator::inner_dd(0, 0), f);
    for (int p = 1; p <= spec.k; ++p) {
        if (spec.lambda[p - 1] == 0) continue;  // <d_p,d_x> kills degree-0 dummies
        Rat cp = c_coeff_expr(p).eval(d, spec.m);
        if (opts.mutation == Mutation::C1PlusOne && p == 1) cp += 1;
        Poly term = apply_generator(Generator::inner_dd(p, 0), f);
        term = apply_generator(Generator::inner_ud(p, 0), term);
        acc += term.scaled(cp);
    }
    return pi_product(acc, dlambda_factors(spec, opts.mutation));
}

Poly apply_D2_reference(const Poly& f, int m, bool value_check) {
    HSLaplaceSpec spec{m, 1, {2}};
    spec.validate();
    if (value_check) require_value_space(spec, f);
    // Delta_x - 4/(m+2) (<u,d_x> - |u|^2/m <d_u,d_x>) <d_u,d_x>
    Poly inner = apply_generator(Generator::inner_dd(1, 0), f);
    Poly t1 = apply_generator(Generator::inner_ud(1, 0), inner);
    Poly t2 = apply_generator(Generator::inner_dd(1, 0), inner);
    t2 = apply_generator(Generator::inner_uu(1, 1), t2);
    Poly bracket = t1 - t2.scaled(Rat(1) / m);
    return apply_generator(Generator::inner_dd(0, 0), f) - bracket.scaled(Rat(4) / (m + 2));
}

OperatorWord sct_word(const Context& ctx, int j) {
    if (j < 1 || j > ctx.m) throw InvalidInput("sct_word: component out of range");
    using Item = OperatorWord::Item;
    VarRef xj = var_x(j);
    OperatorWord w = OperatorWord::sequence(
        {Item(Generator::inner_uu(0, 0)), Item(Generator::coord_diff(xj))});
    ScalarExpr dil = ScalarExpr(Rat(2)) * ScalarExpr::euler(0) + ScalarExpr::symbol_m() -
                     ScalarExpr(Rat(2));
    w = w - OperatorWord::sequence({Item(Generator::coord_mul(xj)), Item(dil)});
    for (int p = 1; p <= ctx.k; ++p) {
        w = w + OperatorWord::sequence({Item(Generator::inner_uu(p, 0)),
                                        Item(Generator::coord_diff(var_u(p, j)))},
                                       2);
        w = w - OperatorWord::sequence({Item(Generator::coord_mul(var_u(p, j))),
                                        Item(Generator::inner_ud(0, p))},
                                       2);
    }
    return w;
}

OperatorWord rotation_word(const Context& ctx, int a, int b) {
    if (a < 1 || b < 1 || a > ctx.m || b > ctx.m || a == b)
        throw InvalidInput("rotation_word: bad component pair");
    using Item = OperatorWord::Item;
    OperatorWord w = OperatorWord::zero();
    for (int blk = 0; blk <= ctx.k; ++blk) {
        w = w + OperatorWord::sequence({Item(Generator::coord_mul(var_u(blk, a))),
                                        Item(Generator::coord_diff(var_u(blk, b)))});
        w = w - OperatorWord::sequence({Item(Generator::coord_mul(var_u(blk, b))),
                                        Item(Generator::coord_diff(var_u(blk, a)))});
    }
    return w;
}

Poly conformal_generator(const ConformalGenerator& g, const Poly& f) {
    const Context& ctx = f.context();
    switch (g.kind) {
        case ConformalGenerator::Kind::Translation:
            return diff(f, var_x(g.a));
        case ConformalGenerator::Kind::Rotation:
            return rotation_word(ctx, g.a, g.b).apply(f);
        case ConformalGenerator::Kind::Dilation: {
            ScalarExpr dil = ScalarExpr::euler(0) +
                             (ScalarExpr::symbol_m() - ScalarExpr(Rat(2))) / ScalarExpr(Rat(2));
            return OperatorWord::scalar(dil).apply(f);
        }
        case ConformalGenerator::Kind::SpecialConformal:
            return sct_word(ctx, g.a).apply(f);
    }
    throw std::logic_error("unreachable conformal generator kind");
}

Poly random_field(const HSLaplaceSpec& spec, int x_degree, std::mt19937_64& rng) {
    Context ctx = spec.context();
    SubspaceBasis value = basis_simplicial(spec.lambda, ctx, 1);
    if (value.basis.empty())
        throw InvalidInput("random_field: H_lambda is zero-dimensional");
    MultiDegree xd;
    xd.degrees.assign(ctx.blocks(), 0);
    xd.degrees[0] = x_degree;
    std::vector<Monomial> xmonos = basis_monomials(xd, ctx);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> keep(0, 2);
    Poly f(ctx);
    for (const auto& h : value.basis) {
        Poly phi(ctx);
        for (const auto& mo : xmonos) {
            if (keep(rng) != 0) continue;  // sparse
            int c = coef(rng);
            if (c != 0) phi.add_term(mo, c);
        }
        if (!phi.is_zero()) f += phi * h;
    }
    if (f.is_zero() && !value.basis.empty() && !xmonos.empty())
        f = Poly::monomial(ctx, xmonos.front(), 1) * value.basis.front();
    return f;
}

VerifyReport verify_invariance(const HSLaplaceSpec& spec, const std::vector<CheckKind>& checks,
                               int trials, int x_degree, std::uint64_t seed, Mutation mutation,
                               bool value_check) {
    spec.validate();
    if (trials < 1) throw InvalidInput("verify_invariance: trials >= 1 required");
    VerifyReport report;
    report.spec = spec;
    report.seed = seed;
    report.x_degree = x_degree;
    ApplyOptions opts;
    opts.mutation = mutation;
    opts.value_check = value_check;
    const Context ctx = spec.context();

    for (CheckKind kind : checks) {
        CheckResult res;
        res.trials = trials;
        switch (kind) {
            case CheckKind::Rotation: res.name = "rotation"; break;
            case CheckKind::Translation: res.name = "translation"; break;
            case CheckKind::Dilation: res.name = "dilation"; break;
            case CheckKind::Sct: res.name = "sct"; break;
        }
        for (int t = 0; t < trials && res.pass; ++t) {
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (t + 1));
            Poly f = random_field(spec, x_degree, rng);
            Poly Df = apply_Dlambda(spec, f, opts);
            auto fail = [&](const std::string& detail) {
                res.pass = false;
                res.counterexample = f;
                res.detail = detail;
            };
            switch (kind) {
                case CheckKind::Translation: {
                    for (int j = 1; j <= ctx.m && res.pass; ++j) {
                        Poly lhs = apply_Dlambda(spec, diff(f, var_x(j)), opts);
                        if (!(lhs == diff(Df, var_x(j)))) fail("j=" + std::to_string(j));
                    }
                    break;
                }
                case CheckKind::Rotation: {
                    for (int a = 1; a <= ctx.m && res.pass; ++a) {
                        for (int b = a + 1; b <= ctx.m && res.pass; ++b) {
                            OperatorWord rot = rotation_word(ctx, a, b);
                            Poly lhs = apply_Dlambda(spec, rot.apply(f), opts);
                            if (!(lhs == rot.apply(Df)))
                                fail("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
                        }
                    }
                    break;
                }
                case CheckKind::Dilation: {
                    // D (E_x + (m-2)/2) f = (E_x + (m+2)/2) D f, as operators.
                    Poly g = apply_generator(Generator::euler(0), f) +
                             f.scaled(Rat(ctx.m - 2) / 2);
                    Poly lhs = apply_Dlambda(spec, g, opts);
                    Poly rhs = apply_generator(Generator::euler(0), Df) +
                               Df.scaled(Rat(ctx.m + 2) / 2);
                    if (!(lhs == rhs)) fail("dilation intertwining");
                    break;
                }
                case CheckKind::Sct: {
                    for (int j = 1; j <= ctx.m && res.pass; ++j) {
                        OperatorWord K = sct_word(ctx, j);
                        Poly lhs = apply_Dlambda(spec, K.apply(f), opts);
                        Poly rhs = K.apply(Df) - mul_var(Df, var_x(j)).scaled(4);
                        if (!(lhs == rhs)) fail("j=" + std::to_string(j));
                    }
                    break;
                }
            }
        }
        report.checks.push_back(std::move(res));
    }
    return report;
}

Poly gradient(const HSLaplaceSpec& spec, int j, const Poly& f, bool value_check) {
    spec.validate();
    if (j < 1 || j > spec.k) throw InvalidInput("gradient: block index out of range");
    if (value_check) require_value_space(spec, f);
    return pi_sp2k(apply_generator(Generator::inner_ud(j, 0), f));
}

OperatorWord gradient_adjoint_expanded_word(const HSLaplaceSpec& spec, int j) {
    using Item = OperatorWord::Item;
    OperatorWord w = OperatorWord::gen(Generator::inner_dd(j, 0));
    // Sum over increasing chains j < i_1 < ... < i_s <= k; the Euler factors
    // multiply on the right (evaluated on the input's dummy degrees).
    int tail = spec.k - j;
    for (int mask = 1; mask < (1 << tail); ++mask) {
        std::vector<int> chain;
        for (int t = 0; t < tail; ++t)
            if (mask & (1 << t)) chain.push_back(j + 1 + t);
        std::vector<Item> items;
        ScalarExpr denom(Rat(1));
        int prev = j;
        for (int i : chain) {
            items.push_back(Item(Generator::inner_ud(i, prev)));
            denom = denom * (ScalarExpr::euler(j) - ScalarExpr::euler(i) +
                             ScalarExpr(Rat(i - j)));
            prev = i;
        }
        items.push_back(Item(Generator::inner_dd(prev, 0)));
        items.push_back(Item(ScalarExpr(Rat(1)) / denom));
        w = w + OperatorWord::sequence(std::move(items));
    }
    return w;
}

Poly gradient_adjoint(const HSLaplaceSpec& spec, int j, AdjointVariant variant, const Poly& f,
                      bool value_check) {
    spec.validate();
    if (j < 1 || j > spec.k) throw InvalidInput("gradient_adjoint: block index out of range");
    if (value_check) require_value_space(spec, f);
    switch (variant) {
        case AdjointVariant::ProjectorForm:
            return pi_sp2k(apply_generator(Generator::inner_dd(j, 0), f));
        case AdjointVariant::ExpandedForm:
            return gradient_adjoint_expanded_word(spec, j).apply(f);
    }
    throw std::logic_error("unreachable adjoint variant");
}

Poly two_var_projection(TwoVarKind kind, const Poly& f) {
    const Context& ctx = f.context();
    if (ctx.k != 2) throw ContextError("two_var_projection: context must have dummy blocks u=1,v=2");
    int du = -1;
    for (const auto& [mo, c] : f.terms()) {
        if (mo.block_degree(2) != 0)
            throw ValueSpaceError("two_var_projection: field must not depend on v");
        int d = mo.block_degree(1);
        if (du < 0)
            du = d;
        else if (d != du)
            throw ValueSpaceError("two_var_projection: field must be homogeneous in u");
    }
    if (du < 0) return f;  // zero field
    if (!apply_generator(Generator::inner_dd(1, 1), f).is_zero())
        throw ValueSpaceError("two_var_projection: field must be harmonic in u");
    const int k = du, m = ctx.m;

    switch (kind) {
        case TwoVarKind::KMinus: {
            Rat denom = Rat(k + m - 3) * (2 * k + m - 2);
            if (denom == 0) throw PoleError("two_var_projection: degenerate (k,m)");
            Poly low = apply_generator(Generator::inner_dd(1, 0), f);
            return low.scaled(Rat(2 * k + m - 4) / denom);
        }
        case TwoVarKind::KPlus: {
            return pi_u_raising_two_term(f, 1).scaled(Rat(1) / (k + 1));
        }
        case TwoVarKind::Middle: {
            Poly nabla = apply_generator(Generator::inner_ud(2, 0), f);  // <v,d_x> f
            Poly plus = two_var_projection(TwoVarKind::KPlus, f);
            Poly minus = two_var_projection(TwoVarKind::KMinus, f);
            return nabla - sp4_generator(Sp4Gen::S_v, plus) - sp4_generator(Sp4Gen::C, minus);
        }
    }
    throw std::logic_error("unreachable two-var projection kind");
}

}  // namespace hsl
