// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: hsl_acceptance [--cli <path-to-hsl>] [--only <n>]
// Criterion 6 (the extended decomposition) lives in its own binary.

#include "hsl/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace hsl;

namespace {

int failures = 0;
std::string cli_path;

struct Criterion {
    int number;
    std::string detail;
    bool pass = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(int n) : number(n) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    ~Criterion() {
        auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::printf("criterion %2d: %s (%.1fs)%s%s\n", number, pass ? "PASS" : "FAIL", secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

// Random multihomogeneous polynomial of the given full degree tuple.
Poly random_degrees(const Context& ctx, const std::vector<int>& full, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> comp(1, ctx.m);
    Poly p(ctx);
    for (int t = 0; t < 12; ++t) {
        Monomial mo;
        for (int b = 0; b < ctx.blocks(); ++b)
            for (int e = 0; e < full[b]; ++e) mo = mo.mul(Monomial::var(var_u(b, comp(rng))));
        p.add_term(mo, coef(rng));
    }
    return p;
}

std::vector<HSLaplaceSpec> grid_specs() {
    std::vector<HSLaplaceSpec> specs;
    for (int m : {4, 5, 6})
        for (int l1 = 0; l1 <= 3; ++l1) specs.push_back({m, 1, {l1}});
    for (auto l : std::vector<Weight>{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}})
        specs.push_back({6, 2, l});
    return specs;
}

// 1. Conformal invariance over the whole grid, all four families, exact.
void criterion1() {
    Criterion c(1);
    const std::uint64_t seed = 0x5eed2026;
    for (const auto& spec : grid_specs()) {
        VerifyReport rep = verify_invariance(
            spec,
            {CheckKind::Translation, CheckKind::Rotation, CheckKind::Dilation, CheckKind::Sct},
            3, 4, seed);
        std::ostringstream tag;
        tag << "m=" << spec.m << " k=" << spec.k << " lambda=(";
        for (size_t i = 0; i < spec.lambda.size(); ++i)
            tag << (i ? "," : "") << spec.lambda[i];
        tag << ")";
        for (const auto& chk : rep.checks)
            c.require(chk.pass, tag.str() + " " + chk.name + " failed at " + chk.detail);
    }
}

// 2. D_lambda for lambda=(2) equals the reference operator on a full basis
//    of P_{l0}(R^m, H_2) for m in {4,5}, l0 <= 3.
void criterion2() {
    Criterion c(2);
    for (int m : {4, 5}) {
        Context ctx{1, m};
        HSLaplaceSpec spec{m, 1, {2}};
        const auto& h2 = harmonic_basis(ctx, 1, 2);
        for (int l0 = 0; l0 <= 3; ++l0) {
            MultiDegree d;
            d.degrees = {l0, 0};
            for (const auto& mo : basis_monomials(d, ctx)) {
                Poly xpart = Poly::monomial(ctx, mo, 1);
                for (const auto& h : h2) {
                    Poly f = xpart * h;
                    if (!(apply_Dlambda(spec, f) == apply_D2_reference(f, m))) {
                        c.require(false, "mismatch at m=" + std::to_string(m) +
                                             " l0=" + std::to_string(l0));
                        return;
                    }
                }
            }
        }
    }
}

// 3. Projector suite: idempotence, rel1-rel4, degree preservation, identity
//    on H_lambda; k <= 2, m <= 6, dummy degrees <= 3, 10 random inputs each.
void criterion3() {
    Criterion c(3);
    std::mt19937_64 rng(0xabcd01);

    auto run_config = [&](Context ctx, std::vector<int> degs) {
        std::vector<int> full(ctx.blocks(), 0);
        for (size_t i = 0; i < degs.size(); ++i) full[i + 1] = degs[i];
        for (int round = 0; round < 10; ++round) {
            Poly p = random_degrees(ctx, full, rng);
            if (p.is_zero()) continue;
            Poly once = pi_sp2k(p);
            c.require(pi_sp2k(once) == once, "idempotence");
            if (!once.is_zero())
                c.require(require_multidegree(once, "acc").degrees ==
                              require_multidegree(p, "acc").degrees,
                          "degree preservation");
            for (int i = 1; i <= ctx.k; ++i)
                for (int j = i; j <= ctx.k; ++j) {
                    c.require(apply_generator(Generator::inner_dd(i, j), once).is_zero(), "rel2");
                    if (i < j)
                        c.require(apply_generator(Generator::inner_ud(i, j), once).is_zero(),
                                  "rel1");
                }
        }
    };

    auto run_right = [&](Context ctx) {
        for (int round = 0; round < 10; ++round) {
            if (ctx.k == 2) {
                std::vector<int> degs{0, 3, 0};
                Poly q = random_degrees(ctx, degs, rng);
                if (q.is_zero()) continue;
                c.require(pi_sp2k(apply_generator(Generator::inner_ud(2, 1), q)).is_zero(),
                          "rel3");
                c.require(pi_sp2k(apply_generator(Generator::inner_uu(1, 2), q)).is_zero(),
                          "rel4 mixed");
                c.require(pi_sp2k(apply_generator(Generator::inner_uu(1, 1), q)).is_zero(),
                          "rel4 |u1|^2");
            } else {
                Poly q = random_degrees(ctx, {0, 2}, rng);
                if (q.is_zero()) continue;
                c.require(pi_sp2k(apply_generator(Generator::inner_uu(1, 1), q)).is_zero(),
                          "rel4 k=1");
            }
        }
    };

    for (int m : {4, 5, 6}) {
        Context ctx{1, m};
        for (int l = 0; l <= 3; ++l) run_config(ctx, {l});
        run_right(ctx);
        for (int l = 1; l <= 3; ++l)
            for (const auto& h : basis_simplicial({l}, ctx, 1).basis)
                c.require(pi_sp2k(h) == h, "identity on H_lambda, k=1");
    }
    {
        Context ctx{2, 6};
        for (auto degs : std::vector<std::vector<int>>{{1, 0}, {1, 1}, {2, 1}, {3, 1}, {2, 2},
                                                       {3, 2}, {3, 3}})
            run_config(ctx, degs);
        run_right(ctx);
        for (auto l : std::vector<Weight>{{1, 1}, {2, 1}, {3, 2}})
            for (const auto& h : basis_simplicial(l, ctx, 1).basis)
                c.require(pi_sp2k(h) == h, "identity on H_lambda, k=2");
    }
}

// 4. Two-variable eigenvalue oracles and the Stein-Weiss reconstruction.
void criterion4() {
    Criterion c(4);
    for (int m : {4, 5, 6}) {
        Context ctx{2, m};
        std::mt19937_64 rng(4000 + m);
        auto random_x2 = [&]() {
            Poly phi = random_degrees(ctx, {2, 0, 0}, rng);
            if (phi.is_zero()) phi = Poly::monomial(ctx, Monomial::var(var_x(1), 2), 1);
            return phi;
        };
        for (int k : {1, 2, 3}) {
            Poly phi = random_x2();
            Poly f = phi * harmonic_basis(ctx, 1, k - 1)[0];
            Poly ac = sp4_generator(Sp4Gen::A, sp4_generator(Sp4Gen::C, f));
            Rat eig = Rat(k + m - 3) * (2 * k + m - 2) / Rat(2 * k + m - 4);
            c.require(ac == f.scaled(eig), "A.C eigenvalue k=" + std::to_string(k));

            Poly g = phi * harmonic_basis(ctx, 1, k + 1)[0];
            Poly susv = sp4_generator(Sp4Gen::S_u, sp4_generator(Sp4Gen::S_v, g));
            c.require(susv == g.scaled(k + 1), "S_u.S_v eigenvalue k=" + std::to_string(k));
        }
        for (int deg : {1, 2}) {
            const auto& hb = harmonic_basis(ctx, 1, deg);
            for (int round = 0; round < 3; ++round) {
                Poly f = random_x2() * hb[round % hb.size()];
                Poly minus = two_var_projection(TwoVarKind::KMinus, f);
                Poly plus = two_var_projection(TwoVarKind::KPlus, f);
                Poly middle = two_var_projection(TwoVarKind::Middle, f);
                Poly nabla = apply_generator(Generator::inner_ud(2, 0), f);
                c.require(middle + sp4_generator(Sp4Gen::S_v, plus) +
                                  sp4_generator(Sp4Gen::C, minus) ==
                              nabla,
                          "reconstruction");
                c.require(sp4_generator(Sp4Gen::A, middle).is_zero(), "A middle");
                c.require(sp4_generator(Sp4Gen::S_u, middle).is_zero(), "S_u middle");
            }
        }
    }
}

// 5. Worked decomposition of ker^A_3 D_{(1,1)} at m=6.
void criterion5() {
    Criterion c(5);
    Context ctx{2, 6};
    DecompositionReport rep = decompose_typeA(3, {1, 1}, ctx);
    c.require(rep.summands.size() == 2, "expected exactly 2 summands");
    c.require(!rep.certified, "expected the exact path");
    if (rep.summands.size() == 2) {
        c.require(rep.summands[0].mu == Weight{3, 1, 1}, "first summand H_{3,1,1}");
        c.require(rep.summands[1].mu == Weight{4, 1, 0}, "second summand H_{4,1,0}");
        c.require(rep.summands[0].dim == basis_simplicial({3, 1, 1}, ctx, 0).dim(),
                  "dim H_{3,1,1} by independent nullspace");
        c.require(rep.summands[1].dim == basis_simplicial({4, 1, 0}, ctx, 0).dim(),
                  "dim H_{4,1,0} by independent nullspace");
    }
    c.require(rep.consistent, "span equality with basis_typeA");
    c.require(rep.total_dim == rep.kernel_dim, "dimension sum");

    // The embedding factor equals the displayed word up to one overall scalar.
    using Item = OperatorWord::Item;
    ScalarExpr e21 = ScalarExpr::euler(2) - ScalarExpr::euler(1) - ScalarExpr(Rat(1));
    OperatorWord display =
        OperatorWord::sequence({Item(Generator::inner_ud(2, 1)), Item(Generator::inner_ud(1, 0))}) +
        OperatorWord::sequence({Item(Generator::inner_ud(2, 0)), Item(e21)});
    SubspaceBasis h410 = basis_simplicial({4, 1, 0}, ctx, 0);
    ShiftTuple shift{{0, 1}};
    std::optional<Rat> ratio;
    for (const auto& b : h410.basis) {
        Poly img = embedding_rho(shift, b);
        Poly disp = display.apply(b);
        if (img.is_zero()) {
            c.require(false, "zero embedding image");
            break;
        }
        if (!ratio)
            ratio = disp.coefficient(img.terms().begin()->first) / img.terms().begin()->second;
        if (!(disp == img.scaled(*ratio))) {
            c.require(false, "embedding factor does not match the displayed word");
            break;
        }
    }
    c.require(ratio.has_value() && *ratio != 0, "nonzero overall scalar");
}

// 7. k=1 decomposition law at m=5 for l1 <= 2, l0 <= 3.
void criterion7() {
    Criterion c(7);
    Context ctx{1, 5};
    for (int l1 = 0; l1 <= 2; ++l1) {
        for (int l0 = std::max(1, l1); l0 <= 3; ++l0) {
            DecompositionReport rep = decompose_typeA(l0, {l1}, ctx);
            std::string tag = " at l0=" + std::to_string(l0) + " l1=" + std::to_string(l1);
            c.require(rep.consistent && !rep.certified, "inconsistent" + tag);
            c.require(int(rep.summands.size()) == l1 + 1, "summand count" + tag);
            size_t total = 0;
            for (int d = 0; d <= l1; ++d) {
                size_t dim_mu = basis_simplicial({l0 + d, l1 - d}, ctx, 0).dim();
                if (d < int(rep.summands.size()))
                    c.require(rep.summands[d].dim == dim_mu, "summand dim" + tag);
                total += dim_mu;
            }
            c.require(rep.kernel_dim == total, "dimension law" + tag);
        }
    }
}

// 8. Transvector mapping laws and the betweenness brute force.
void criterion8() {
    Criterion c(8);
    for (const auto& spec : grid_specs()) {
        if (spec.lambda.empty() || spec.lambda[0] == 0) continue;
        Context ctx = spec.context();
        int l0 = spec.lambda[0] + 1;
        SubspaceBasis source = basis_typeA(l0, spec.lambda, ctx);
        size_t stride = std::max<size_t>(1, source.dim() / 12);
        for (int i = 1; i <= ctx.k; ++i) {
            Weight up = spec.lambda;
            up[i - 1] += 1;
            if (is_dominant(up) && l0 - 1 >= up[0]) {
                SubspaceBasis target = basis_typeA(l0 - 1, up, ctx);
                for (size_t t = 0; t < source.dim(); t += stride) {
                    Poly img = z_raise(i, source.basis[t]);
                    if (!img.is_zero())
                        c.require(membership(target, img), "z_raise membership");
                }
            }
            Weight down = spec.lambda;
            down[i - 1] -= 1;
            if (is_dominant(down)) {
                SubspaceBasis target = basis_typeA(l0 + 1, down, ctx);
                for (size_t t = 0; t < source.dim(); t += stride) {
                    Poly img = z_lower(i, source.basis[t]);
                    if (!img.is_zero())
                        c.require(membership(target, img), "z_lower membership");
                }
            }
        }
    }

    // Betweenness: twelve small pairs, exact 0/1 dimensions.
    Context c26{2, 6};
    struct Case {
        Weight mu, nu;
        int expect;
    };
    const Case cases[] = {
        {{4, 3, 1}, {3, 1}, 1}, {{4, 3, 1}, {5, 1}, 0}, {{4, 3, 1}, {3, 2}, 1},
        {{4, 3, 1}, {4, 3}, 1}, {{4, 3, 1}, {2, 1}, 0}, {{4, 3, 1}, {3, 0}, 0},
        {{3, 2, 1}, {2, 1}, 1}, {{3, 2, 1}, {3, 2}, 1}, {{3, 2, 1}, {2, 0}, 0},
        {{2, 1, 0}, {1, 0}, 1}, {{2, 1, 0}, {2, 1}, 1}, {{2, 1, 0}, {0, 0}, 0},
    };
    for (const auto& cs : cases) {
        int got = weight_space_dim(cs.mu, cs.nu, c26);
        std::ostringstream tag;
        tag << "betweenness mu=(" << cs.mu[0] << "," << cs.mu[1] << "," << cs.mu[2] << ") nu=("
            << cs.nu[0] << "," << cs.nu[1] << ") got " << got << " want " << cs.expect;
        c.require(got == cs.expect, tag.str());
    }
    Context c15{1, 5};
    c.require(weight_space_dim({3, 1}, {2}, c15) == 1, "k=1 chain inner");
    c.require(weight_space_dim({3, 1}, {4}, c15) == 0, "k=1 chain outer");
}

// 9. Mutation sensitivity of the special conformal identity.
void criterion9() {
    Criterion c(9);
    HSLaplaceSpec spec{5, 1, {2}};
    VerifyReport r1 = verify_invariance(spec, {CheckKind::Sct}, 2, 2, 99, Mutation::C1PlusOne);
    c.require(!r1.all_pass(), "c1+1 must fail");
    c.require(!r1.checks.empty() && r1.checks[0].counterexample.has_value(),
              "c1+1 counterexample");
    VerifyReport r2 =
        verify_invariance(spec, {CheckKind::Sct}, 2, 2, 99, Mutation::DropProjectorFactor);
    c.require(!r2.all_pass(), "dropped factor must fail");
    c.require(!r2.checks.empty() && r2.checks[0].counterexample.has_value(),
              "dropped-factor counterexample");
    VerifyReport r0 = verify_invariance(spec, {CheckKind::Sct}, 2, 2, 99, Mutation::None);
    c.require(r0.all_pass(), "unmutated operator passes");
}

// 10. CLI determinism: identical runs produce byte-identical JSON.
void criterion10() {
    Criterion c(10);
    if (cli_path.empty()) {
        c.require(false, "no --cli path given");
        return;
    }
    auto run = [&](const std::string& args, const std::string& out) {
        std::string cmd = cli_path + " " + args + " > " + out + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    auto slurp = [](const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    const char* cmds[] = {
        "verify --m 5 --lambda 1 --x-degree 3 --checks all --trials 3 --seed 42",
        "verify --m 6 --lambda 2,1 --checks sct --trials 2 --x-degree 2 --seed 7",
        "construct --m 6 --lambda 1,1",
        "dim --m 5 --mu 2,1",
        "decompose --m 6 --lambda 1,1 --lambda0 3",
        "kernel --m 5 --lambda 1 --lambda0 2",
    };
    int idx = 0;
    for (const char* cmd : cmds) {
        std::string a = "/tmp/hsl_det_a_" + std::to_string(idx) + ".json";
        std::string b = "/tmp/hsl_det_b_" + std::to_string(idx) + ".json";
        int rc1 = run(cmd, a);
        int rc2 = run(cmd, b);
        c.require(rc1 == rc2, std::string("exit codes differ for: ") + cmd);
        std::string da = slurp(a), db = slurp(b);
        c.require(!da.empty() && da == db, std::string("output differs for: ") + cmd);
        ++idx;
    }
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") cli_path = argv[i + 1];
        if (flag == "--only") only = std::atoi(argv[i + 1]);
    }
    auto want = [&](int n) { return only == 0 || only == n; };
    if (want(1)) criterion1();
    if (want(2)) criterion2();
    if (want(3)) criterion3();
    if (want(4)) criterion4();
    if (want(5)) criterion5();
    if (want(7)) criterion7();
    if (want(8)) criterion8();
    if (want(9)) criterion9();
    if (want(10)) criterion10();
    if (only == 0) std::printf("criterion  6: see hsl_acceptance_extended\n");
    return failures == 0 ? 0 : 1;
}
