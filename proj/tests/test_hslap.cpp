#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsl/hslap.hpp"
#include "test_util.hpp"

using namespace hsl;
using hsl::test::random_multihomogeneous;

TEST_CASE("c_p coefficients") {
    for (int m : {4, 5, 6}) {
        HSLaplaceSpec s2{m, 1, {2}};
        CHECK(c_coeff_value(1, s2) == Rat(-4) / (m + 2));
    }
    HSLaplaceSpec s1{5, 1, {1}};
    CHECK(c_coeff_value(1, s1) == Rat(-4) / 5);

    for (int m : {6, 8}) {
        HSLaplaceSpec s11{m, 2, {1, 1}};
        CHECK(c_coeff_value(2, s11) == Rat(-4) * (m + 2) / (Rat(m - 2) * m));
    }
}

TEST_CASE("apply_Dlambda basic evaluations") {
    {
        // lambda = 0 degenerates to Delta_x on all inputs.
        Context ctx{1, 4};
        HSLaplaceSpec spec{4, 1, {0}};
        Poly f = Poly::monomial(ctx, Monomial::var(var_x(1), 2), 1);
        CHECK(apply_Dlambda(spec, f) == Poly::constant(ctx, 2));
        std::mt19937_64 rng(3);
        for (int round = 0; round < 5; ++round) {
            Poly g = random_multihomogeneous(ctx, {3, 0}, rng);
            CHECK(apply_Dlambda(spec, g) == apply_generator(Generator::inner_dd(0, 0), g));
        }
    }
    {
        // k=1, lambda=(1), m=5, f = x1 x2 u_{1,1}: D f = -(4/5) u_{1,2}.
        Context ctx{1, 5};
        HSLaplaceSpec spec{5, 1, {1}};
        Poly f = mul(mul(Poly::variable(ctx, var_x(1)), Poly::variable(ctx, var_x(2))),
                     Poly::variable(ctx, var_u(1, 1)));
        Poly expected = Poly::variable(ctx, var_u(1, 2)).scaled(Rat(-4) / 5);
        CHECK(apply_Dlambda(spec, f) == expected);
    }
    {
        // Value-space violations are rejected; the check can be disabled.
        Context ctx{1, 5};
        HSLaplaceSpec spec{5, 1, {2}};
        Poly bad(ctx);
        for (int c = 1; c <= 5; ++c) bad.add_term(Monomial::var(var_u(1, c), 2), 1);  // |u|^2
        CHECK_THROWS_AS(apply_Dlambda(spec, bad), ValueSpaceError);
        ApplyOptions opts;
        opts.value_check = false;
        CHECK_NOTHROW(apply_Dlambda(spec, bad, opts));
    }
}

TEST_CASE("D output stays H_lambda-valued") {
    for (auto spec : {HSLaplaceSpec{5, 1, {2}}, HSLaplaceSpec{6, 2, {2, 1}}}) {
        std::mt19937_64 rng(55 + spec.m);
        for (int round = 0; round < 3; ++round) {
            Poly f = random_field(spec, 3, rng);
            Poly Df = apply_Dlambda(spec, f);
            if (!Df.is_zero()) CHECK_NOTHROW(require_value_space(spec, Df));
        }
    }
}

TEST_CASE("D2 reference cross-check") {
    for (int m : {4, 5, 6}) {
        Context ctx{1, m};
        HSLaplaceSpec spec{m, 1, {2}};
        std::mt19937_64 rng(100 + m);
        for (int x_deg = 0; x_deg <= 3; ++x_deg) {
            for (int round = 0; round < 2; ++round) {
                Poly f = random_field(spec, x_deg, rng);
                CHECK(apply_Dlambda(spec, f) == apply_D2_reference(f, m));
            }
        }
        // The explicit example x1^2 (u_{1,2}^2 - u_{1,3}^2).
        Poly val = Poly::monomial(ctx, Monomial::var(var_u(1, 2), 2), 1) -
                   Poly::monomial(ctx, Monomial::var(var_u(1, 3), 2), 1);
        Poly f = mul(Poly::monomial(ctx, Monomial::var(var_x(1), 2), 1), val);
        CHECK(apply_Dlambda(spec, f) == apply_D2_reference(f, m));
    }
}

TEST_CASE("conformal generator words") {
    Context ctx{1, 5};
    // K_j on a constant: -(m-2) x_j.
    Poly one = Poly::constant(ctx, 1);
    for (int j = 1; j <= 3; ++j) {
        Poly kj = sct_word(ctx, j).apply(one);
        CHECK(kj == Poly::variable(ctx, var_x(j)).scaled(-(ctx.m - 2)));
    }
    // dL(e_12) x1 = -x2.
    Poly x1 = Poly::variable(ctx, var_x(1));
    CHECK(rotation_word(ctx, 1, 2).apply(x1) == -Poly::variable(ctx, var_x(2)));
    // Rotations act per block.
    Poly u13 = Poly::variable(ctx, var_u(1, 3));
    CHECK(rotation_word(ctx, 3, 1).apply(u13) == -Poly::variable(ctx, var_u(1, 1)));
}

TEST_CASE("invariance verifier") {
    {
        HSLaplaceSpec spec{4, 1, {1}};
        VerifyReport rep = verify_invariance(
            spec,
            {CheckKind::Translation, CheckKind::Rotation, CheckKind::Dilation, CheckKind::Sct},
            2, 3, 20260809);
        CHECK(rep.all_pass());
    }
    {
        HSLaplaceSpec spec{6, 2, {1, 1}};
        VerifyReport rep = verify_invariance(spec, {CheckKind::Sct}, 1, 2, 77);
        CHECK(rep.all_pass());
    }
    {
        // Mutations must break the special conformal identity and produce a
        // concrete counterexample.
        HSLaplaceSpec spec{5, 1, {2}};
        VerifyReport rep =
            verify_invariance(spec, {CheckKind::Sct}, 1, 2, 11, Mutation::C1PlusOne);
        REQUIRE(!rep.all_pass());
        CHECK(rep.checks[0].counterexample.has_value());

        VerifyReport rep2 =
            verify_invariance(spec, {CheckKind::Sct}, 1, 2, 11, Mutation::DropProjectorFactor);
        CHECK(!rep2.all_pass());
    }
}

TEST_CASE("gradients and adjoints") {
    {
        // k=1: the expanded adjoint is the bare trace (empty correction sum).
        HSLaplaceSpec spec{5, 1, {2}};
        std::mt19937_64 rng(7);
        Poly f = random_field(spec, 2, rng);
        CHECK(gradient_adjoint(spec, 1, AdjointVariant::ExpandedForm, f) ==
              apply_generator(Generator::inner_dd(1, 0), f));
    }
    {
        // k=2: both adjoint variants agree on H_{(2,1)}-valued fields, m=6.
        HSLaplaceSpec spec{6, 2, {2, 1}};
        std::mt19937_64 rng(8);
        for (int round = 0; round < 3; ++round) {
            Poly f = random_field(spec, 2, rng);
            for (int j = 1; j <= 2; ++j) {
                Poly a = gradient_adjoint(spec, j, AdjointVariant::ProjectorForm, f);
                Poly b = gradient_adjoint(spec, j, AdjointVariant::ExpandedForm, f);
                CHECK(a == b);
            }
        }
    }
    {
        // k=3 agreement (m=8).
        HSLaplaceSpec spec{8, 3, {1, 1, 1}};
        std::mt19937_64 rng(9);
        Poly f = random_field(spec, 1, rng);
        for (int j = 1; j <= 3; ++j) {
            Poly a = gradient_adjoint(spec, j, AdjointVariant::ProjectorForm, f);
            Poly b = gradient_adjoint(spec, j, AdjointVariant::ExpandedForm, f);
            CHECK(a == b);
        }
    }
    {
        // G*_{e_j} G_{e_j} output stays H_lambda-valued (fixed by pi).
        HSLaplaceSpec spec{6, 2, {2, 1}};
        std::mt19937_64 rng(10);
        Poly f = random_field(spec, 2, rng);
        for (int j = 1; j <= 2; ++j) {
            HSLaplaceSpec up = spec;
            up.lambda[j - 1] += 1;
            if (!is_dominant(up.lambda)) continue;
            Poly g = gradient(spec, j, f);    // H_{lambda+e_j}-valued
            Poly back = gradient_adjoint(up, j, AdjointVariant::ProjectorForm, g);
            require_value_space(spec, back);  // throws on failure
            CHECK(pi_sp2k(back) == back);
        }
    }
    {
        // Fischer duality shadow in the dummies: [<u_j,d_x>f, g] = [f, <x,d_j>g].
        Context ctx{2, 5};
        std::mt19937_64 rng(11);
        for (int round = 0; round < 5; ++round) {
            Poly f = random_multihomogeneous(ctx, {2, 1, 1}, rng);
            Poly g = random_multihomogeneous(ctx, {1, 2, 1}, rng);
            CHECK(fischer(apply_generator(Generator::inner_ud(1, 0), f), g) ==
                  fischer(f, apply_generator(Generator::inner_ud(0, 1), g)));
        }
    }
}

TEST_CASE("Stein-Weiss projections for one dummy variable") {
    Context ctx{2, 5};  // u = block 1, v = block 2
    std::mt19937_64 rng(12);
    for (int deg_u : {1, 2}) {
        for (int round = 0; round < 2; ++round) {
            Poly phi = random_multihomogeneous(ctx, {2, 0, 0}, rng);
            const auto& hb = harmonic_basis(ctx, 1, deg_u);
            Poly f = phi * hb[round % hb.size()];

            Poly minus = two_var_projection(TwoVarKind::KMinus, f);
            Poly plus = two_var_projection(TwoVarKind::KPlus, f);
            Poly middle = two_var_projection(TwoVarKind::Middle, f);

            // Reconstruction: middle + S_v plus + C minus = <v,d_x> f.
            Poly nabla = apply_generator(Generator::inner_ud(2, 0), f);
            CHECK(middle + sp4_generator(Sp4Gen::S_v, plus) + sp4_generator(Sp4Gen::C, minus) ==
                  nabla);

            // Plus-projection output is harmonic in u.
            CHECK(apply_generator(Generator::inner_dd(1, 1), plus).is_zero());

            // The middle piece is H_{k,1}-valued: simplicial in (u,v). Its
            // annihilation by A and S_u pins both scalar normalisations.
            CHECK(apply_generator(Generator::inner_dd(1, 1), middle).is_zero());
            CHECK(apply_generator(Generator::inner_dd(2, 2), middle).is_zero());
            CHECK(apply_generator(Generator::inner_dd(1, 2), middle).is_zero());
            CHECK(apply_generator(Generator::inner_ud(1, 2), middle).is_zero());
            CHECK(sp4_generator(Sp4Gen::A, middle).is_zero());
            CHECK(sp4_generator(Sp4Gen::S_u, middle).is_zero());
        }
    }
    // k_minus vanishes when the trace annihilates the input.
    Poly h = mul(Poly::variable(ctx, var_u(1, 1)), Poly::variable(ctx, var_x(2)));
    REQUIRE(apply_generator(Generator::inner_dd(1, 0), h).is_zero());
    CHECK(two_var_projection(TwoVarKind::KMinus, h).is_zero());
}
