#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsl/operator_word.hpp"
#include "hsl/spaces.hpp"
#include "test_util.hpp"

using namespace hsl;
using hsl::test::random_multihomogeneous;
using hsl::test::random_poly;

TEST_CASE("generator actions") {
    Context ctx{2, 3};
    Poly u21 = Poly::variable(ctx, var_u(2, 1));
    CHECK(apply_generator(Generator::inner_ud(1, 2), u21) == Poly::variable(ctx, var_u(1, 1)));

    std::mt19937_64 rng(2);
    Poly p = random_multihomogeneous(ctx, {0, 3, 1}, rng);
    CHECK(apply_generator(Generator::euler(1), p) == p.scaled(3));
    CHECK(apply_generator(Generator::euler(0), p).is_zero());

    Poly x1u11 = mul(Poly::variable(ctx, var_x(1)), Poly::variable(ctx, var_u(1, 1)));
    CHECK(apply_generator(Generator::inner_dd(0, 1), x1u11) == Poly::constant(ctx, 1));
}

TEST_CASE("word application and linearity") {
    Context ctx{1, 3};
    std::mt19937_64 rng(15);
    Poly p = random_poly(ctx, 10, 3, rng);
    CHECK(OperatorWord::identity().apply(p) == p);
    CHECK(OperatorWord::zero().apply(p).is_zero());

    // [InnerUD(1,0)]^2 equals two successive single applications.
    OperatorWord raise = OperatorWord::gen(Generator::inner_ud(1, 0));
    OperatorWord twice = raise * raise;
    Poly q = mul(Poly::variable(ctx, var_x(1)), Poly::variable(ctx, var_x(2)));
    Poly brute = apply_generator(Generator::inner_ud(1, 0),
                                 apply_generator(Generator::inner_ud(1, 0), q));
    CHECK(twice.apply(q) == brute);

    Poly a = random_poly(ctx, 8, 3, rng);
    Poly b = random_poly(ctx, 8, 3, rng);
    OperatorWord w = raise * OperatorWord::gen(Generator::inner_dd(0, 0)) +
                     OperatorWord::gen(Generator::coord_mul(var_u(1, 2)), 3);
    CHECK(w.apply(a.scaled(2) + b.scaled(-7)) ==
          w.apply(a).scaled(2) + w.apply(b).scaled(-7));
}

TEST_CASE("scalar items evaluate on the multidegree at their position") {
    Context ctx{2, 4};
    // 1/(E1-E2+1) on a (.,1,1)-multidegree polynomial scales by 1.
    ScalarExpr s = ScalarExpr(Rat(1)) /
                   (ScalarExpr::euler(1) - ScalarExpr::euler(2) + ScalarExpr(Rat(1)));
    OperatorWord w = OperatorWord::scalar(s);
    std::mt19937_64 rng(4);
    Poly p = random_multihomogeneous(ctx, {0, 1, 1}, rng);
    CHECK(w.apply(p) == p);

    // A scalar with a pole at the input degree raises PoleError.
    ScalarExpr bad = ScalarExpr(Rat(1)) / (ScalarExpr::euler(1) - ScalarExpr::euler(2));
    CHECK_THROWS_AS(OperatorWord::scalar(bad).apply(p), PoleError);

    // Non-constant scalars reject inhomogeneous input.
    Poly inhom = add(Poly::variable(ctx, var_u(1, 1)),
                     mul(Poly::variable(ctx, var_u(1, 1)), Poly::variable(ctx, var_u(1, 2))));
    CHECK_THROWS_AS(w.apply(inhom), HomogeneityError);
}

TEST_CASE("eval_scalar examples") {
    // c1 = -4/(2E1+m-2) at E1=2, m=6.
    ScalarExpr c1 = ScalarExpr(Rat(-4)) /
                    (ScalarExpr(Rat(2)) * ScalarExpr::euler(1) + ScalarExpr::symbol_m() -
                     ScalarExpr(Rat(2)));
    MultiDegree d;
    d.degrees = {0, 2};
    CHECK(eval_scalar(c1, d, 6) == Rat(-1) / 2);

    // Gamma(z+1)/Gamma(z+1+s) = 1/(z+1) for s=1; at z=-5/2 this is -2/3.
    Rat z(-5, 2);
    CHECK(Rat(1) / (z + 1) == Rat(-2) / 3);

    MultiDegree d0;
    d0.degrees = {0, 0};
    CHECK_THROWS_AS(eval_scalar(c1, d0, 2), PoleError);
}

TEST_CASE("gl generators") {
    Context ctx{2, 5};
    std::mt19937_64 rng(8);
    Poly p = random_multihomogeneous(ctx, {0, 3, 1}, rng);
    CHECK(gl_generator(1, 1).apply(p) == p.scaled(Rat(3) + Rat(5) / 2));

    Poly q = random_multihomogeneous(ctx, {1, 1, 0}, rng);
    CHECK(gl_generator(2, 1).apply(q) == apply_generator(Generator::inner_ud(2, 1), q));

    // gl(k+1) acts as endomorphisms of the Howe harmonics.
    MultiDegree d;
    d.degrees = {1, 1, 0};
    SubspaceBasis howe = basis_howe(d, ctx);
    REQUIRE(howe.dim() > 0);
    MultiDegree d2;  // E_{21} moves one degree from block 1 to block 2
    d2.degrees = {1, 0, 1};
    SubspaceBasis howe2 = basis_howe(d2, ctx);
    MultiDegree d3;  // E_{01} moves one degree from block 1 to block 0
    d3.degrees = {2, 0, 0};
    SubspaceBasis howe3 = basis_howe(d3, ctx);
    for (const auto& h : howe.basis) {
        Poly img = gl_generator(2, 1).apply(h);
        if (!img.is_zero()) CHECK(membership(howe2, img));
        Poly img2 = gl_generator(0, 1).apply(h);
        if (!img2.is_zero()) CHECK(membership(howe3, img2));
    }
}

TEST_CASE("commutator [<d_v,d_x>, <v,d_x>] = Delta_x") {
    Context ctx{2, 4};  // block 2 plays the role of v
    std::mt19937_64 rng(21);
    for (int round = 0; round < 6; ++round) {
        Poly f = random_poly(ctx, 10, 3, rng);
        Poly ab = apply_generator(Generator::inner_dd(2, 0),
                                  apply_generator(Generator::inner_ud(2, 0), f));
        Poly ba = apply_generator(Generator::inner_ud(2, 0),
                                  apply_generator(Generator::inner_dd(2, 0), f));
        CHECK(ab - ba == apply_generator(Generator::inner_dd(0, 0), f));
    }
}

TEST_CASE("rewriting identities used in the special conformal computation") {
    Context ctx{2, 4};
    std::mt19937_64 rng(33);
    const int a = 1, j = 2;  // dummy block a, coordinate j
    auto DD = [](int i, int l, const Poly& p) {
        return apply_generator(Generator::inner_dd(i, l), p);
    };
    auto E = [](int i, const Poly& p) { return apply_generator(Generator::euler(i), p); };
    for (int round = 0; round < 6; ++round) {
        Poly f = random_poly(ctx, 12, 3, rng);

        // <d_a,d_x> |x|^2 d_{x_j} = 2<x,d_a> d_{x_j} + |x|^2 d_{x_j} <d_a,d_x>
        Poly lhs = DD(a, 0, apply_generator(Generator::inner_uu(0, 0), diff(f, var_x(j))));
        Poly rhs = apply_generator(Generator::inner_ud(0, a), diff(f, var_x(j))).scaled(2) +
                   apply_generator(Generator::inner_uu(0, 0), diff(DD(a, 0, f), var_x(j)));
        CHECK(lhs == rhs);

        // <d_a,d_x> x_j = d_{u_{a,j}} + x_j <d_a,d_x>
        lhs = DD(a, 0, mul_var(f, var_x(j)));
        rhs = diff(f, var_u(a, j)) + mul_var(DD(a, 0, f), var_x(j));
        CHECK(lhs == rhs);

        // <d_a,d_x> <u_a,x> d_{u_{a,j}} = (m+E_a+E_x) d_{u_{a,j}}
        //                                + <u_a,x> d_{u_{a,j}} <d_a,d_x>
        Poly g = diff(f, var_u(a, j));
        lhs = DD(a, 0, apply_generator(Generator::inner_uu(a, 0), g));
        rhs = g.scaled(ctx.m) + E(a, g) + E(0, g) +
              apply_generator(Generator::inner_uu(a, 0), diff(DD(a, 0, f), var_u(a, j)));
        CHECK(lhs == rhs);

        // <d_a,d_x> u_{a,j} <x,d_a> = d_{u_{a,j}} + <x,d_a> d_{x_j}
        //                           + u_{a,j} Delta_a + u_{a,j} <x,d_a> <d_a,d_x>
        Poly h = apply_generator(Generator::inner_ud(0, a), f);
        lhs = DD(a, 0, mul_var(h, var_u(a, j)));
        Poly rhs2 = diff(f, var_u(a, j));
        rhs2 += apply_generator(Generator::inner_ud(0, a), diff(f, var_x(j)));
        rhs2 += mul_var(DD(a, a, f), var_u(a, j));
        rhs2 += mul_var(apply_generator(Generator::inner_ud(0, a), DD(a, 0, f)), var_u(a, j));
        CHECK(lhs == rhs2);

        // For p != a: <d_a,d_x> <u_p,x> d_{u_{p,j}} = <u_p,d_a> d_{u_{p,j}}
        //                                           + <u_p,x> d_{u_{p,j}} <d_a,d_x>
        const int p = 2;
        Poly gp = diff(f, var_u(p, j));
        lhs = DD(a, 0, apply_generator(Generator::inner_uu(p, 0), gp));
        rhs = apply_generator(Generator::inner_ud(p, a), gp) +
              apply_generator(Generator::inner_uu(p, 0), diff(DD(a, 0, f), var_u(p, j)));
        CHECK(lhs == rhs);

        // For p != a: <d_a,d_x> u_{p,j} <x,d_p> = u_{p,j} <d_a,d_p>
        //                                       + u_{p,j} <x,d_p> <d_a,d_x>
        Poly hp = apply_generator(Generator::inner_ud(0, p), f);
        lhs = DD(a, 0, mul_var(hp, var_u(p, j)));
        rhs = mul_var(DD(a, p, f), var_u(p, j)) +
              mul_var(apply_generator(Generator::inner_ud(0, p), DD(a, 0, f)), var_u(p, j));
        CHECK(lhs == rhs);
    }
}
