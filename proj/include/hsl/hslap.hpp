#ifndef HSL_HSLAP_HPP
#define HSL_HSLAP_HPP

#include "hsl/extremal.hpp"
#include "hsl/spaces.hpp"

#include <optional>
#include <random>

namespace hsl {

// Parameters of the higher spin Laplace operator D_lambda.
struct HSLaplaceSpec {
    int m = 0;
    int k = 0;
    Weight lambda;  // k entries, dominant

    Context context() const { return Context{k, m}; }
    void validate() const;
};

// Deliberate defects for the mutation-sensitivity tests.
enum class Mutation { None, C1PlusOne, DropProjectorFactor };

struct ApplyOptions {
    bool value_check = true;
    Mutation mutation = Mutation::None;
};

// c_p = -4/(2E_p+m-2p) * prod_{j<p} (2E_j+m-2j+2)/(2E_j+m-2j).
ScalarExpr c_coeff_expr(int p);
Rat c_coeff_value(int p, const HSLaplaceSpec& spec);

// Throws ValueSpaceError (naming the failing operator) unless f is
// H_lambda-valued: dummy degrees lambda and simplicial in the dummies.
void require_value_space(const HSLaplaceSpec& spec, const Poly& f);

// D_lambda f = pi_sp2k( Delta_x f + sum_p c_p <u_p,d_x><d_p,d_x> f ).
Poly apply_Dlambda(const HSLaplaceSpec& spec, const Poly& f, const ApplyOptions& opts = {});

// The second-order operator of the introduction for lambda = (2), k = 1.
Poly apply_D2_reference(const Poly& f, int m, bool value_check = true);

// Conformal generators.
struct ConformalGenerator {
    enum class Kind { Translation, Rotation, Dilation, SpecialConformal };
    Kind kind;
    int a = 1, b = 2;  // rotation plane (components), or translation/SCT index j = a
};

// The conjugated-translation word K_j = J d_{x_j} J.
OperatorWord sct_word(const Context& ctx, int j);
OperatorWord rotation_word(const Context& ctx, int a, int b);
Poly conformal_generator(const ConformalGenerator& g, const Poly& f);

// Exact invariance verifier.
enum class CheckKind { Rotation, Translation, Dilation, Sct };

struct CheckResult {
    std::string name;
    int trials = 0;
    bool pass = true;
    std::optional<Poly> counterexample;
    std::string detail;  // which index failed
};

struct VerifyReport {
    HSLaplaceSpec spec;
    std::uint64_t seed = 0;
    int x_degree = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

VerifyReport verify_invariance(const HSLaplaceSpec& spec, const std::vector<CheckKind>& checks,
                               int trials, int x_degree, std::uint64_t seed,
                               Mutation mutation = Mutation::None, bool value_check = true);

// Deterministic H_lambda-valued random field of the given x-degree.
Poly random_field(const HSLaplaceSpec& spec, int x_degree, std::mt19937_64& rng);

// Generalised gradients G_{e_j} = pi <u_j,d_x> and the adjoint G*_{e_j}.
enum class AdjointVariant { ProjectorForm, ExpandedForm };
Poly gradient(const HSLaplaceSpec& spec, int j, const Poly& f, bool value_check = true);
Poly gradient_adjoint(const HSLaplaceSpec& spec, int j, AdjointVariant variant, const Poly& f,
                      bool value_check = true);
OperatorWord gradient_adjoint_expanded_word(const HSLaplaceSpec& spec, int j);

// Stein-Weiss projections of grad f (modelled as <v,d_x>f) for a
// single-dummy field: blocks u=1, v=2 inside a k=2 context. f must be
// harmonic in u with no v dependence.
enum class TwoVarKind { KMinus, KPlus, Middle };
Poly two_var_projection(TwoVarKind kind, const Poly& f);

}  // namespace hsl

#endif
