#ifndef HSL_TRANSVECTOR_HPP
#define HSL_TRANSVECTOR_HPP

#include "hsl/hslap.hpp"
#include "hsl/spaces.hpp"

namespace hsl {

// Shift tuple (d_1,...,d_k) selecting one summand of the type A kernel.
struct ShiftTuple {
    std::vector<int> d;

    int total() const {
        int t = 0;
        for (int v : d) t += v;
        return t;
    }
    bool operator==(const ShiftTuple&) const = default;
};

// h_i = E_ii - i = E_i + m/2 - i (dummy blocks only, i = 1..k).
ScalarExpr h_expr(int i);

// Mickelsson generators z_{i0} (raising in u_i, lowering in x) and z_{0i}.
OperatorWord z_raise_word(int i, int k);
OperatorWord z_lower_word(int i, int k);
Poly z_raise(int i, const Poly& p);
Poly z_lower(int i, const Poly& p);

// Rescaled generators s_{i0} = E_{i0} + lower-order, s_{0i} likewise.
OperatorWord s_raise_word(int i, int k);
OperatorWord s_lower_word(int i, int k);
Poly s_raise(int i, const Poly& p);
Poly s_lower(int i, const Poly& p);

// Embedding factor rho_d = s_{10}^{d_1} ... s_{k0}^{d_k}; p must lie in
// H_mu with mu_i = lambda_i - d_i and admissible d.
Poly embedding_rho(const ShiftTuple& d, const Poly& p);

// All admissible shifts for (lambda0, lambda), lexicographic.
std::vector<ShiftTuple> admissible_shifts(int lambda0, const Weight& lambda);

Weight mu_of_shift(int lambda0, const Weight& lambda, const ShiftTuple& d);

struct Summand {
    ShiftTuple d;
    Weight mu;
    size_t dim = 0;
};

struct DecompositionReport {
    int lambda0 = 0;
    Weight lambda;
    int m = 0, k = 0;
    std::vector<Summand> summands;
    size_t total_dim = 0;
    size_t kernel_dim = 0;
    bool images_in_kernel = false;
    bool independent = false;
    bool span_equal = false;
    bool consistent = false;
    bool certified = false;  // large-instance path with modular rank certificates
    std::string diagnostics;
};

DecompositionReport decompose_typeA(int lambda0, const Weight& lambda, const Context& ctx);

// Brute-force dimension of the gl(k)-highest-weight space V(mu)+_nu inside
// the gl(k+1)-module generated by one element of H_mu.
int weight_space_dim(const Weight& mu, const Weight& nu, const Context& ctx);

// One nonzero element of H_mu (projector image of a tensor seed).
Poly simplicial_seed(const Weight& mu, const Context& ctx);

// The gl(k+1)-module generated by a highest weight vector, closed under the
// lowering operators; basis elements are multihomogeneous.
std::vector<Poly> lowering_closure(const Poly& hwv, size_t cap = 20000);

}  // namespace hsl

#endif
