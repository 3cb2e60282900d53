#ifndef HSL_EXTREMAL_HPP
#define HSL_EXTREMAL_HPP

#include "hsl/operator_word.hpp"

namespace hsl {

// One factor of the extremal projector for sp(2n) acting on the vector
// variables listed in `blocks`. Indices a,b are 1-based positions within
// that list; the Gamma-ratio coefficients depend on them.
struct ProjectorFactor {
    enum class Kind { Minus2Eps, MinusEpsEps, EpsMinusEps };

    Kind kind;
    int a = 1, b = 1;            // positions in the block list (a<b when mixed)
    int block_a = 0, block_b = 0;

    static ProjectorFactor minus2eps(int a, int block) {
        return {Kind::Minus2Eps, a, a, block, block};
    }
    static ProjectorFactor minus_eps_eps(int a, int b, int ba, int bb) {
        return {Kind::MinusEpsEps, a, b, ba, bb};
    }
    static ProjectorFactor eps_minus_eps(int i, int j, int bi, int bj) {
        return {Kind::EpsMinusEps, i, j, bi, bj};
    }
    std::string name() const;
};

// Truncating series of a single factor, exact, multidegree preserving.
Poly pi_factor(const ProjectorFactor& f, const Poly& p);

// The normal-ordered factor list for sp(2n) over the given blocks;
// apply right to left.
std::vector<ProjectorFactor> simplicial_factors(const std::vector<int>& blocks);

// Product of all factors (the extremal projector) over the given blocks.
Poly pi_blocks(const Poly& p, const std::vector<int>& blocks);

// pi_{sp(2k)} over the dummy blocks 1..k of p's context.
Poly pi_sp2k(const Poly& p);

// Same, with an optional list of factors to skip (mutation testing).
Poly pi_product(const Poly& p, const std::vector<ProjectorFactor>& factors);

// Fully expanded operator word of the projector at a fixed multidegree
// (series truncated by the degrees, scalars evaluated exactly).
OperatorWord pi_word_at(const std::vector<int>& blocks, const MultiDegree& d, int m);

// Single-block harmonic projection (sl(2) extremal projector).
Poly project_harmonic(const Poly& p, int block);

// pi_u[w]: apply the word, then project onto the harmonics of `block`.
Poly pi_harmonic_u(const OperatorWord& w, const Poly& p, int block);

// The displayed two-term form of pi_u[<u_j,d_x>] on u-harmonic input:
// <u,d_x> - |u|^2 <d_u,d_x> / (2E_u+m-4), Euler factor on the raised degree.
Poly pi_u_raising_two_term(const Poly& p, int block);

// Two-variable transvector generators over dummy blocks (bu, bv):
// C = pi[<u,v>.], A = pi[<d_u,d_v>], S_u = pi[<u,d_v>], S_v = pi[<v,d_u>],
// pi the product of the two single-variable harmonic projectors.
enum class Sp4Gen { S_u, S_v, A, C };
Poly sp4_generator(Sp4Gen g, const Poly& p, int bu = 1, int bv = 2);

}  // namespace hsl

#endif
