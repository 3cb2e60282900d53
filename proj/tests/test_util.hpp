#ifndef HSL_TEST_UTIL_HPP
#define HSL_TEST_UTIL_HPP

#include "hsl/poly.hpp"

#include <random>

namespace hsl::test {

// Random sparse polynomial with small integer coefficients, at most
// max_deg per variable occurrence budget spread over the context.
inline Poly random_poly(const Context& ctx, int terms, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> block(0, ctx.k);
    std::uniform_int_distribution<int> comp(1, ctx.m);
    std::uniform_int_distribution<int> nvars(0, 3);
    std::uniform_int_distribution<int> expd(1, max_deg);
    Poly p(ctx);
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Entry> entries;
        int nv = nvars(rng);
        for (int v = 0; v < nv; ++v)
            entries.push_back({var_u(block(rng), comp(rng)), expd(rng)});
        int c = coef(rng);
        if (c != 0) p.add_term(Monomial(std::move(entries)), c);
    }
    return p;
}

// Random polynomial multihomogeneous of the given per-block degrees.
inline Poly random_multihomogeneous(const Context& ctx, const std::vector<int>& degrees,
                                    std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> comp(1, ctx.m);
    Poly p(ctx);
    for (int t = 0; t < 12; ++t) {
        Monomial mo;
        for (int b = 0; b < int(degrees.size()); ++b)
            for (int d = 0; d < degrees[b]; ++d) mo = mo.mul(Monomial::var(var_u(b, comp(rng))));
        int c = coef(rng);
        if (c != 0) p.add_term(mo, c);
    }
    if (p.is_zero()) {
        Monomial mo;
        for (int b = 0; b < int(degrees.size()); ++b)
            for (int d = 0; d < degrees[b]; ++d) mo = mo.mul(Monomial::var(var_u(b, 1)));
        p.add_term(mo, 1);
    }
    return p;
}

}  // namespace hsl::test

#endif
