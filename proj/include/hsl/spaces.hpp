#ifndef HSL_SPACES_HPP
#define HSL_SPACES_HPP

#include "hsl/linalg.hpp"
#include "hsl/poly.hpp"

#include <functional>
#include <memory>
#include <unordered_map>

namespace hsl {

// Indexed monomial coordinate system for one multidegree.
struct MonomialIndex {
    std::vector<Monomial> list;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> pos;

    std::uint32_t size() const { return std::uint32_t(list.size()); }
};

// All monomials of exactly the given per-block degrees, canonical order.
std::vector<Monomial> basis_monomials(const MultiDegree& d, const Context& ctx);
MonomialIndex monomial_index(const MultiDegree& d, const Context& ctx);

// Exact coordinates of p in an index; throws if a monomial is missing.
IVec poly_to_ivec(const Poly& p, const MonomialIndex& idx);
Poly ivec_to_poly(const IVec& v, const MonomialIndex& idx, const Context& ctx);

// An exact basis of a finite-dimensional polynomial space together with the
// names of its defining constraints. Basis vectors are integer-normalized.
struct SubspaceBasis {
    Context ctx;
    std::vector<std::string> constraints;
    std::vector<Poly> basis;
    bool certified = false;  // built by the projector-span engine

    size_t dim() const { return basis.size(); }
};

// Exact rank/membership helpers on lists of polynomials (shared multidegree
// is not required; coordinates are keyed by monomial).
class PolyEchelon {
  public:
    explicit PolyEchelon(Context ctx) : ctx_(ctx) {}
    bool insert(const Poly& p);     // true if rank grew
    bool contains(const Poly& p) const;
    size_t rank() const { return ech_.rank(); }

  private:
    Context ctx_;
    ExactEchelon ech_;
    mutable std::unordered_map<Monomial, std::uint32_t, MonomialHash> coord_;
    mutable std::vector<Monomial> coord_list_;
    IVec to_vec(const Poly& p, bool grow) const;
};

bool membership(const SubspaceBasis& b, const Poly& p);
bool span_equal(const SubspaceBasis& a, const SubspaceBasis& b);
size_t span_rank(const Context& ctx, const std::vector<Poly>& polys);

// Right-nullspace of an explicit matrix (spec surface; used by tests/oracles).
struct ExactMatrix {
    std::uint32_t rows = 0, cols = 0;
    std::vector<IVec> row_data;
};
std::vector<IVec> nullspace(const ExactMatrix& a);

// Restrict `start` to the joint kernel of the named operators (exact staged
// elimination; the constraint matrix maps the current basis to the monomial
// basis of each operator target).
using PolyOp = std::function<Poly(const Poly&)>;
struct NamedOp {
    std::string name;
    PolyOp op;
};
std::vector<Poly> restrict_to_kernel(const Context& ctx, std::vector<Poly> start,
                                     const std::vector<NamedOp>& ops);

// Harmonics of one block: kernel of the block Laplacian on degree-d monomials.
const std::vector<Poly>& harmonic_basis(const Context& ctx, int block, int degree);

// Simplicial harmonics H_mu over `count` consecutive blocks starting at
// `first_block` (weight entries align with those blocks). Dominance required.
SubspaceBasis basis_simplicial(const Weight& mu, const Context& ctx, int first_block = 0);

// Howe harmonics at a full multidegree (one entry per block 0..k).
SubspaceBasis basis_howe(const MultiDegree& d, const Context& ctx);

// Type A kernel: P_l0(R^m, H_lambda) cut by Delta_x and all <d_i,d_x>.
SubspaceBasis basis_typeA(int lambda0, const Weight& lambda, const Context& ctx);

// Dimension of the type A kernel by exact rank only (no basis materialised);
// used for large instances where the 10^4-dimensional basis is not needed.
size_t typeA_kernel_dim(int lambda0, const Weight& lambda, const Context& ctx);

// Names of the defining operators of the type A kernel, with appliers
// (value-space constraints + the Howe-type conditions). Used for exact
// membership-by-annihilation checks.
std::vector<NamedOp> typeA_constraints(const Context& ctx);
std::vector<NamedOp> simplicial_constraints(const Context& ctx, int first_block, int count);

// Certified engine pieces (exact conclusions, modular rank certificates).
struct CertifiedDim {
    size_t dim;
    std::uint32_t prime;
};

// Exact dim of ker(ops restricted to span(start)) with a modular-rank upper
// bound + an explicitly verified in-kernel family as lower bound. The family
// is returned as the basis. Falls back to the exact engine if certification
// fails with every prime.
SubspaceBasis certified_simplicial(const Weight& mu, const Context& ctx, int first_block = 0);

// Threshold (columns of the staged tensor) above which basis_simplicial
// switches to the certified engine.
std::size_t exact_column_limit();

// Rewrite the basis as the reduced row echelon basis of its span, pivots in
// canonical monomial order (unique per subspace; used before JSON export).
void canonicalize_basis(SubspaceBasis& b);

// Modular lower bound for the rank of the stacked operator matrix over
// lazily produced columns. Sound: never exceeds the rational rank. Throws
// PoleError if the prime divides a denominator of some entry.
size_t modp_operator_rank(size_t ncols, const std::function<Poly(size_t)>& column,
                          const std::vector<NamedOp>& ops, std::uint32_t prime,
                          std::uint64_t salt);

}  // namespace hsl

#endif
