#ifndef HSL_LINALG_HPP
#define HSL_LINALG_HPP

#include "hsl/basics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hsl {

// Sparse integer vector, indices strictly increasing, content-normalized on
// demand. The exact elimination works fraction-free on these rows.
struct IVec {
    std::vector<std::pair<std::uint32_t, Int>> e;

    bool empty() const { return e.empty(); }
    std::uint32_t lead() const { return e.front().first; }
    const Int& lead_coef() const { return e.front().second; }
    void normalize_content();
};

// r <- (a * r + b * piv), merged by index; zero entries dropped.
IVec axpy(const Int& a, const IVec& r, const Int& b, const IVec& piv);

// Cancels the leading entry of r against piv (same lead), fraction-free.
IVec eliminate_lead(const IVec& r, const IVec& piv);

// Row echelon structure keyed by leading index (smallest column first).
class ExactEchelon {
  public:
    // Reduces row against the basis; inserts the residual if nonzero.
    // Returns true when the rank grew.
    bool insert(IVec row);
    // Reduce without inserting; the returned residual is empty iff the
    // vector lies in the row space.
    IVec reduce(IVec row) const;

    size_t rank() const { return rows_.size(); }
    const std::map<std::uint32_t, IVec>& rows() const { return rows_; }

    // Full back-substitution: every row's tail is cleared at all pivot
    // columns. After this, rows() is the (integer-scaled) RREF.
    void back_substitute();

  private:
    std::map<std::uint32_t, IVec> rows_;
};

// Exact right-nullspace of the matrix with the given constraint rows over
// columns 0..ncols-1. The result is the canonical reduced basis: pivots of
// the RREF in increasing column order, one basis vector per free column,
// each integer-normalized with positive entry at its free column.
std::vector<IVec> nullspace(const std::vector<IVec>& rows, std::uint32_t ncols);

size_t rank_of(const std::vector<IVec>& rows);

// Reduced row echelon basis of the span of the given vectors (canonical for
// the subspace; used to make exported bases deterministic).
std::vector<IVec> rref_span(const std::vector<IVec>& vecs);

// ---------------------------------------------------------------------------
// Modular toolkit. Only used to certify *lower* bounds on ranks (a modular
// rank never exceeds the rational rank), so every conclusion drawn from it
// is exact. Primes are ~2^20 so accumulation in uint64 needs no mid-loop
// reductions.

std::uint32_t modular_prime(int index);

struct SketchSpec {
    std::uint32_t dim = 0;   // sketched coordinate count
    std::uint64_t salt = 0;  // deterministic seed
    int slots = 8;           // scatter slots per source coordinate
};

// Dense mod-p echelon with unit leading entries.
class DenseModpEchelon {
  public:
    DenseModpEchelon(std::uint32_t p, std::uint32_t ncols);

    bool insert(std::vector<std::uint64_t>&& row);
    size_t rank() const { return rows_.size(); }
    std::uint32_t cols() const { return ncols_; }
    std::uint32_t prime() const { return p_; }

  private:
    std::uint32_t p_, ncols_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::int32_t> row_of_lead_;
};

// Scatter a sparse integer row into a dense sketched mod-p row.
std::vector<std::uint64_t> sketch_row(const IVec& v, const SketchSpec& spec, std::uint32_t p);

}  // namespace hsl

#endif
