#ifndef HSL_POLY_HPP
#define HSL_POLY_HPP

#include "hsl/basics.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace hsl {

// Sparse exponent vector. Entries are sorted by variable id and strictly positive.
class Monomial {
  public:
    using Entry = std::pair<VarRef, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial one() { return Monomial(); }
    static Monomial var(VarRef v, int exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int exponent(VarRef v) const;
    int block_degree(int block) const;
    int total_degree() const;
    MultiDegree multidegree(int nblocks) const;

    Monomial mul(const Monomial& other) const;
    // During differentiation exponents drop; returns nullopt if v is absent.
    std::optional<Monomial> divide_var(VarRef v) const;

    bool operator==(const Monomial&) const = default;
    size_t hash() const;

  private:
    std::vector<Entry> entries_;
};

// Canonical term order: graded by per-block degree tuple (block 0 first),
// then lexicographic on the exponent vector with larger exponents first.
// Used both for map storage and for deterministic printing.
struct MonomialOrder {
    int nblocks;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    size_t operator()(const Monomial& mo) const { return mo.hash(); }
};

// Multi-variable polynomial over exact rationals in the (k+1) vector
// variables of a Context. Canonical form: no zero coefficients stored.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    explicit Poly(Context ctx);
    static Poly zero(Context ctx) { return Poly(ctx); }
    static Poly constant(Context ctx, const Rat& c);
    static Poly monomial(Context ctx, Monomial mo, const Rat& c);
    static Poly variable(Context ctx, VarRef v) {
        return monomial(ctx, Monomial::var(v), 1);
    }

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& mo, const Rat& c);

    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator-() const;
    Poly operator*(const Poly& q) const;
    bool operator==(const Poly& q) const;

    Poly scaled(const Rat& c) const;

    Rat coefficient(const Monomial& mo) const;

  private:
    Context ctx_;
    TermMap terms_;

    void check_context(const Poly& q) const;
};

Poly add(const Poly& p, const Poly& q);
Poly scale(const Rat& c, const Poly& p);
Poly mul(const Poly& p, const Poly& q);

// Exact partial derivative.
Poly diff(const Poly& p, VarRef v);

// Multiplication by a single coordinate.
Poly mul_var(const Poly& p, VarRef v);

// Per-block degree tuple of a multihomogeneous polynomial.
struct DegreeReport {
    enum class Kind { Zero, Homogeneous, Inhomogeneous } kind;
    MultiDegree degree;             // valid when Homogeneous
    std::vector<int> offending;     // blocks with mixed degree when Inhomogeneous
};
DegreeReport multidegree(const Poly& p);

// Throws HomogeneityError unless p is multihomogeneous and nonzero.
MultiDegree require_multidegree(const Poly& p, const char* who);

// Fischer pairing [p,q] = p(d)q |_0. Coefficients are rational, so no
// conjugation applies; equals sum over shared monomials of
// c_p * c_q * prod(e!) over the exponents e.
Rat fischer(const Poly& p, const Poly& q);

// Text grammar (see README): "3/2*x1^2*u1_3 - u2_1".
Poly parse_poly(const std::string& text, Context ctx);
std::string format_poly(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hsl

#endif
