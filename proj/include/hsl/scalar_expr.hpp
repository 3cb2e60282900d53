#ifndef HSL_SCALAR_EXPR_HPP
#define HSL_SCALAR_EXPR_HPP

#include "hsl/basics.hpp"

#include <map>
#include <string>
#include <vector>

namespace hsl {

// Integer polynomial in the symbols m, E0, E1, ... Symbol id 0 is m,
// id i+1 is E_i. Exponent vectors are trimmed of trailing zeros.
class SymPoly {
  public:
    using Mono = std::vector<unsigned char>;

    SymPoly() = default;
    static SymPoly constant(Int c);
    static SymPoly symbol_m();
    static SymPoly euler(int block);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly&) const = default;

    void add_term(Mono mo, const Int& c);
    Rat eval(const MultiDegree& d, int m) const;
    std::string to_string() const;

  private:
    std::map<Mono, Int> terms_;
};

// Rational function of the Euler symbols and m, kept in factored form so
// projector coefficients print without expansion.
// Evaluation on a multidegree substitutes E_i -> d_i and m -> m.
class ScalarExpr {
  public:
    ScalarExpr() : coef_(1) {}
    explicit ScalarExpr(Rat c) : coef_(std::move(c)) {}

    static ScalarExpr constant(const Rat& c) { return ScalarExpr(c); }
    static ScalarExpr from_poly(SymPoly p);
    static ScalarExpr euler(int block) { return from_poly(SymPoly::euler(block)); }
    static ScalarExpr symbol_m() { return from_poly(SymPoly::symbol_m()); }

    bool is_constant() const { return num_.empty() && den_.empty(); }
    const Rat& constant_part() const { return coef_; }

    ScalarExpr operator*(const ScalarExpr& o) const;
    ScalarExpr operator/(const ScalarExpr& o) const;
    ScalarExpr operator+(const ScalarExpr& o) const;
    ScalarExpr operator-(const ScalarExpr& o) const;

    // Exact evaluation; throws PoleError when a denominator factor vanishes.
    Rat eval(const MultiDegree& d, int m) const;

    std::string to_string() const;
    static ScalarExpr parse(const std::string& text);

  private:
    Rat coef_;
    std::vector<SymPoly> num_;
    std::vector<SymPoly> den_;

    std::pair<SymPoly, SymPoly> expanded() const;  // (num, den) with coef folded in
};

}  // namespace hsl

#endif
