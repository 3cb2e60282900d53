#ifndef HSL_OPERATOR_WORD_HPP
#define HSL_OPERATOR_WORD_HPP

#include "hsl/poly.hpp"
#include "hsl/scalar_expr.hpp"

#include <variant>

namespace hsl {

// The bilinear invariant operators of the symplectic algebra, the Euler
// operators, and single-coordinate multiplication/differentiation.
struct Generator {
    enum class Kind { InnerUU, InnerDD, InnerUD, Euler, CoordMul, CoordDiff };

    Kind kind;
    int i = 0, j = 0;   // block indices for the bilinear kinds
    VarRef v;           // for CoordMul / CoordDiff

    static Generator inner_uu(int i, int j) { return {Kind::InnerUU, i, j, {}}; }
    static Generator inner_dd(int i, int j) { return {Kind::InnerDD, i, j, {}}; }
    static Generator inner_ud(int i, int j) { return {Kind::InnerUD, i, j, {}}; }
    static Generator euler(int i) { return {Kind::Euler, i, i, {}}; }
    static Generator coord_mul(VarRef v) { return {Kind::CoordMul, 0, 0, v}; }
    static Generator coord_diff(VarRef v) { return {Kind::CoordDiff, 0, 0, v}; }
};

// <u_i,u_j>. , <d_i,d_j>, <u_i,d_j>, E_i, coordinate mul/diff.
Poly apply_generator(const Generator& g, const Poly& p);

// A formal sum of sequences of generators and Euler-coefficient scalars.
// Items apply right to left; every scalar item is evaluated on the
// multidegree of the intermediate polynomial at its position.
class OperatorWord {
  public:
    using Item = std::variant<Generator, ScalarExpr>;
    struct Sequence {
        Rat coef = 1;
        std::vector<Item> items;  // leftmost item applied last
    };

    OperatorWord() = default;

    static OperatorWord identity() { return OperatorWord(); }
    static OperatorWord zero();
    static OperatorWord gen(Generator g, Rat coef = 1);
    static OperatorWord scalar(ScalarExpr s);
    static OperatorWord sequence(std::vector<Item> items, Rat coef = 1);

    bool is_identity() const { return !zero_ && seqs_.empty(); }
    const std::vector<Sequence>& sequences() const { return seqs_; }

    // Composition: (A*B)(p) = A(B(p)).
    OperatorWord operator*(const OperatorWord& o) const;
    OperatorWord operator+(const OperatorWord& o) const;
    OperatorWord operator-(const OperatorWord& o) const;
    OperatorWord scaled(const Rat& c) const;

    Poly apply(const Poly& p) const;

  private:
    // The empty sequence list doubles as the identity; an explicit flag keeps
    // the zero word distinct.
    std::vector<Sequence> seqs_;
    bool zero_ = false;
};

Poly apply_word(const OperatorWord& w, const Poly& p);

// gl(k+1) generator: E_ii -> E_i + m/2, E_ij -> <u_i,d_j> for i != j.
OperatorWord gl_generator(int i, int j);

Rat eval_scalar(const ScalarExpr& s, const MultiDegree& d, int m);

}  // namespace hsl

#endif
