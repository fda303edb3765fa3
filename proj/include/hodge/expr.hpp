#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hodge/errors.hpp"
#include "hodge/types.hpp"

namespace hodge {

enum class ExprKind {
  Constant,  // complex literal
  Coord,     // t^j
  CoordBar,  // conj(t^j)
  Sum,       // a + b
  Product,   // a * b
  Quotient,  // a / b
  Power,     // a ^ n, n a (possibly negative) integer
};

struct ExprNode;
class ScalarExpr;

namespace detail {
ScalarExpr make_expr(std::shared_ptr<const ExprNode> node);
}

// Immutable scalar expression over complex chart coordinates t^1..t^m and
// their conjugates. Trees share subexpressions; all constructors apply local
// constant folding and 0/1 absorption but no global simplification.
//
// Conjugation is implemented as a constructor that pushes through every node
// kind and lands on Coord/CoordBar leaves, so a fully built tree never stores
// a conjugation operator. "Structurally holomorphic" therefore means: no
// CoordBar leaf anywhere.
class ScalarExpr {
 public:
  ScalarExpr();  // the zero constant

  static ScalarExpr constant(Complex value);
  static ScalarExpr coord(int index);      // t^{index+1}, zero-based index
  static ScalarExpr coord_bar(int index);  // conj(t^{index+1})

  ExprKind kind() const;
  Complex constant_value() const;      // Constant only
  int coord_index() const;             // Coord/CoordBar only
  int exponent() const;                // Power only
  const ScalarExpr& lhs() const;       // Sum/Product/Quotient
  const ScalarExpr& rhs() const;       // Sum/Product/Quotient
  const ScalarExpr& base() const;      // Power

  bool is_zero() const;
  bool is_one() const;
  // True when the tree contains no conjugated coordinate leaf, which implies
  // that every antiholomorphic Wirtinger derivative vanishes identically.
  bool structurally_holomorphic() const;
  // Number of coordinates referenced: 1 + the highest coordinate index used,
  // 0 for constant expressions.
  int coord_count() const;
  std::size_t node_count() const;

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) {
    return !(a == b);
  }

 private:
  explicit ScalarExpr(std::shared_ptr<const ExprNode> node);
  std::shared_ptr<const ExprNode> node_;

  friend ScalarExpr detail::make_expr(std::shared_ptr<const ExprNode>);
};

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a);

// Integer power, negative exponents allowed; e^0 folds to 1.
ScalarExpr pow(const ScalarExpr& e, int n);

// Complex conjugate (structural push-through; see class comment).
ScalarExpr conj(const ScalarExpr& e);

// Evaluate at a point. The point must provide every coordinate the expression
// references; throws SingularEval on zero denominators or negative powers of
// zero. Chart-domain membership is checked by bundle-level evaluators, not
// here: a bare expression carries no domain.
Complex eval(const ScalarExpr& e, const BasePoint& t);

// Exact Wirtinger derivative d/dt^j (Holomorphic) or d/dtbar^j
// (Antiholomorphic), zero-based j. Rules: d_j t^k = delta_jk, d_j tbar^k = 0,
// dbar_j t^k = 0, dbar_j tbar^k = delta_jk, plus linearity, product, quotient
// and integer power rules.
ScalarExpr wirtinger(const ScalarExpr& e, int j, Wirtinger dir);

// Render the expression in the grammar accepted by parse_expr. Constants are
// printed with shortest-round-trip precision so print -> parse reproduces the
// tree exactly.
std::string to_string(const ScalarExpr& e);

// Parse an expression string. Grammar (whitespace-insensitive, '^' binds
// tighter than '*' and '/', which bind tighter than '+' and '-'):
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' signed-int)?
//   atom   := number | 'i' | var | 'conj' '(' expr ')' | '(' expr ')'
//   var    := 't' positive-int
//   number := decimal, optionally suffixed 'i' for an imaginary literal
//
// Throws ParseError carrying 1-based line/column and the expected-token set.
ScalarExpr parse_expr(std::string_view text);

}  // namespace hodge
