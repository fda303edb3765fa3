#pragma once

#include <vector>

#include "hodge/expr.hpp"
#include "hodge/types.hpp"

namespace hodge {

// Dense matrix of scalar expressions; the closed-form counterpart of Mat.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  ExprMatrix(int rows, int cols);

  static ExprMatrix zero(int rows, int cols) { return ExprMatrix(rows, cols); }
  static ExprMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ScalarExpr& operator()(int i, int j);
  const ScalarExpr& operator()(int i, int j) const;

  Mat eval(const BasePoint& t) const;
  ExprMatrix d(int j, Wirtinger dir) const;  // entrywise Wirtinger derivative
  ExprMatrix conj_transpose() const;
  // (M + M^H)/2 at the expression level; evaluates to an exactly Hermitian
  // matrix at every point.
  ExprMatrix hermitian_part() const;

  bool structurally_holomorphic() const;
  int coord_count() const;

  friend bool operator==(const ExprMatrix& a, const ExprMatrix& b);
  friend bool operator!=(const ExprMatrix& a, const ExprMatrix& b) {
    return !(a == b);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ScalarExpr> entries_;
};

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix operator*(const ScalarExpr& s, const ExprMatrix& m);

}  // namespace hodge
