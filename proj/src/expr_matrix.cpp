#include "hodge/expr_matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace hodge {

ExprMatrix::ExprMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  assert(rows >= 0 && cols >= 0);
}

ExprMatrix ExprMatrix::identity(int n) {
  ExprMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = ScalarExpr::constant(Complex(1.0, 0.0));
  }
  return m;
}

ScalarExpr& ExprMatrix::operator()(int i, int j) {
  assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

const ScalarExpr& ExprMatrix::operator()(int i, int j) const {
  assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

Mat ExprMatrix::eval(const BasePoint& t) const {
  Mat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out(i, j) = hodge::eval((*this)(i, j), t);
    }
  }
  return out;
}

ExprMatrix ExprMatrix::d(int j, Wirtinger dir) const {
  ExprMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      out(r, c) = wirtinger((*this)(r, c), j, dir);
    }
  }
  return out;
}

ExprMatrix ExprMatrix::conj_transpose() const {
  ExprMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      out(c, r) = conj((*this)(r, c));
    }
  }
  return out;
}

ExprMatrix ExprMatrix::hermitian_part() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("hermitian_part requires a square matrix");
  }
  const ScalarExpr half = ScalarExpr::constant(Complex(0.5, 0.0));
  ExprMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      out(r, c) = half * ((*this)(r, c) + conj((*this)(c, r)));
    }
  }
  return out;
}

bool ExprMatrix::structurally_holomorphic() const {
  for (const auto& e : entries_) {
    if (!e.structurally_holomorphic()) return false;
  }
  return true;
}

int ExprMatrix::coord_count() const {
  int n = 0;
  for (const auto& e : entries_) n = std::max(n, e.coord_count());
  return n;
}

bool operator==(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return false;
  }
  return true;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  ExprMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      out(r, c) = a(r, c) + b(r, c);
    }
  }
  return out;
}

ExprMatrix operator*(const ScalarExpr& s, const ExprMatrix& m) {
  ExprMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out(r, c) = s * m(r, c);
    }
  }
  return out;
}

}  // namespace hodge
