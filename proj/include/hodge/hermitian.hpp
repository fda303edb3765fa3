#pragma once

#include <optional>
#include <vector>

#include <Eigen/Cholesky>

#include "hodge/errors.hpp"
#include "hodge/types.hpp"

namespace hodge {

// Gram matrices with a condition number beyond this are treated as singular.
inline constexpr double kGramConditionLimit = 1e12;

// A positive-definite Hermitian form on the fibre. The input matrix is forced
// Hermitian by (h + h^H)/2 before the Cholesky factorization; failure of the
// factorization reports SingularMetric.
class HermitianForm {
 public:
  explicit HermitianForm(Mat h);

  int dim() const { return static_cast<int>(h_.rows()); }
  const Mat& matrix() const { return h_; }

  Mat solve(const Mat& rhs) const { return llt_.solve(rhs); }  // h^{-1} rhs
  Vec solve(const Vec& rhs) const { return llt_.solve(rhs); }

  // <x, y>_h = y^H h x (linear in x, conjugate-linear in y).
  Complex vec_inner(const Vec& x, const Vec& y) const;
  double vec_norm(const Vec& x) const;

 private:
  Mat h_;
  Eigen::LLT<Mat> llt_;
};

// h-adjoint of an endomorphism: A* = h^{-1} A^H h, the unique endomorphism
// with <A x, y>_h = <x, A* y>_h.
Mat h_adjoint(const Mat& a, const HermitianForm& h);

// Inner product on End(H) induced by h: (A, B) = Tr(A B*). Linear in A,
// conjugate-linear in B, positive definite.
Complex end_inner(const Mat& a, const Mat& b, const HermitianForm& h);
double end_norm(const Mat& a, const HermitianForm& h);

// Condition number (sigma_max / sigma_min) of the end_inner Gram matrix of a
// family of endomorphisms; +inf when the family is exactly degenerate.
double gram_condition(const std::vector<Mat>& basis, const HermitianForm& h);

struct GramProjection {
  Mat residual;       // component of a orthogonal to span(basis)
  Vec coefficients;   // a = residual + sum_j coefficients[j] basis[j]
  double condition;   // condition number of the Gram matrix used
};

// Orthogonal (w.r.t. end_inner) projection of a onto the complement of
// span(basis). Throws DegenerateGram when the Gram matrix condition number
// exceeds kGramConditionLimit.
GramProjection gram_project_complement(const Mat& a,
                                       const std::vector<Mat>& basis,
                                       const HermitianForm& h);

// Smallest k >= 0 with ||A^{k+1}|| <= 1e-9 * max(1, ||A||^{k+1}) (Frobenius),
// i.e. A^{k+1} vanishes at working precision. Search stops at k = r - 1: an
// r x r nilpotent matrix has A^r = 0, so failure there means not nilpotent
// and nullopt is returned.
std::optional<int> nilpotency_index(const Mat& a);

}  // namespace hodge
