#include "hodge/hermitian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

namespace hodge {

HermitianForm::HermitianForm(Mat h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw SingularMetric("metric matrix must be square and non-empty");
  }
  h_ = 0.5 * (h + h.adjoint()).eval();
  llt_.compute(h_);
  if (llt_.info() != Eigen::Success) {
    throw SingularMetric("metric is not positive definite");
  }
}

Complex HermitianForm::vec_inner(const Vec& x, const Vec& y) const {
  return (y.adjoint() * h_ * x).value();
}

double HermitianForm::vec_norm(const Vec& x) const {
  return std::sqrt(std::max(0.0, vec_inner(x, x).real()));
}

Mat h_adjoint(const Mat& a, const HermitianForm& h) {
  return h.solve(Mat(a.adjoint() * h.matrix()));
}

Complex end_inner(const Mat& a, const Mat& b, const HermitianForm& h) {
  // Tr(A (h^{-1} B^H h)) with one solve.
  return (a * h.solve(Mat(b.adjoint() * h.matrix()))).trace();
}

double end_norm(const Mat& a, const HermitianForm& h) {
  return std::sqrt(std::max(0.0, end_inner(a, a, h).real()));
}

namespace {

Mat gram_matrix(const std::vector<Mat>& basis, const HermitianForm& h) {
  const int n = static_cast<int>(basis.size());
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Row i, column j: (basis_j, basis_i); this makes G c = rhs the normal
      // equations for coefficients c of the projection onto span(basis).
      g(i, j) = end_inner(basis[static_cast<std::size_t>(j)],
                          basis[static_cast<std::size_t>(i)], h);
    }
  }
  return g;
}

double condition_of(const Mat& g) {
  Eigen::JacobiSVD<Mat> svd(g);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 1.0;
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (smax == 0.0 || smin == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return smax / smin;
}

}  // namespace

double gram_condition(const std::vector<Mat>& basis, const HermitianForm& h) {
  if (basis.empty()) return 1.0;
  return condition_of(gram_matrix(basis, h));
}

GramProjection gram_project_complement(const Mat& a,
                                       const std::vector<Mat>& basis,
                                       const HermitianForm& h) {
  GramProjection out;
  if (basis.empty()) {
    out.residual = a;
    out.coefficients = Vec::Zero(0);
    out.condition = 1.0;
    return out;
  }
  const Mat g = gram_matrix(basis, h);
  out.condition = condition_of(g);
  if (!(out.condition <= kGramConditionLimit)) {
    throw DegenerateGram(
        "Gram matrix of the frame is numerically singular (condition " +
            std::to_string(out.condition) + ")",
        out.condition);
  }
  const int n = static_cast<int>(basis.size());
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs(i) = end_inner(a, basis[static_cast<std::size_t>(i)], h);
  }
  out.coefficients = g.fullPivLu().solve(rhs);
  out.residual = a;
  for (int j = 0; j < n; ++j) {
    out.residual -= out.coefficients(j) * basis[static_cast<std::size_t>(j)];
  }
  return out;
}

std::optional<int> nilpotency_index(const Mat& a) {
  const int r = static_cast<int>(a.rows());
  const double norm_a = a.norm();
  Mat power = a;
  double scale = std::max(1.0, norm_a);
  for (int k = 0; k < r; ++k) {
    // power == A^{k+1}, scale == max(1, ||A||^{k+1})
    if (power.norm() <= 1e-9 * scale) return k;
    if (k + 1 < r) {
      power = power * a;
      scale = std::max(1.0, scale * norm_a);
    }
  }
  return std::nullopt;
}

}  // namespace hodge
