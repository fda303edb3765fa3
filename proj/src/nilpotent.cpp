#include "hodge/nilpotent.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Orthonormal (Euclidean) basis of the null space, singular values below
// kDeflationTol * max(1, sigma_max) counting as zero.
Mat nullspace_basis(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  const double thresh = kDeflationTol * std::max(1.0, top);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= thresh) ++null_dim;
  return svd.matrixV().rightCols(null_dim);
}

// Twice-iterated Gram-Schmidt insert against an orthonormal working set.
// Returns false when the candidate is dependent at tolerance tol; on
// success the normalized residual is appended (and copied to *out).
bool gs_insert(std::vector<Vec>& ortho, Vec v, double tol, Vec* out = nullptr) {
  const double scale = v.norm();
  if (scale <= 0.0) return false;
  v /= scale;
  for (int pass = 0; pass < 2; ++pass)
    for (const Vec& u : ortho) v -= u.dot(v) * u;
  if (v.norm() <= tol) return false;
  v.normalize();
  ortho.push_back(v);
  if (out != nullptr) *out = v;
  return true;
}

Mat columns_to_matrix(int rows, const std::vector<Vec>& cols) {
  Mat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return m;
}

}  // namespace

int GradedNilpotent::total_dim() const {
  int total = 0;
  for (const Mat& lvl : levels) total += static_cast<int>(lvl.cols());
  return total;
}

GradedNilpotent jordan_grading(const Mat& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("jordan_grading needs a square matrix");
  const int r = static_cast<int>(a.rows());

  const std::optional<int> k_opt = nilpotency_index(a);
  if (!k_opt)
    throw NotNilpotentError(
        "matrix is not nilpotent at working precision; no grading exists");
  const int k = *k_opt;
  const int q = k + 1;  // filtration length: ker(A^q) is everything

  std::vector<Mat> power;
  power.reserve(static_cast<std::size_t>(q) + 1);
  power.push_back(Mat::Identity(r, r));
  for (int j = 1; j <= q; ++j) power.push_back(power.back() * a);

  std::vector<Mat> kernel(static_cast<std::size_t>(q) + 1);
  kernel[0] = Mat(r, 0);
  for (int j = 1; j <= q; ++j)
    kernel[static_cast<std::size_t>(j)] =
        nullspace_basis(power[static_cast<std::size_t>(j)]);

  // Chains are discovered longest first: at stage j the generators of
  // length-j chains are whatever extends ker(A^{j-1}) plus the members of
  // longer chains passing through this stage to a basis of ker(A^j).
  struct ChainRec {
    std::vector<Vec> members;  // members[p] spans the chain at grade p
  };
  std::vector<ChainRec> chains;

  for (int j = q; j >= 1; --j) {
    std::vector<Vec> ortho;
    const Mat& lower = kernel[static_cast<std::size_t>(j - 1)];
    for (Eigen::Index c = 0; c < lower.cols(); ++c)
      gs_insert(ortho, lower.col(c), kDeflationTol);
    for (const ChainRec& ch : chains) {
      const int len = static_cast<int>(ch.members.size());
      if (!gs_insert(ortho, ch.members[static_cast<std::size_t>(len - j)],
                     kDeflationTol))
        throw Error("Jordan chain deflation failed: carried chain member "
                    "collapsed into the lower kernel");
    }

    const Mat& current = kernel[static_cast<std::size_t>(j)];
    for (Eigen::Index c = 0; c < current.cols(); ++c) {
      Vec generator;
      if (!gs_insert(ortho, current.col(c), kDeflationTol, &generator))
        continue;
      ChainRec ch;
      ch.members.push_back(generator);
      for (int p = 1; p < j; ++p) {
        Vec next = a * ch.members.back();
        const double nn = next.norm();
        if (nn <= 0.0)
          throw Error("Jordan chain deflation failed: chain died early");
        ch.members.push_back(next / nn);
      }
      chains.push_back(std::move(ch));
    }
  }

  GradedNilpotent out;
  out.order = k;
  out.levels.reserve(static_cast<std::size_t>(q));
  int total = 0;
  for (int p = 0; p <= k; ++p) {
    std::vector<Vec> cols;
    for (const ChainRec& ch : chains)
      if (static_cast<int>(ch.members.size()) > p)
        cols.push_back(ch.members[static_cast<std::size_t>(p)]);
    total += static_cast<int>(cols.size());
    out.levels.push_back(columns_to_matrix(r, cols));
  }
  if (total != r)
    throw Error("Jordan chain deflation failed: grading does not span");
  return out;
}

GradingCheck check_grading(const Mat& a, const HermitianForm& h,
                           const GradedNilpotent& grading) {
  GradingCheck out;
  const int k = grading.order;

  // h-normalized copies of all level bases.
  std::vector<Mat> unit(grading.levels.size());
  for (std::size_t p = 0; p < grading.levels.size(); ++p) {
    Mat lvl = grading.levels[p];
    for (Eigen::Index c = 0; c < lvl.cols(); ++c) {
      const double n = h.vec_norm(lvl.col(c));
      if (n > 0.0) lvl.col(c) /= n;
    }
    unit[p] = lvl;
  }

  for (std::size_t p = 0; p < unit.size(); ++p)
    for (std::size_t s = p + 1; s < unit.size(); ++s) {
      const Mat cross = unit[s].adjoint() * h.matrix() * unit[p];
      if (cross.size() > 0)
        out.orthogonality_defect =
            std::max(out.orthogonality_defect, cross.cwiseAbs().maxCoeff());
    }

  for (int p = 0; p <= k; ++p) {
    const Mat& lvl = unit[static_cast<std::size_t>(p)];
    for (Eigen::Index c = 0; c < lvl.cols(); ++c) {
      Vec y = a * lvl.col(c);
      if (p < k) {
        const Mat& next = grading.levels[static_cast<std::size_t>(p + 1)];
        if (next.cols() > 0) {
          const Mat gram = next.adjoint() * h.matrix() * next;
          const Vec rhs = next.adjoint() * (h.matrix() * y);
          y -= next * gram.ldlt().solve(rhs);
        }
      }
      out.strictness_defect = std::max(out.strictness_defect, h.vec_norm(y));
    }
  }
  return out;
}

std::optional<GradedNilpotent> orthogonal_strict_grading(
    const Mat& a, const HermitianForm& h) {
  const GradedNilpotent base = jordan_grading(a);
  const int r = static_cast<int>(a.rows());

  GradedNilpotent out;
  out.order = base.order;
  out.h_orthogonal = true;
  out.levels.reserve(base.levels.size());

  // Orthogonalize from the top grade down: corrections to level p live in
  // the span of the levels above it, which A pushes further up (or kills at
  // the top), so strictness survives whenever the pair admits a grading at
  // all. Rank 2 is the clean case: the top level is ker A = im A, the
  // grade-0 correction is annihilated, and reconstruction always succeeds.
  std::vector<Vec> flag;  // h-orthonormal basis of V_p + .. + V_k so far
  std::vector<Mat> rebuilt(base.levels.size());
  for (std::size_t rev = base.levels.size(); rev-- > 0;) {
    const Mat& lvl = base.levels[rev];
    std::vector<Vec> cols;
    for (Eigen::Index c = 0; c < lvl.cols(); ++c) {
      Vec v = lvl.col(c);
      for (int pass = 0; pass < 2; ++pass)
        for (const Vec& u : flag) v -= h.vec_inner(v, u) * u;
      const double nv = h.vec_norm(v);
      if (nv <= kDeflationTol) return std::nullopt;
      v /= nv;
      flag.push_back(v);
      cols.push_back(v);
    }
    rebuilt[rev] = columns_to_matrix(r, cols);
  }
  out.levels = std::move(rebuilt);

  const GradingCheck chk = check_grading(a, h, out);
  out.strictness_defect = chk.strictness_defect;
  if (chk.strictness_defect > kDeflationTol * std::max(1.0, a.norm()))
    return std::nullopt;
  return out;
}

Mat level_projector(const GradedNilpotent& grading, int p,
                    const HermitianForm& h) {
  const Mat& b = grading.levels[static_cast<std::size_t>(p)];
  const int r = static_cast<int>(b.rows());
  if (b.cols() == 0) return Mat::Zero(r, r);
  const Mat gram = b.adjoint() * h.matrix() * b;
  return b * gram.ldlt().solve((b.adjoint() * h.matrix()).eval());
}

std::vector<double> trace_profile(const Mat& a, const HermitianForm& h,
                                  const GradedNilpotent& grading) {
  std::vector<double> profile;
  profile.reserve(grading.levels.size());
  for (const Mat& b : grading.levels) {
    if (b.cols() == 0) {
      profile.push_back(0.0);
      continue;
    }
    const Mat ab = a * b;
    const Mat gram = b.adjoint() * h.matrix() * b;
    const Mat pulled = ab.adjoint() * h.matrix() * ab;
    profile.push_back(gram.ldlt().solve(pulled).trace().real());
  }
  return profile;
}

double ChainCheck::min_margin() const {
  return std::min({commutator_norm - m1, m1 - m2, m2 - m3});
}

ChainCheck commutator_chain_check(const Mat& a, const HermitianForm& h,
                                  const GradedNilpotent& grading) {
  ChainCheck out;
  out.profile = trace_profile(a, h, grading);

  const Mat astar = h_adjoint(a, h);
  out.commutator_norm = end_norm(astar * a - a * astar, h);

  const int k = grading.order;
  if (k == 0) return out;  // A vanishes; every bound is zero

  const double sqrt_r = std::sqrt(static_cast<double>(a.rows()));
  double sum_abs = 0.0;
  double prev = 0.0;
  double peak = 0.0;
  double sum = 0.0;
  for (int p = 0; p <= k; ++p) {
    const double ap = out.profile[static_cast<std::size_t>(p)];
    sum_abs += std::abs(ap - prev);
    prev = ap;
    sum += ap;
    if (p < k) peak = std::max(peak, ap);
  }
  out.m1 = sum_abs / sqrt_r;
  out.m2 = peak / sqrt_r;
  out.m3 = sum / (static_cast<double>(k) * sqrt_r);
  return out;
}

double hsc_bound_from_traces(const std::vector<double>& profile, int rank) {
  const int k = static_cast<int>(profile.size()) - 1;
  if (k <= 0) return 0.0;
  double sum = 0.0;
  for (double ap : profile) sum += ap;
  return -(sum * sum) /
         (static_cast<double>(k) * static_cast<double>(k) * rank);
}

}  // namespace hodge
