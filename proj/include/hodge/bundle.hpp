#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/chart.hpp"
#include "hodge/errors.hpp"
#include "hodge/expr_matrix.hpp"
#include "hodge/hermitian.hpp"
#include "hodge/types.hpp"

namespace hodge {

struct SampleSpec {
  int count = 100;
  std::uint64_t seed = 7;

  friend bool operator==(const SampleSpec& a, const SampleSpec& b) {
    return a.count == b.count && a.seed == b.seed;
  }
};

// A Higgs bundle presented in closed form over one coordinate chart:
// m commuting holomorphic Higgs field components theta_1..theta_m (r x r
// expression matrices) and a positive Hermitian fibre metric h. The metric is
// Hermitian-symmetrized at the expression level on construction, so h(t) is
// exactly Hermitian pointwise. All entrywise Wirtinger derivatives needed by
// the geometry (d theta, dh, dbar h, d dbar h) are precomputed symbolically
// once and cached; the object is immutable afterwards.
class HiggsBundleChart {
 public:
  HiggsBundleChart(std::string name, int base_dim, int rank,
                   std::vector<ExprMatrix> theta, ExprMatrix h,
                   ChartDomain domain, SampleSpec samples);

  const std::string& name() const { return name_; }
  int base_dim() const { return m_; }
  int rank() const { return r_; }
  const ExprMatrix& theta(int j) const;
  const std::vector<ExprMatrix>& theta() const { return theta_; }
  const ExprMatrix& metric() const { return h_; }
  // The metric exactly as authored, before symmetrization. Serialization and
  // equality work on this form so files round-trip byte for byte.
  const ExprMatrix& raw_metric() const { return raw_h_; }
  const ChartDomain& domain() const { return domain_; }
  const SampleSpec& samples() const { return samples_; }

  // Cached symbolic derivatives.
  const ExprMatrix& dtheta(int j, int l) const;  // d_l theta_j
  const ExprMatrix& dh(int l) const;             // d_l h
  const ExprMatrix& dh_bar(int l) const;         // dbar_l h
  const ExprMatrix& d2h(int l, int k) const;     // dbar_k d_l h

  std::vector<BasePoint> sample_points() const;
  std::vector<BasePoint> sample_points(int count, std::uint64_t seed) const;

  friend bool operator==(const HiggsBundleChart& a, const HiggsBundleChart& b);

 private:
  std::string name_;
  int m_;
  int r_;
  std::vector<ExprMatrix> theta_;
  ExprMatrix raw_h_;
  ExprMatrix h_;
  ChartDomain domain_;
  SampleSpec samples_;

  std::vector<ExprMatrix> dtheta_;  // [j*m + l]
  std::vector<ExprMatrix> dh_;
  std::vector<ExprMatrix> dh_bar_;
  std::vector<ExprMatrix> d2h_;  // [l*m + k]
};

// Structural and sampled numeric validation. Never throws on a mathematical
// failure; everything lands in the report.
struct ValidationReport {
  bool theta_holomorphic = true;
  double max_commutator = 0.0;       // max ||[theta_j, theta_l]|| over samples
  double max_hermitian_defect = 0.0; // max ||h - h^H|| of the *raw* metric
  bool metric_positive = true;
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate(const HiggsBundleChart& bundle,
                          const std::vector<BasePoint>& points);

// All numeric per-point data the geometry needs, evaluated once.
class PointFrame {
 public:
  PointFrame(const HiggsBundleChart& bundle, const BasePoint& t);

  const HiggsBundleChart& bundle() const { return *bundle_; }
  const BasePoint& point() const { return t_; }
  int base_dim() const { return m_; }
  int rank() const { return r_; }

  const HermitianForm& form() const { return form_; }
  const Mat& theta(int j) const { return theta_[static_cast<std::size_t>(j)]; }
  // theta_j^* = h^{-1} theta_j^H h
  const Mat& theta_adj(int j) const {
    return theta_adj_[static_cast<std::size_t>(j)];
  }
  const Mat& gamma(int j) const { return gamma_[static_cast<std::size_t>(j)]; }
  const Mat& gamma_bar(int j) const {
    return gamma_bar_[static_cast<std::size_t>(j)];
  }
  const Mat& dtheta(int j, int l) const {
    return dtheta_[static_cast<std::size_t>(j * m_ + l)];
  }

  // Chern curvature of (H, h): Theta^h_{j kbar} = -dbar_k (h^{-1} d_j h).
  Mat chern(int j, int k) const;
  // h-adjoint at this point.
  Mat adjoint(const Mat& a) const { return h_adjoint(a, form_); }
  // (1,0) part of the End(H) Chern connection applied to a section with
  // value `value` and coordinate derivative `dvalue` at this point.
  Mat end_connection_d(int j, const Mat& value, const Mat& dvalue) const;

 private:
  const HiggsBundleChart* bundle_;
  BasePoint t_;
  int m_;
  int r_;
  HermitianForm form_;
  std::vector<Mat> theta_;
  std::vector<Mat> theta_adj_;
  std::vector<Mat> dtheta_;
  std::vector<Mat> dh_;
  std::vector<Mat> dh_bar_;
  std::vector<Mat> d2h_;
  std::vector<Mat> gamma_;
  std::vector<Mat> gamma_bar_;
};

struct Admissibility {
  bool admissible = false;
  double gram_condition = 0.0;
};

// The Higgs field is admissible at t when v -> theta_v(t) is injective,
// decided through the end_inner Gram matrix of {theta_1(t),..,theta_m(t)}
// against the DegenerateGram condition threshold.
Admissibility is_admissible(const HiggsBundleChart& bundle, const BasePoint& t);
Admissibility is_admissible(const PointFrame& frame);

// Smallest k such that every product theta_{i_1}...theta_{i_{k+1}} vanishes
// at all supplied points (indices non-decreasing; components commute).
// nullopt when products of length rank are still nonzero.
std::optional<int> nilpotency_order(const HiggsBundleChart& bundle,
                                    const std::vector<BasePoint>& points);

Mat chern_curvature_h(const HiggsBundleChart& bundle, const BasePoint& t,
                      int j, int k);

// Deviation of (h, theta) from flatness at t: the max over the (1,1) blocks
// ||Theta^h_{j kbar} - [theta_k^*, theta_j]|| and the (2,0) blocks
// ||d_j theta_k + [Gamma_j, theta_k] - d_k theta_j - [Gamma_k, theta_j]||
// (j < k). The (0,2) block is the h-adjoint of the (2,0) block and carries
// the same norm.
double flatness_residual(const HiggsBundleChart& bundle, const BasePoint& t);
double flatness_residual(const PointFrame& frame);

// D^{End}_j A = d_j A + [Gamma_j, A] evaluated at t.
Mat end_connection_derivative(const HiggsBundleChart& bundle, int j,
                              const ExprMatrix& a, const BasePoint& t);

}  // namespace hodge
