#pragma once

#include <vector>

#include "hodge/bundle.hpp"
#include "hodge/types.hpp"

namespace hodge {

// Hodge (semi-)metric on the base chart at t:
//   G_{j kbar} = (theta_j, theta_k)_{end} = Tr(theta_j h^{-1} theta_k^H h),
// Hermitian-symmetrized. Positive definite exactly at admissible points.
Mat hodge_metric(const HiggsBundleChart& bundle, const BasePoint& t);
Mat hodge_metric(const PointFrame& frame);

// Exact first and mixed second Wirtinger derivatives of the Hodge metric,
// computed by matrix calculus from the cached symbolic derivatives of h and
// theta (numeric inverses via d(M^{-1}) = -M^{-1} (dM) M^{-1}); no finite
// differences are involved.
struct MetricDerivatives {
  Mat g;                           // G at t (m x m, Hermitian)
  std::vector<Mat> dg;             // dg[l] = d_l G
  std::vector<Mat> dg_bar;         // dg_bar[k] = dbar_k G
  std::vector<std::vector<Mat>> d2g;  // d2g[l][k] = dbar_k d_l G
};
MetricDerivatives hodge_metric_derivatives(const PointFrame& frame);

// Max over j,k,l of |d_l G_{j kbar} - d_j G_{l kbar}|; identically zero in
// one base dimension, and zero for flat bundles (the metric is Kahler).
double kahler_residual(const HiggsBundleChart& bundle, const BasePoint& t);
double kahler_residual(const PointFrame& frame);

enum class CurvatureRoute { Direct, Subbundle, FlatFormula };

// Full curvature tensor of the Chern connection of (T_B, G) at a point:
//   R[j][k][l][p] = (Theta_{j kbar} dt_l, dt_p)_H
// with the endomorphism-valued curvature Theta_{j kbar} = -dbar_k(G^{-1} d_j G)
// in the coordinate frame and the pairing (u, v)_H = sum G_{p qbar} u^p
// conj(v^q).
class BaseCurvatureSample {
 public:
  BaseCurvatureSample(int m, Mat g, CurvatureRoute route);

  int base_dim() const { return m_; }
  const Mat& metric() const { return g_; }
  CurvatureRoute route() const { return route_; }

  Complex& at(int j, int k, int l, int p);
  Complex at(int j, int k, int l, int p) const;

  // (u, v)_H under the metric at this point.
  Complex pair(const Vec& u, const Vec& v) const;

 private:
  int m_;
  Mat g_;
  CurvatureRoute route_;
  std::vector<Complex> r_;
};

// Route 1: symbolic-derivative curvature of G. Throws DegenerateGram at
// non-admissible points (G not positive definite).
BaseCurvatureSample base_curvature_direct(const PointFrame& frame);
BaseCurvatureSample base_curvature_direct(const HiggsBundleChart& bundle,
                                          const BasePoint& t);

// Route 2: T_B as a holomorphic subbundle of End(H):
//   (Theta_{j kbar} v, w)_H = ([Theta^h_{j kbar}, theta_v], theta_w)
//       - (P_perp D^{End}_j theta_v, P_perp D^{End}_k theta_w),
// P_perp the end_inner-orthogonal projection onto the complement of
// span{theta_1(t)..theta_m(t)}.
BaseCurvatureSample base_curvature_subbundle(const PointFrame& frame);
BaseCurvatureSample base_curvature_subbundle(const HiggsBundleChart& bundle,
                                             const BasePoint& t);

// Route 3: the flat simplification, Theta^h_{j kbar} replaced through
// [theta_k^*, theta_j]:
//   (Theta_{j kbar} v, w)_H = -([theta_k^*, theta_v], [theta_j^*, theta_w])
//       - (P_perp D^{End}_j theta_v, P_perp D^{End}_k theta_w).
// Throws NotFlatError when the flatness residual at t exceeds flat_tol.
BaseCurvatureSample base_curvature_flat_formula(const PointFrame& frame,
                                                double flat_tol = 1e-9);
BaseCurvatureSample base_curvature_flat_formula(const HiggsBundleChart& bundle,
                                                const BasePoint& t,
                                                double flat_tol = 1e-9);

// Real bisectional pairing Re sum_{j,k} (Theta_{j kbar} v, v)_H xi^j
// conj(xi^k); the imaginary part is a consistency diagnostic written to
// *imag_abs when requested (it must vanish up to rounding).
double bisectional_form(const BaseCurvatureSample& sample, const Vec& xi,
                        const Vec& v, double* imag_abs = nullptr);

// Re sum_{j,k} (Theta_{j kbar} dt_k, dt_j)_H, the trace pattern whose
// semi-negativity is asserted for flat admissible bundles.
double scalar_trace_check(const BaseCurvatureSample& sample,
                          double* imag_abs = nullptr);

// HSC(v) = bisectional(v, v) / (v, v)_H^2, computed on the direct route.
double holomorphic_sectional_curvature(const BaseCurvatureSample& sample,
                                       const Vec& v);
double holomorphic_sectional_curvature(const HiggsBundleChart& bundle,
                                       const BasePoint& t, const Vec& v);

}  // namespace hodge
