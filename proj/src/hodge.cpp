#include "hodge/hodge.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include <Eigen/Cholesky>

#include "hodge/errors.hpp"
#include "hodge/hermitian.hpp"

namespace hodge {

namespace {

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

std::size_t flat_index(int m, int j, int k, int l, int p) {
  return static_cast<std::size_t>(((j * m + k) * m + l) * m + p);
}

}  // namespace

Mat hodge_metric(const PointFrame& frame) {
  const int m = frame.base_dim();
  Mat g(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      g(j, k) = (frame.theta(j) * frame.theta_adj(k)).trace();
  return 0.5 * (g + g.adjoint().eval());
}

Mat hodge_metric(const HiggsBundleChart& bundle, const BasePoint& t) {
  return hodge_metric(PointFrame(bundle, t));
}

// The whole engine runs on the adjoint fields S_k = theta_k^*. Their exact
// derivatives follow from d(h^{-1}) = -h^{-1} (dh) h^{-1} and the
// holomorphy of theta:
//   d_l S_k    = [S_k, Gamma_l]
//   dbar_m S_k = [S_k, B_m] + (d_m theta_k)^*
//   dbar_m Gamma_l = -Theta^h_{l mbar}
// with Gamma_l = h^{-1} d_l h and B_m = h^{-1} dbar_m h.
MetricDerivatives hodge_metric_derivatives(const PointFrame& frame) {
  const int m = frame.base_dim();

  std::vector<Mat> ds(static_cast<std::size_t>(m * m));      // [k*m+l] d_l S_k
  std::vector<Mat> dbar_s(static_cast<std::size_t>(m * m));  // [k*m+q] dbar_q S_k
  for (int k = 0; k < m; ++k) {
    const Mat& s = frame.theta_adj(k);
    for (int l = 0; l < m; ++l)
      ds[static_cast<std::size_t>(k * m + l)] = comm(s, frame.gamma(l));
    for (int q = 0; q < m; ++q)
      dbar_s[static_cast<std::size_t>(k * m + q)] =
          comm(s, frame.gamma_bar(q)) + frame.adjoint(frame.dtheta(k, q));
  }

  MetricDerivatives out;
  out.g = Mat(m, m);
  out.dg.assign(static_cast<std::size_t>(m), Mat::Zero(m, m));
  out.dg_bar.assign(static_cast<std::size_t>(m), Mat::Zero(m, m));
  out.d2g.assign(static_cast<std::size_t>(m),
                 std::vector<Mat>(static_cast<std::size_t>(m), Mat::Zero(m, m)));

  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const Mat& th = frame.theta(j);
      const Mat& s = frame.theta_adj(k);
      out.g(j, k) = (th * s).trace();
      for (int l = 0; l < m; ++l) {
        out.dg[static_cast<std::size_t>(l)](j, k) =
            (frame.dtheta(j, l) * s).trace() +
            (th * ds[static_cast<std::size_t>(k * m + l)]).trace();
      }
      for (int q = 0; q < m; ++q) {
        const Mat& sq = dbar_s[static_cast<std::size_t>(k * m + q)];
        out.dg_bar[static_cast<std::size_t>(q)](j, k) = (th * sq).trace();
        for (int l = 0; l < m; ++l) {
          // dbar_q d_l S_k = [dbar_q S_k, Gamma_l] + [S_k, dbar_q Gamma_l]
          const Mat d2s = comm(sq, frame.gamma(l)) +
                          comm(s, (-frame.chern(l, q)).eval());
          out.d2g[static_cast<std::size_t>(l)][static_cast<std::size_t>(q)](
              j, k) = (frame.dtheta(j, l) * sq).trace() + (th * d2s).trace();
        }
      }
    }
  }
  out.g = 0.5 * (out.g + out.g.adjoint().eval());
  return out;
}

double kahler_residual(const PointFrame& frame) {
  const MetricDerivatives md = hodge_metric_derivatives(frame);
  const int m = frame.base_dim();
  double worst = 0.0;
  for (int l = 0; l < m; ++l)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        worst = std::max(worst,
                         std::abs(md.dg[static_cast<std::size_t>(l)](j, k) -
                                  md.dg[static_cast<std::size_t>(j)](l, k)));
  return worst;
}

double kahler_residual(const HiggsBundleChart& bundle, const BasePoint& t) {
  return kahler_residual(PointFrame(bundle, t));
}

BaseCurvatureSample::BaseCurvatureSample(int m, Mat g, CurvatureRoute route)
    : m_(m),
      g_(std::move(g)),
      route_(route),
      r_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m) *
             static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
         Complex(0.0, 0.0)) {}

Complex& BaseCurvatureSample::at(int j, int k, int l, int p) {
  return r_[flat_index(m_, j, k, l, p)];
}

Complex BaseCurvatureSample::at(int j, int k, int l, int p) const {
  return r_[flat_index(m_, j, k, l, p)];
}

Complex BaseCurvatureSample::pair(const Vec& u, const Vec& v) const {
  Complex acc(0.0, 0.0);
  for (int l = 0; l < m_; ++l)
    for (int p = 0; p < m_; ++p) acc += g_(l, p) * u(l) * std::conj(v(p));
  return acc;
}

namespace {

Admissibility require_admissible(const PointFrame& frame) {
  const Admissibility adm = is_admissible(frame);
  if (!adm.admissible)
    throw DegenerateGram(
        "Hodge metric is degenerate at the requested point; "
        "curvature of the base metric is undefined there",
        adm.gram_condition);
  return adm;
}

}  // namespace

BaseCurvatureSample base_curvature_direct(const PointFrame& frame) {
  const Admissibility adm = require_admissible(frame);
  const int m = frame.base_dim();
  const MetricDerivatives md = hodge_metric_derivatives(frame);

  Eigen::LLT<Mat> llt(md.g);
  if (llt.info() != Eigen::Success)
    throw DegenerateGram("Hodge metric is not positive definite at the point",
                         adm.gram_condition);
  const Mat ginv = llt.solve(Mat::Identity(m, m));

  BaseCurvatureSample out(m, md.g, CurvatureRoute::Direct);
  for (int j = 0; j < m; ++j) {
    const Mat& pj = md.dg[static_cast<std::size_t>(j)];
    for (int k = 0; k < m; ++k) {
      const Mat& qk = md.dg_bar[static_cast<std::size_t>(k)];
      const Mat& mjk =
          md.d2g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      // Endomorphism-valued curvature in the coordinate frame, then lowered
      // with G: R_{j kbar l pbar} = (Theta_{j kbar} dt_l, dt_p)_H.
      const Mat t_jk = -(mjk * ginv - pj * ginv * qk * ginv);
      const Mat lowered = t_jk * md.g;
      for (int l = 0; l < m; ++l)
        for (int p = 0; p < m; ++p) out.at(j, k, l, p) = lowered(l, p);
    }
  }
  return out;
}

BaseCurvatureSample base_curvature_direct(const HiggsBundleChart& bundle,
                                          const BasePoint& t) {
  return base_curvature_direct(PointFrame(bundle, t));
}

namespace {

// D^{End}_j theta_l for all j, l, plus their projections onto the
// end_inner-orthogonal complement of span{theta_1(t)..theta_m(t)}.
struct SecondFundamental {
  std::vector<Mat> perp;  // [j*m + l] = P_perp(D_j theta_l)
};

SecondFundamental second_fundamental(const PointFrame& frame) {
  const int m = frame.base_dim();
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) basis.push_back(frame.theta(j));

  SecondFundamental out;
  out.perp.resize(static_cast<std::size_t>(m * m));
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < m; ++l) {
      const Mat d =
          frame.end_connection_d(j, frame.theta(l), frame.dtheta(l, j));
      out.perp[static_cast<std::size_t>(j * m + l)] =
          gram_project_complement(d, basis, frame.form()).residual;
    }
  }
  return out;
}

}  // namespace

BaseCurvatureSample base_curvature_subbundle(const PointFrame& frame) {
  require_admissible(frame);
  const int m = frame.base_dim();
  const SecondFundamental sf = second_fundamental(frame);

  BaseCurvatureSample out(m, hodge_metric(frame), CurvatureRoute::Subbundle);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const Mat theta_h = frame.chern(j, k);
      for (int l = 0; l < m; ++l) {
        const Mat ambient = comm(theta_h, frame.theta(l));
        for (int p = 0; p < m; ++p) {
          out.at(j, k, l, p) =
              end_inner(ambient, frame.theta(p), frame.form()) -
              end_inner(sf.perp[static_cast<std::size_t>(j * m + l)],
                        sf.perp[static_cast<std::size_t>(k * m + p)],
                        frame.form());
        }
      }
    }
  }
  return out;
}

BaseCurvatureSample base_curvature_subbundle(const HiggsBundleChart& bundle,
                                             const BasePoint& t) {
  return base_curvature_subbundle(PointFrame(bundle, t));
}

BaseCurvatureSample base_curvature_flat_formula(const PointFrame& frame,
                                                double flat_tol) {
  require_admissible(frame);
  const double residual = flatness_residual(frame);
  if (!(residual <= flat_tol))
    throw NotFlatError(
        "flat curvature formula requested at a point where the bundle is "
        "not flat",
        residual);

  const int m = frame.base_dim();
  const SecondFundamental sf = second_fundamental(frame);

  BaseCurvatureSample out(m, hodge_metric(frame), CurvatureRoute::FlatFormula);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < m; ++l) {
        const Mat left = comm(frame.theta_adj(k), frame.theta(l));
        for (int p = 0; p < m; ++p) {
          const Mat right = comm(frame.theta_adj(j), frame.theta(p));
          out.at(j, k, l, p) =
              -end_inner(left, right, frame.form()) -
              end_inner(sf.perp[static_cast<std::size_t>(j * m + l)],
                        sf.perp[static_cast<std::size_t>(k * m + p)],
                        frame.form());
        }
      }
    }
  }
  return out;
}

BaseCurvatureSample base_curvature_flat_formula(const HiggsBundleChart& bundle,
                                                const BasePoint& t,
                                                double flat_tol) {
  return base_curvature_flat_formula(PointFrame(bundle, t), flat_tol);
}

double bisectional_form(const BaseCurvatureSample& sample, const Vec& xi,
                        const Vec& v, double* imag_abs) {
  const int m = sample.base_dim();
  Complex acc(0.0, 0.0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int p = 0; p < m; ++p)
          acc += sample.at(j, k, l, p) * v(l) * std::conj(v(p)) * xi(j) *
                 std::conj(xi(k));
  if (imag_abs != nullptr) *imag_abs = std::abs(acc.imag());
  return acc.real();
}

double scalar_trace_check(const BaseCurvatureSample& sample,
                          double* imag_abs) {
  const int m = sample.base_dim();
  Complex acc(0.0, 0.0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) acc += sample.at(j, k, k, j);
  if (imag_abs != nullptr) *imag_abs = std::abs(acc.imag());
  return acc.real();
}

double holomorphic_sectional_curvature(const BaseCurvatureSample& sample,
                                       const Vec& v) {
  const double numerator = bisectional_form(sample, v, v);
  const double norm_sq = sample.pair(v, v).real();
  return numerator / (norm_sq * norm_sq);
}

double holomorphic_sectional_curvature(const HiggsBundleChart& bundle,
                                       const BasePoint& t, const Vec& v) {
  return holomorphic_sectional_curvature(base_curvature_direct(bundle, t), v);
}

}  // namespace hodge
