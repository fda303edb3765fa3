#include "hodge/bundle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hodge {

HiggsBundleChart::HiggsBundleChart(std::string name, int base_dim, int rank,
                                   std::vector<ExprMatrix> theta, ExprMatrix h,
                                   ChartDomain domain, SampleSpec samples)
    : name_(std::move(name)),
      m_(base_dim),
      r_(rank),
      theta_(std::move(theta)),
      domain_(std::move(domain)),
      samples_(samples) {
  if (m_ < 1 || m_ > 4) {
    throw std::invalid_argument("base dimension must be between 1 and 4");
  }
  if (r_ < 1 || r_ > 16) {
    throw std::invalid_argument("rank must be between 1 and 16");
  }
  if (static_cast<int>(theta_.size()) != m_) {
    throw std::invalid_argument("need one Higgs matrix per base dimension");
  }
  for (const auto& th : theta_) {
    if (th.rows() != r_ || th.cols() != r_) {
      throw std::invalid_argument("Higgs matrices must be rank x rank");
    }
  }
  if (h.rows() != r_ || h.cols() != r_) {
    throw std::invalid_argument("metric must be rank x rank");
  }
  if (domain_.dim() != m_) {
    throw std::invalid_argument("domain dimension must equal base dimension");
  }
  raw_h_ = std::move(h);
  h_ = raw_h_.hermitian_part();

  dtheta_.reserve(static_cast<std::size_t>(m_ * m_));
  for (int j = 0; j < m_; ++j) {
    for (int l = 0; l < m_; ++l) {
      dtheta_.push_back(
          theta_[static_cast<std::size_t>(j)].d(l, Wirtinger::Holomorphic));
    }
  }
  dh_.reserve(static_cast<std::size_t>(m_));
  dh_bar_.reserve(static_cast<std::size_t>(m_));
  for (int l = 0; l < m_; ++l) {
    dh_.push_back(h_.d(l, Wirtinger::Holomorphic));
    dh_bar_.push_back(h_.d(l, Wirtinger::Antiholomorphic));
  }
  d2h_.reserve(static_cast<std::size_t>(m_ * m_));
  for (int l = 0; l < m_; ++l) {
    for (int k = 0; k < m_; ++k) {
      d2h_.push_back(
          dh_[static_cast<std::size_t>(l)].d(k, Wirtinger::Antiholomorphic));
    }
  }
}

const ExprMatrix& HiggsBundleChart::theta(int j) const {
  return theta_.at(static_cast<std::size_t>(j));
}

const ExprMatrix& HiggsBundleChart::dtheta(int j, int l) const {
  return dtheta_.at(static_cast<std::size_t>(j * m_ + l));
}

const ExprMatrix& HiggsBundleChart::dh(int l) const {
  return dh_.at(static_cast<std::size_t>(l));
}

const ExprMatrix& HiggsBundleChart::dh_bar(int l) const {
  return dh_bar_.at(static_cast<std::size_t>(l));
}

const ExprMatrix& HiggsBundleChart::d2h(int l, int k) const {
  return d2h_.at(static_cast<std::size_t>(l * m_ + k));
}

std::vector<BasePoint> HiggsBundleChart::sample_points() const {
  return domain_.sample_points(samples_.count, samples_.seed);
}

std::vector<BasePoint> HiggsBundleChart::sample_points(
    int count, std::uint64_t seed) const {
  return domain_.sample_points(count, seed);
}

bool operator==(const HiggsBundleChart& a, const HiggsBundleChart& b) {
  return a.name_ == b.name_ && a.m_ == b.m_ && a.r_ == b.r_ &&
         a.theta_ == b.theta_ && a.raw_h_ == b.raw_h_ &&
         a.domain_ == b.domain_ && a.samples_ == b.samples_;
}

ValidationReport validate(const HiggsBundleChart& bundle,
                          const std::vector<BasePoint>& points) {
  ValidationReport report;
  const int m = bundle.base_dim();

  for (int j = 0; j < m; ++j) {
    const auto& th = bundle.theta(j);
    for (int a = 0; a < bundle.rank(); ++a) {
      for (int b = 0; b < bundle.rank(); ++b) {
        if (!th(a, b).structurally_holomorphic()) {
          report.theta_holomorphic = false;
          report.issues.push_back(
              {"theta[" + std::to_string(j) + "][" + std::to_string(a) + "][" +
                   std::to_string(b) + "]",
               "Higgs field not holomorphic: entry depends on a conjugated "
               "coordinate"});
        }
      }
    }
  }

  for (const auto& t : points) {
    if (!bundle.domain().contains(t)) continue;
    std::vector<Mat> th(static_cast<std::size_t>(m));
    bool eval_ok = true;
    for (int j = 0; j < m; ++j) {
      try {
        th[static_cast<std::size_t>(j)] = bundle.theta(j).eval(t);
      } catch (const SingularEval&) {
        eval_ok = false;
        break;
      }
    }
    if (!eval_ok) continue;
    for (int j = 0; j < m; ++j) {
      for (int l = j + 1; l < m; ++l) {
        const double c = (th[static_cast<std::size_t>(j)] *
                              th[static_cast<std::size_t>(l)] -
                          th[static_cast<std::size_t>(l)] *
                              th[static_cast<std::size_t>(j)])
                             .norm();
        report.max_commutator = std::max(report.max_commutator, c);
      }
    }
    try {
      const Mat h = bundle.raw_metric().eval(t);
      report.max_hermitian_defect =
          std::max(report.max_hermitian_defect, (h - h.adjoint()).norm());
      HermitianForm form(bundle.metric().eval(t));
      (void)form;
    } catch (const SingularEval&) {
      // points where h is singular to evaluate are skipped
    } catch (const SingularMetric&) {
      if (report.metric_positive) {
        report.metric_positive = false;
        report.issues.push_back(
            {"h", "metric is not positive definite at a sampled point"});
      }
    }
  }
  if (report.max_commutator > 1e-9) {
    report.issues.push_back(
        {"theta", "Higgs field components do not commute (max violation " +
                      std::to_string(report.max_commutator) + ")"});
  }
  return report;
}

namespace {
Mat metric_at(const HiggsBundleChart& bundle, const BasePoint& t) {
  bundle.domain().require(t);
  return bundle.metric().eval(t);
}
}  // namespace

PointFrame::PointFrame(const HiggsBundleChart& bundle, const BasePoint& t)
    : bundle_(&bundle),
      t_(t),
      m_(bundle.base_dim()),
      r_(bundle.rank()),
      form_(metric_at(bundle, t)) {
  theta_.reserve(static_cast<std::size_t>(m_));
  theta_adj_.reserve(static_cast<std::size_t>(m_));
  for (int j = 0; j < m_; ++j) {
    theta_.push_back(bundle.theta(j).eval(t));
    theta_adj_.push_back(h_adjoint(theta_.back(), form_));
  }
  dtheta_.reserve(static_cast<std::size_t>(m_ * m_));
  for (int j = 0; j < m_; ++j) {
    for (int l = 0; l < m_; ++l) {
      dtheta_.push_back(bundle.dtheta(j, l).eval(t));
    }
  }
  dh_.reserve(static_cast<std::size_t>(m_));
  dh_bar_.reserve(static_cast<std::size_t>(m_));
  gamma_.reserve(static_cast<std::size_t>(m_));
  gamma_bar_.reserve(static_cast<std::size_t>(m_));
  for (int l = 0; l < m_; ++l) {
    dh_.push_back(bundle.dh(l).eval(t));
    dh_bar_.push_back(bundle.dh_bar(l).eval(t));
    gamma_.push_back(form_.solve(dh_.back()));
    gamma_bar_.push_back(form_.solve(dh_bar_.back()));
  }
  d2h_.reserve(static_cast<std::size_t>(m_ * m_));
  for (int l = 0; l < m_; ++l) {
    for (int k = 0; k < m_; ++k) {
      d2h_.push_back(bundle.d2h(l, k).eval(t));
    }
  }
}

Mat PointFrame::chern(int j, int k) const {
  // -dbar_k (h^{-1} d_j h) = (h^{-1} dbar_k h)(h^{-1} d_j h)
  //                          - h^{-1} (dbar_k d_j h)
  return gamma_bar(k) * gamma(j) -
         form_.solve(d2h_[static_cast<std::size_t>(j * m_ + k)]);
}

Mat PointFrame::end_connection_d(int j, const Mat& value,
                                 const Mat& dvalue) const {
  return dvalue + gamma(j) * value - value * gamma(j);
}

Admissibility is_admissible(const HiggsBundleChart& bundle,
                            const BasePoint& t) {
  return is_admissible(PointFrame(bundle, t));
}

Admissibility is_admissible(const PointFrame& frame) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(frame.base_dim()));
  for (int j = 0; j < frame.base_dim(); ++j) basis.push_back(frame.theta(j));
  Admissibility out;
  out.gram_condition = gram_condition(basis, frame.form());
  out.admissible = out.gram_condition <= kGramConditionLimit;
  return out;
}

namespace {

// Max norm over products theta_{i_1}..theta_{i_len} with non-decreasing
// indices, relative to the product of factor norms (capped below at 1).
double max_product_norm(const std::vector<Mat>& th, int len) {
  double worst = 0.0;
  const int m = static_cast<int>(th.size());
  struct Item {
    Mat prefix;
    double scale;
    int start;
    int remaining;
  };
  std::vector<Item> stack;
  stack.push_back({Mat::Identity(th[0].rows(), th[0].cols()), 1.0, 0, len});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (item.remaining == 0) {
      const double scale = std::max(1.0, item.scale);
      worst = std::max(worst, item.prefix.norm() / scale);
      continue;
    }
    for (int i = item.start; i < m; ++i) {
      stack.push_back({item.prefix * th[static_cast<std::size_t>(i)],
                       item.scale * th[static_cast<std::size_t>(i)].norm(), i,
                       item.remaining - 1});
    }
  }
  return worst;
}

}  // namespace

std::optional<int> nilpotency_order(const HiggsBundleChart& bundle,
                                    const std::vector<BasePoint>& points) {
  if (points.empty()) return std::nullopt;
  const int m = bundle.base_dim();
  const int r = bundle.rank();
  int required = 1;  // smallest product length that vanishes everywhere
  for (const auto& t : points) {
    std::vector<Mat> th;
    th.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) th.push_back(bundle.theta(j).eval(t));
    int len = 1;
    for (; len <= r; ++len) {
      if (max_product_norm(th, len) <= 1e-9) break;
    }
    if (len > r) return std::nullopt;
    required = std::max(required, len);
  }
  return required - 1;
}

Mat chern_curvature_h(const HiggsBundleChart& bundle, const BasePoint& t,
                      int j, int k) {
  return PointFrame(bundle, t).chern(j, k);
}

double flatness_residual(const PointFrame& frame) {
  const int m = frame.base_dim();
  double worst = 0.0;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const Mat bracket = frame.theta_adj(k) * frame.theta(j) -
                          frame.theta(j) * frame.theta_adj(k);
      worst = std::max(worst, (frame.chern(j, k) - bracket).norm());
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const Mat djk = frame.end_connection_d(j, frame.theta(k),
                                             frame.dtheta(k, j));
      const Mat dkj = frame.end_connection_d(k, frame.theta(j),
                                             frame.dtheta(j, k));
      worst = std::max(worst, (djk - dkj).norm());
    }
  }
  return worst;
}

double flatness_residual(const HiggsBundleChart& bundle, const BasePoint& t) {
  return flatness_residual(PointFrame(bundle, t));
}

Mat end_connection_derivative(const HiggsBundleChart& bundle, int j,
                              const ExprMatrix& a, const BasePoint& t) {
  PointFrame frame(bundle, t);
  return frame.end_connection_d(j, a.eval(t),
                                a.d(j, Wirtinger::Holomorphic).eval(t));
}

}  // namespace hodge
