#include "hodge/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hodge/errors.hpp"
#include "hodge/hermitian.hpp"
#include "hodge/nilpotent.hpp"
#include "hodge/report.hpp"
#include "hodge/types.hpp"

namespace hodge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = Complex(n(rng), n(rng));
  return a;
}

// Well-conditioned HPD matrix: Gram of a Gaussian plus a sizable multiple
// of its mean diagonal, so the condition number stays modest at any rank.
Mat random_hpd(std::mt19937_64& rng, int d) {
  const Mat b = gaussian_matrix(rng, d, d);
  Mat h = b.adjoint() * b;
  const double lift = 0.25 * h.trace().real() / d;
  h += lift * Mat::Identity(d, d);
  return h;
}

// r split into `parts` positive summands, uniformly over the cut positions.
std::vector<int> random_composition(std::mt19937_64& rng, int r, int parts) {
  std::vector<int> slots(static_cast<std::size_t>(r - 1));
  std::iota(slots.begin(), slots.end(), 1);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> cuts(slots.begin(), slots.begin() + (parts - 1));
  cuts.push_back(0);
  cuts.push_back(r);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> dims;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    dims.push_back(cuts[i] - cuts[i - 1]);
  return dims;
}

struct ConstructedTrial {
  double margin = kInf;
  double grading_defect = 0.0;
  double identity_defect = 0.0;
};

// Block-superdiagonal A against a block-diagonal metric: the coordinate
// blocks are an h-orthogonal strict grading by construction, so the chain
// inequalities are asserted on this known grading (no reconstruction step
// in the loop).
ConstructedTrial run_constructed(std::uint64_t trial_seed, int r) {
  std::mt19937_64 rng(trial_seed);
  const int max_order = std::min(r - 1, 3);
  const int k =
      1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
  const std::vector<int> dims = random_composition(rng, r, k + 1);

  std::vector<int> offset(dims.size() + 1, 0);
  for (std::size_t p = 0; p < dims.size(); ++p)
    offset[p + 1] = offset[p] + dims[p];

  Mat a = Mat::Zero(r, r);
  for (int p = 0; p < k; ++p) {
    a.block(offset[static_cast<std::size_t>(p + 1)],
            offset[static_cast<std::size_t>(p)],
            dims[static_cast<std::size_t>(p + 1)],
            dims[static_cast<std::size_t>(p)]) =
        gaussian_matrix(rng, dims[static_cast<std::size_t>(p + 1)],
                        dims[static_cast<std::size_t>(p)]);
  }
  Mat h = Mat::Zero(r, r);
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const int d = dims[p];
    h.block(offset[p], offset[p], d, d) = random_hpd(rng, d);
  }

  GradedNilpotent grading;
  grading.order = k;
  grading.h_orthogonal = true;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    Mat basis = Mat::Zero(r, dims[p]);
    for (int c = 0; c < dims[p]; ++c) basis(offset[p] + c, c) = 1.0;
    grading.levels.push_back(std::move(basis));
  }

  const HermitianForm form(h);
  ConstructedTrial out;
  const GradingCheck gc = check_grading(a, form, grading);
  out.grading_defect = std::max(gc.orthogonality_defect, gc.strictness_defect);
  const ChainCheck chain = commutator_chain_check(a, form, grading);
  out.margin = chain.min_margin();
  const double sum_a =
      std::accumulate(chain.profile.begin(), chain.profile.end(), 0.0);
  const double norm_sq = std::pow(end_norm(a, form), 2.0);
  out.identity_defect = std::abs(sum_a - norm_sq) / std::max(1.0, norm_sq);
  return out;
}

struct GeneralTrial {
  bool jordan_ok = false;
  double jordan_margin = kInf;
  bool reconstructed = false;
  double margin = kInf;
  double identity_defect = 0.0;
};

// Strict upper-triangular Gaussian pushed through a well-conditioned basis
// change, with a metric drawn independently. The anchored-chain grading is
// reported; only instances where an h-orthogonal strict grading exists are
// asserted.
GeneralTrial run_general(std::uint64_t trial_seed, int r) {
  std::mt19937_64 rng(trial_seed);
  Mat n = gaussian_matrix(rng, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j) n(i, j) = 0.0;

  const Eigen::HouseholderQR<Mat> qr(gaussian_matrix(rng, r, r));
  const Mat q = qr.householderQ();
  std::uniform_real_distribution<double> scale(0.8, 1.25);
  Vec diag(r);
  for (int i = 0; i < r; ++i) diag(i) = scale(rng);
  const Mat g = q * diag.asDiagonal();
  const Mat a = g * n * g.inverse();
  const Mat h = random_hpd(rng, r);
  const HermitianForm form(h);

  GeneralTrial out;
  try {
    const GradedNilpotent jordan = jordan_grading(a);
    const ChainCheck chain = commutator_chain_check(a, form, jordan);
    out.jordan_margin = chain.min_margin();
    out.jordan_ok = true;

    if (const auto grading = orthogonal_strict_grading(a, form)) {
      out.reconstructed = true;
      const ChainCheck ortho_chain = commutator_chain_check(a, form, *grading);
      out.margin = ortho_chain.min_margin();
      const double sum_a = std::accumulate(ortho_chain.profile.begin(),
                                           ortho_chain.profile.end(), 0.0);
      const double norm_sq = std::pow(end_norm(a, form), 2.0);
      out.identity_defect =
          std::abs(sum_a - norm_sq) / std::max(1.0, norm_sq);
    }
  } catch (const Error&) {
    // deflation can collapse on unlucky draws; counted, not asserted
  }
  return out;
}

ShiftBlockRecord run_shift_block() {
  Mat a = Mat::Zero(2, 2);
  a(1, 0) = 1.0;  // maps grade 0 (e1) onto grade 1 (e2)
  const HermitianForm form(Mat::Identity(2, 2));
  GradedNilpotent grading;
  grading.order = 1;
  grading.h_orthogonal = true;
  grading.levels.push_back(Mat::Identity(2, 2).col(0));
  grading.levels.push_back(Mat::Identity(2, 2).col(1));
  const ChainCheck chain = commutator_chain_check(a, form, grading);
  ShiftBlockRecord rec;
  rec.present = true;
  rec.lhs = chain.commutator_norm;
  rec.m1 = chain.m1;
  rec.m2 = chain.m2;
  rec.m3 = chain.m3;
  rec.min_margin = chain.min_margin();
  return rec;
}

nlohmann::ordered_json aggregate_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(format_number(value).c_str(), nullptr);
}

}  // namespace

bool HarnessReport::pass() const {
  const double sqrt2 = std::sqrt(2.0);
  if (constructed.count > 0) {
    if (constructed.min_margin < -1e-9) return false;
    if (constructed.max_grading_defect > 1e-8) return false;
    if (constructed.max_identity_defect > 1e-9) return false;
  }
  if (general.reconstructed > 0) {
    if (general.reconstructed_min_margin < -1e-9) return false;
    if (general.reconstructed_max_identity_defect > 1e-9) return false;
  }
  if (shift_block.present) {
    if (std::abs(shift_block.lhs - sqrt2) > 1e-9) return false;
    if (std::abs(shift_block.m1 - sqrt2) > 1e-9) return false;
    if (shift_block.min_margin < -1e-9) return false;
  }
  return true;
}

HarnessReport run_nilpotent_harness(const HarnessOptions& options) {
  if (options.rank < 2 || options.rank > 16)
    throw DomainError("harness rank must be between 2 and 16");
  if (options.trials < 0) throw DomainError("trials must be non-negative");

  HarnessReport rep;
  rep.rank = options.rank;
  rep.trials = options.trials;
  rep.seed = options.seed;
  rep.constructed.min_margin = kInf;
  rep.general.jordan_min_margin = kInf;
  rep.general.reconstructed_min_margin = kInf;

  if (options.trials == 0) return rep;

  const auto constructed = sweep_map<ConstructedTrial>(
      options.trials, options.policy, [&](int i) {
        return run_constructed(mix_seed(options.seed, 2 * i), options.rank);
      });
  for (const auto& t : constructed) {
    rep.constructed.count += 1;
    rep.constructed.min_margin =
        std::min(rep.constructed.min_margin, t.margin);
    rep.constructed.max_grading_defect =
        std::max(rep.constructed.max_grading_defect, t.grading_defect);
    rep.constructed.max_identity_defect =
        std::max(rep.constructed.max_identity_defect, t.identity_defect);
  }

  const auto general = sweep_map<GeneralTrial>(
      options.trials, options.policy, [&](int i) {
        return run_general(mix_seed(options.seed, 2 * i + 1), options.rank);
      });
  for (const auto& t : general) {
    rep.general.count += 1;
    if (t.jordan_ok) {
      rep.general.jordan_graded += 1;
      rep.general.jordan_min_margin =
          std::min(rep.general.jordan_min_margin, t.jordan_margin);
    }
    if (t.reconstructed) {
      rep.general.reconstructed += 1;
      rep.general.reconstructed_min_margin =
          std::min(rep.general.reconstructed_min_margin, t.margin);
      rep.general.reconstructed_max_identity_defect =
          std::max(rep.general.reconstructed_max_identity_defect,
                   t.identity_defect);
    }
  }

  rep.shift_block = run_shift_block();
  return rep;
}

std::string render_json(const HarnessReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["mode"] = "nilpotent-harness";
  j["rank"] = report.rank;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["constructed"] = {
      {"count", report.constructed.count},
      {"min_margin", aggregate_or_null(report.constructed.min_margin)},
      {"max_grading_defect",
       aggregate_or_null(report.constructed.max_grading_defect)},
      {"max_identity_defect",
       aggregate_or_null(report.constructed.max_identity_defect)}};
  j["general"] = {
      {"count", report.general.count},
      {"jordan_graded", report.general.jordan_graded},
      {"jordan_min_margin",
       aggregate_or_null(report.general.jordan_min_margin)},
      {"reconstructed", report.general.reconstructed},
      {"reconstructed_min_margin",
       aggregate_or_null(report.general.reconstructed_min_margin)},
      {"reconstructed_max_identity_defect",
       aggregate_or_null(report.general.reconstructed_max_identity_defect)}};
  if (report.shift_block.present) {
    j["shift_block"] = {{"lhs", aggregate_or_null(report.shift_block.lhs)},
                        {"m1", aggregate_or_null(report.shift_block.m1)},
                        {"m2", aggregate_or_null(report.shift_block.m2)},
                        {"m3", aggregate_or_null(report.shift_block.m3)},
                        {"min_margin",
                         aggregate_or_null(report.shift_block.min_margin)}};
  } else {
    j["shift_block"] = nullptr;
  }
  j["verdict"] = report.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string render_text(const HarnessReport& report) {
  std::ostringstream out;
  const auto num = [](double v) {
    return std::isfinite(v) ? format_number(v) : std::string("n/a");
  };
  out << kToolName << " " << kToolVersion << "  nilpotent-harness\n";
  out << "rank: " << report.rank << "  trials: " << report.trials
      << "  seed: " << report.seed << "\n\n";
  out << "constructed orthogonal-strict instances: "
      << report.constructed.count << "\n";
  out << "  min chain margin      " << num(report.constructed.min_margin)
      << "\n";
  out << "  max grading defect    "
      << num(report.constructed.max_grading_defect) << "\n";
  out << "  max identity defect   "
      << num(report.constructed.max_identity_defect) << "\n";
  out << "general instances: " << report.general.count << "\n";
  out << "  anchored-chain graded " << report.general.jordan_graded
      << "  (min margin " << num(report.general.jordan_min_margin)
      << ", informational)\n";
  out << "  reconstructed         " << report.general.reconstructed
      << "  (min margin " << num(report.general.reconstructed_min_margin)
      << ")\n";
  if (report.shift_block.present) {
    out << "shift block: lhs " << num(report.shift_block.lhs) << "  m1 "
        << num(report.shift_block.m1) << "  m2 " << num(report.shift_block.m2)
        << "  m3 " << num(report.shift_block.m3) << "\n";
  }
  out << "\nverdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace hodge
