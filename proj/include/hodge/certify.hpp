#pragma once

#include <cstdint>
#include <optional>

#include "hodge/bundle.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/report.hpp"
#include "hodge/sweep.hpp"

namespace hodge {

struct CertifyOptions {
  // Sample budget; unset means the bundle's own samples spec.
  std::optional<int> sample_count;
  std::optional<std::uint64_t> seed;

  double tol_abs = 1e-9;   // residuals that must vanish
  double tol_rel = 1e-6;   // cross-route agreement (abs tol floors it)
  double sign_tol = 1e-10; // slack on "<= 0" sign assertions
  double hsc_slack = 1e-8; // slack on the sectional bound
  double expectation_tol = 1e-6;  // measured vs catalog expectations

  int route_samples = 50;      // points for the three-way curvature check
  int bisect_samples = 20;     // points for sign and sectional checks
  int bisect_pairs = 1000;     // random (xi, v) pairs per point
  int random_directions = 500; // random sectional directions in total
  int structure_points = 5;    // points for nilpotent trace-chain checks

  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

// Runs the full checklist against one bundle, in a fixed order: structural
// axioms, admissibility, nilpotency order, flatness, Kahler symmetry,
// three-way curvature agreement, bisectional semi-negativity, the scalar
// trace pattern, the holomorphic sectional bound, and nilpotent trace-chain
// spot checks. Mathematical failures never throw; they land in the report.
// Checks whose hypotheses fail (degenerate Hodge metric, nonflat bundle)
// are recorded as skipped with the reason. When catalog expectations are
// supplied, measured sectional values are additionally held against them.
CertificationReport certify(
    const HiggsBundleChart& bundle, const CertifyOptions& options = {},
    const std::optional<FixtureExpectations>& expect = std::nullopt);

}  // namespace hodge
