#pragma once

#include <cstdint>
#include <string>

#include "hodge/sweep.hpp"

namespace hodge {

struct HarnessOptions {
  int rank = 4;
  int trials = 1000;
  std::uint64_t seed = 7;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

// Aggregates over the family of instances whose grading is orthogonal and
// strict by construction; every margin here is asserted.
struct ConstructedAggregate {
  int count = 0;
  double min_margin = 0.0;
  double max_grading_defect = 0.0;
  double max_identity_defect = 0.0;  // |sum a_p - ||A||_h^2| (relative)
};

// Aggregates over general nilpotent instances (strict upper-triangular
// matrices pushed through a well-conditioned basis change, with an
// unrelated random metric). The anchored-chain grading always exists and
// its margins are reported but not asserted: without h-orthogonality the
// trace chain can genuinely fail. The reconstruction subset is asserted.
struct GeneralAggregate {
  int count = 0;
  int jordan_graded = 0;          // anchored-chain grading succeeded
  double jordan_min_margin = 0.0; // informational
  int reconstructed = 0;          // orthogonal strict grading found
  double reconstructed_min_margin = 0.0;
  double reconstructed_max_identity_defect = 0.0;
};

// The rank-2 shift block hits the chain with every inequality tight:
// commutator norm and first bound both sqrt(2).
struct ShiftBlockRecord {
  bool present = false;
  double lhs = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double min_margin = 0.0;
};

struct HarnessReport {
  int rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  ConstructedAggregate constructed;
  GeneralAggregate general;
  ShiftBlockRecord shift_block;
  bool pass() const;
};

// Requires 2 <= rank <= 16 (throws DomainError otherwise). trials == 0
// produces an empty passing report.
HarnessReport run_nilpotent_harness(const HarnessOptions& options);

std::string render_json(const HarnessReport& report);
std::string render_text(const HarnessReport& report);

}  // namespace hodge
