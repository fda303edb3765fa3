#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodge/types.hpp"

namespace hodge {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

// One certified statement. `claim` is the reference string identifying the
// statement under test; it is report data, nothing in the library keys off
// it. `stat` is the measured summary statistic (max residual, min margin,
// worst excess over a bound) and `tolerance` is the threshold it was held
// against. Skipped checks were not asserted and carry the reason in
// `detail`.
struct CheckRecord {
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::Skipped;
  double stat = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Per-sample numbers behind the headline statistics, for external plotting.
// NaN marks a column that was not computed at that point.
struct SampleRow {
  int index = 0;
  BasePoint t;
  double flatness = 0.0;
  double kahler = 0.0;
  double route_disagreement = 0.0;
  bool has_routes = false;
};

struct CertificationReport {
  std::string tool = std::string(kToolName);
  std::string version = std::string(kToolVersion);
  std::string bundle_name;
  int base_dim = 0;
  int rank = 0;
  int nilpotency = -1;  // -1: not nilpotent at working precision
  int sample_count = 0;
  std::uint64_t seed = 0;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  std::vector<CheckRecord> checks;
  std::vector<SampleRow> samples;

  // Verdict: every asserted check passed (skips are not asserted).
  bool pass() const;
  const CheckRecord* find(const std::string& name) const;
};

// All numbers are printed with 12 significant digits, identically in every
// renderer, so equal reports are equal bytes. No timestamps.
std::string format_number(double x);

std::string render_json(const CertificationReport& report);
std::string render_text(const CertificationReport& report);
std::string render_csv(const CertificationReport& report);

}  // namespace hodge
