#include "hodge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace hodge {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

// Rounds to the 12-significant-digit decimal before handing the value to
// the JSON writer, so the serialized digits never exceed what format_number
// prints and every renderer agrees byte for byte.
double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace

bool CertificationReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.status == CheckStatus::Fail;
  });
}

const CheckRecord* CertificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string render_json(const CertificationReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["bundle"] = {{"name", report.bundle_name},
                 {"base_dim", report.base_dim},
                 {"rank", report.rank}};
  if (report.nilpotency >= 0)
    j["bundle"]["nilpotency"] = report.nilpotency;
  else
    j["bundle"]["nilpotency"] = nullptr;
  j["samples"] = {{"count", report.sample_count}, {"seed", report.seed}};
  j["tolerances"] = {{"abs", round_sig(report.tol_abs)},
                     {"rel", round_sig(report.tol_rel)}};
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"claim", c.claim},
                           {"status", to_string(c.status)},
                           {"stat", round_sig(c.stat)},
                           {"tolerance", round_sig(c.tolerance)},
                           {"detail", c.detail}});
  }
  j["verdict"] = report.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string render_text(const CertificationReport& report) {
  std::ostringstream out;
  out << report.tool << " " << report.version << "\n";
  out << "bundle: " << report.bundle_name << "  (base_dim " << report.base_dim
      << ", rank " << report.rank << ", nilpotency ";
  if (report.nilpotency >= 0)
    out << report.nilpotency;
  else
    out << "none";
  out << ")\n";
  out << "samples: " << report.sample_count << "  seed: " << report.seed
      << "  tol_abs: " << format_number(report.tol_abs)
      << "  tol_rel: " << format_number(report.tol_rel) << "\n\n";

  std::size_t name_w = 4;
  for (const auto& c : report.checks) name_w = std::max(name_w, c.name.size());
  for (const auto& c : report.checks) {
    std::string status = to_string(c.status);
    status.resize(7, ' ');
    std::string name = c.name;
    name.resize(name_w, ' ');
    out << "  [" << status << "] " << name << "  stat "
        << format_number(c.stat);
    if (c.status != CheckStatus::Skipped)
      out << "  (tol " << format_number(c.tolerance) << ")";
    out << "  " << c.claim;
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << "\n";
  }
  out << "\nverdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_csv(const CertificationReport& report) {
  std::ostringstream out;
  out << "index";
  for (int j = 0; j < report.base_dim; ++j)
    out << ",t" << (j + 1) << "_re,t" << (j + 1) << "_im";
  out << ",flatness,kahler,route_disagreement\n";
  for (const auto& row : report.samples) {
    out << row.index;
    for (const auto& c : row.t)
      out << "," << format_number(c.real()) << "," << format_number(c.imag());
    out << "," << format_number(row.flatness) << ","
        << format_number(row.kahler) << ",";
    if (row.has_routes) out << format_number(row.route_disagreement);
    out << "\n";
  }
  return out.str();
}

}  // namespace hodge
