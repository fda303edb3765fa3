// Times the certification sweeps under the serial reference policy and the
// OpenMP policy on the same inputs, and confirms the rendered reports are
// byte-identical. The heavy kernel is the per-point three-route curvature
// comparison, so the product fixture (base dimension 2, rank 4) is the
// default subject.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "hodge/certify.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/harness.hpp"
#include "hodge/report.hpp"

namespace {

double run_certify_ms(const hodge::HiggsBundleChart& bundle,
                      hodge::ExecutionPolicy policy, int samples,
                      std::string* json_out) {
  hodge::CertifyOptions opt;
  opt.policy = policy;
  opt.sample_count = samples;
  opt.route_samples = samples;
  const auto start = std::chrono::steady_clock::now();
  const hodge::CertificationReport report = hodge::certify(bundle, opt);
  const auto stop = std::chrono::steady_clock::now();
  *json_out = hodge::render_json(report);
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

double run_harness_ms(int rank, int trials, hodge::ExecutionPolicy policy,
                      std::string* json_out) {
  hodge::HarnessOptions opt;
  opt.rank = rank;
  opt.trials = trials;
  opt.policy = policy;
  const auto start = std::chrono::steady_clock::now();
  const hodge::HarnessReport report = hodge::run_nilpotent_harness(opt);
  const auto stop = std::chrono::steady_clock::now();
  *json_out = hodge::render_json(report);
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel sweep timing"};
  std::string fixture = "product";
  int samples = 200;
  int trials = 2000;
  int rank = 6;
  app.add_option("--fixture", fixture, "catalog bundle to certify");
  app.add_option("--samples", samples, "certification sample points");
  app.add_option("--trials", trials, "harness trials per family");
  app.add_option("--rank", rank, "harness rank");
  CLI11_PARSE(app, argc, argv);

  const hodge::Fixture f = hodge::build_fixture(fixture);

  std::printf("threads available: %d (OpenMP %s)\n\n", hodge::max_threads(),
              hodge::parallel_available() ? "on" : "off");
  std::printf("%-34s %10s %10s %8s %10s\n", "workload", "serial ms",
              "parallel", "speedup", "identical");

  bool all_identical = true;
  std::string serial_json, parallel_json;
  const double cs = run_certify_ms(f.bundle, hodge::ExecutionPolicy::Serial,
                                   samples, &serial_json);
  const double cp = run_certify_ms(f.bundle, hodge::ExecutionPolicy::Parallel,
                                   samples, &parallel_json);
  all_identical = all_identical && serial_json == parallel_json;
  std::printf("%-34s %10.1f %10.1f %7.2fx %10s\n",
              ("certify " + fixture + " x" + std::to_string(samples)).c_str(),
              cs, cp, cs / cp, serial_json == parallel_json ? "yes" : "NO");

  const double hs = run_harness_ms(rank, trials,
                                   hodge::ExecutionPolicy::Serial,
                                   &serial_json);
  const double hp = run_harness_ms(rank, trials,
                                   hodge::ExecutionPolicy::Parallel,
                                   &parallel_json);
  all_identical = all_identical && serial_json == parallel_json;
  std::printf("%-34s %10.1f %10.1f %7.2fx %10s\n",
              ("harness rank " + std::to_string(rank) + " x" +
               std::to_string(trials))
                  .c_str(),
              hs, hp, hs / hp, serial_json == parallel_json ? "yes" : "NO");

  return all_identical ? 0 : 1;
}
