#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hodge/bundle_io.hpp"
#include "hodge/certify.hpp"
#include "hodge/errors.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/harness.hpp"
#include "hodge/report.hpp"

namespace {

void write_or_print(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hodge::Error("cannot open \"" + out_path + "\" for writing");
  out << content;
  if (!out) throw hodge::Error("failed writing \"" + out_path + "\"");
}

int run_check(const std::string& file, std::optional<int> samples,
              std::optional<std::uint64_t> seed, double tol_abs,
              double tol_rel, const std::string& format,
              const std::string& out_path, const std::string& csv_path,
              bool serial) {
  const hodge::HiggsBundleChart bundle = hodge::load_bundle(file);

  hodge::CertifyOptions opt;
  opt.sample_count = samples;
  opt.seed = seed;
  opt.tol_abs = tol_abs;
  opt.tol_rel = tol_rel;
  opt.policy = serial ? hodge::ExecutionPolicy::Serial
                      : hodge::ExecutionPolicy::Parallel;

  std::optional<hodge::FixtureExpectations> expect;
  if (hodge::is_fixture_name(bundle.name())) {
    const hodge::Fixture fixture = hodge::build_fixture(bundle.name());
    if (fixture.bundle == bundle) expect = fixture.expect;
  }

  const hodge::CertificationReport report =
      hodge::certify(bundle, opt, expect);
  write_or_print(format == "json" ? hodge::render_json(report)
                                  : hodge::render_text(report),
                 out_path);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv)
      throw hodge::Error("cannot open \"" + csv_path + "\" for writing");
    csv << hodge::render_csv(report);
  }
  return report.pass() ? 0 : 1;
}

int run_fixtures_list() {
  std::ostringstream out;
  out << "name                    base_dim  rank  k  flat  admissible  "
         "HSC             bound\n";
  for (const auto& name : hodge::fixture_names()) {
    const hodge::Fixture f = hodge::build_fixture(name);
    std::string padded = name;
    padded.resize(22, ' ');
    out << padded << "  " << f.bundle.base_dim() << "         "
        << f.bundle.rank() << "     " << f.expect.nilpotency << "  "
        << (f.expect.flat ? "yes " : "no  ") << "  "
        << (f.expect.admissible ? "yes       " : "no        ") << "  ";
    std::string hsc = f.expect.hsc ? hodge::format_number(*f.expect.hsc)
                                   : std::string("-");
    hsc.resize(14, ' ');
    out << hsc << "  "
        << (f.expect.hsc_bound ? hodge::format_number(*f.expect.hsc_bound)
                               : std::string("-"))
        << "\n";
  }
  std::cout << out.str();
  return 0;
}

int run_fixtures_emit(const std::string& name, const std::string& path) {
  hodge::emit_fixture(name, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_harness(int rank, int trials, std::uint64_t seed,
                const std::string& format, const std::string& out_path,
                bool serial) {
  hodge::HarnessOptions opt;
  opt.rank = rank;
  opt.trials = trials;
  opt.seed = seed;
  opt.policy = serial ? hodge::ExecutionPolicy::Serial
                      : hodge::ExecutionPolicy::Parallel;
  const hodge::HarnessReport report = hodge::run_nilpotent_harness(opt);
  write_or_print(format == "json" ? hodge::render_json(report)
                                  : hodge::render_text(report),
                 out_path);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form Higgs bundle metric and curvature checks"};
  app.set_version_flag("--version", std::string(hodge::kToolVersion));
  app.require_subcommand(1);

  std::string file, out_path, csv_path, format = "text";
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  double tol_abs = 1e-9, tol_rel = 1e-6;
  bool serial = false;

  CLI::App* check = app.add_subcommand("check", "certify a bundle file");
  check->add_option("file", file, "bundle JSON file")->required();
  check->add_option("--samples", samples, "sample point budget");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--tol-abs", tol_abs, "absolute residual tolerance");
  check->add_option("--tol-rel", tol_rel, "relative agreement tolerance");
  check->add_option("--report", format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--out", out_path, "write the report to a file");
  check->add_option("--csv", csv_path, "write per-sample values to a file");
  check->add_flag("--serial", serial, "single-threaded reference sweeps");

  CLI::App* fixtures = app.add_subcommand("fixtures", "catalog bundles");
  fixtures->require_subcommand(1);
  CLI::App* list = fixtures->add_subcommand("list", "list the catalog");
  std::string fixture_name, fixture_path;
  CLI::App* emit =
      fixtures->add_subcommand("emit", "write a catalog bundle to a file");
  emit->add_option("name", fixture_name, "fixture name")->required();
  emit->add_option("path", fixture_path, "output file")->required();

  int rank = 4, trials = 1000;
  std::uint64_t harness_seed = 7;
  CLI::App* harness = app.add_subcommand(
      "nilpotent-harness", "randomized nilpotent trace-chain property run");
  harness->add_option("--rank", rank, "matrix rank (2..16)");
  harness->add_option("--trials", trials, "trials per instance family");
  harness->add_option("--seed", harness_seed, "generator seed");
  harness->add_option("--report", format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  harness->add_option("--out", out_path, "write the report to a file");
  harness->add_flag("--serial", serial, "single-threaded reference sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return run_check(file, samples, seed, tol_abs, tol_rel, format,
                       out_path, csv_path, serial);
    if (list->parsed()) return run_fixtures_list();
    if (emit->parsed()) return run_fixtures_emit(fixture_name, fixture_path);
    if (harness->parsed())
      return run_harness(rank, trials, harness_seed, format, out_path,
                         serial);
  } catch (const hodge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
