#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "hodge/bundle_io.hpp"
#include "hodge/certify.hpp"
#include "hodge/errors.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/harness.hpp"
#include "hodge/report.hpp"

using namespace hodge;
namespace fs = std::filesystem;

namespace {

// A minimal valid document the negative tests can mutate one field at a time.
nlohmann::json valid_doc() {
  return nlohmann::json::parse(R"({
    "name": "probe",
    "base_dim": 1,
    "rank": 2,
    "domain": [ { "box": { "re": [-1.0, 1.0], "im": [0.5, 1.5] } } ],
    "theta": [ [ ["0", "1"], ["0", "0"] ] ],
    "h": [ ["1", "0"], ["0", "1"] ],
    "samples": { "count": 8, "seed": 3 }
  })");
}

bool has_issue(const ValidationError& e, const std::string& location,
               const std::string& fragment) {
  for (const auto& issue : e.issues())
    if (issue.location == location &&
        issue.message.find(fragment) != std::string::npos)
      return true;
  return false;
}

std::string issue_dump(const ValidationError& e) {
  std::string out;
  for (const auto& issue : e.issues())
    out += issue.location + ": " + issue.message + "\n";
  return out;
}

CertifyOptions small_budget() {
  CertifyOptions opt;
  opt.sample_count = 20;
  opt.route_samples = 10;
  opt.bisect_samples = 4;
  opt.bisect_pairs = 40;
  opt.random_directions = 40;
  opt.structure_points = 3;
  return opt;
}

}  // namespace

TEST_CASE("fixture JSON survives a round trip") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    const Fixture fx = build_fixture(name);
    const std::string text = bundle_to_json(fx.bundle);
    const HiggsBundleChart reloaded = bundle_from_json(text);
    CHECK(reloaded == fx.bundle);
    CHECK(bundle_to_json(reloaded) == text);
  }
}

TEST_CASE("serialization is canonical") {
  const Fixture fx = build_fixture("uniformizing");
  const std::string a = bundle_to_json(fx.bundle);
  const std::string b = bundle_to_json(fx.bundle);
  CHECK(a == b);
  CHECK(!a.empty());
  CHECK(a.back() == '\n');

  // Fixed key order, canonical expression strings.
  const auto pos = [&a](const char* key) { return a.find(key); };
  CHECK(pos("\"name\"") < pos("\"base_dim\""));
  CHECK(pos("\"base_dim\"") < pos("\"rank\""));
  CHECK(pos("\"rank\"") < pos("\"domain\""));
  CHECK(pos("\"domain\"") < pos("\"theta\""));
  CHECK(pos("\"theta\"") < pos("\"h\""));
  CHECK(pos("\"h\"") < pos("\"samples\""));
  CHECK(a.find("\"half_plane\"") != std::string::npos);
  CHECK(a.find("2i / (t1 - conj(t1))") != std::string::npos);
  CHECK(a.find("(t1 - conj(t1)) / 2i") != std::string::npos);
}

TEST_CASE("emit and load through files") {
  const fs::path dir = fs::temp_directory_path() / "hodge-io-tests";
  fs::create_directories(dir);
  const fs::path path = dir / "product.json";

  emit_fixture("product", path.string());
  const HiggsBundleChart loaded = load_bundle(path.string());
  CHECK(loaded == build_fixture("product").bundle);

  CHECK_THROWS_AS(load_bundle((dir / "missing.json").string()), Error);
  CHECK_THROWS_AS(build_fixture("nope"), UnknownFixtureError);
  CHECK_THROWS_AS(emit_fixture("nope", (dir / "x.json").string()),
                  UnknownFixtureError);
  CHECK(is_fixture_name("zero"));
  CHECK(!is_fixture_name("nope"));

  fs::remove_all(dir);
}

TEST_CASE("loader pinpoints a non-Hermitian metric") {
  nlohmann::json doc = valid_doc();
  doc["h"] = nlohmann::json::parse(R"([["1", "0.3"], ["0.1", "1"]])");
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.h[0][1]", "not the conjugate of its mirror"));
  }
}

TEST_CASE("loader pinpoints bad Higgs field entries") {
  nlohmann::json doc = valid_doc();
  doc["theta"][0][0][1] = "conj(t1)";
  doc["theta"][0][1][0] = "t2";
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.theta[0][0][1]", "not holomorphic"));
    CHECK(has_issue(e, "$.theta[0][1][0]",
                    "references a coordinate beyond base_dim"));
  }
}

TEST_CASE("loader rejects out-of-range coordinates in the metric") {
  nlohmann::json doc = valid_doc();
  doc["h"][0][0] = "t2";
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.h[0][0]",
                    "references a coordinate beyond base_dim"));
  }
}

TEST_CASE("loader aggregates shape and range problems") {
  nlohmann::json doc = valid_doc();
  doc["base_dim"] = 0;
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.base_dim", "between 1 and 4"));
  }

  doc = valid_doc();
  doc["rank"] = 17;
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.rank", "between 1 and 16"));
  }

  doc = valid_doc();
  doc["theta"][0] = {{"0", "1"}};  // one row instead of two
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.theta[0]", "2x2"));
  }

  doc = valid_doc();
  doc["samples"]["count"] = 0;
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CAPTURE(issue_dump(e));
    CHECK(has_issue(e, "$.samples.count", "positive integer"));
  }

  CHECK_THROWS_AS(bundle_from_json("[]"), ValidationError);
}

TEST_CASE("loader rejects a metric that fails positivity downstream") {
  // Passes every structural check, fails the numeric validation sweep.
  nlohmann::json doc = valid_doc();
  doc["h"][1][1] = "(t1 - conj(t1)) / 2i - 1";  // Im t - 1 < 0 on the box
  CHECK_THROWS_AS(bundle_from_json(doc.dump()), ValidationError);
}

TEST_CASE("expression errors carry their JSON path") {
  nlohmann::json doc = valid_doc();
  doc["h"][0][0] = "2 +";
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.detail().rfind("$.h[0][0]: ", 0) == 0);
    CHECK(e.line() == 1);
    CHECK(e.column() >= 3);
  }

  doc = valid_doc();
  doc["theta"][0][0][0] = "t0";
  try {
    bundle_from_json(doc.dump());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.detail().rfind("$.theta[0][0][0]: ", 0) == 0);
    CHECK(e.detail().find("positive integer") != std::string::npos);
  }
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string text = "{\n  \"name\": \"x\",\n  oops\n}";
  try {
    bundle_from_json(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("certification runs the full checklist in a fixed order") {
  const Fixture fx = build_fixture("uniformizing");
  const CertificationReport rep = certify(fx.bundle, small_budget(), fx.expect);

  const std::vector<std::string> names = {
      "axioms",          "admissibility", "nilpotency",     "flatness",
      "kahler",          "curvature-routes", "semi-negativity", "scalar-trace",
      "hsc-expected",    "hsc-coordinate", "hsc-random",
      "nilpotent-structure"};
  REQUIRE(rep.checks.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    CHECK(rep.checks[i].name == names[i]);

  CHECK(rep.pass());
  for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::Pass);
  CHECK(rep.bundle_name == "uniformizing");
  CHECK(rep.nilpotency == 1);
  CHECK(rep.sample_count == 20);
  CHECK(rep.samples.size() == 20);
  REQUIRE(rep.find("hsc-expected") != nullptr);
  CHECK(rep.find("hsc-expected")->status == CheckStatus::Pass);
  CHECK(rep.find("missing") == nullptr);
}

TEST_CASE("certification skips honestly on the degenerate bundle") {
  const Fixture fx = build_fixture("zero");
  const CertificationReport rep = certify(fx.bundle, small_budget(), fx.expect);

  CHECK(rep.pass());  // skips are reported, not asserted
  CHECK(rep.nilpotency == 0);

  const CheckRecord* adm = rep.find("admissibility");
  REQUIRE(adm != nullptr);
  CHECK(adm->status == CheckStatus::Skipped);
  CHECK(adm->detail ==
        "non-admissible: Hodge semi-metric only; curvature checks skipped");

  for (const char* name :
       {"curvature-routes", "semi-negativity", "scalar-trace",
        "hsc-coordinate", "hsc-random"}) {
    const CheckRecord* c = rep.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Skipped);
  }
  REQUIRE(rep.find("flatness") != nullptr);
  CHECK(rep.find("flatness")->status == CheckStatus::Pass);
  REQUIRE(rep.find("hsc-expected") != nullptr);
  CHECK(rep.find("hsc-expected")->status == CheckStatus::Skipped);
  CHECK(rep.find("hsc-expected")->detail == "no catalog expectation attached");

  // Sample rows exist but carry no route column.
  REQUIRE(!rep.samples.empty());
  for (const auto& row : rep.samples) CHECK(!row.has_routes);
}

TEST_CASE("certification fails the nonflat control and nothing upstream") {
  const Fixture fx = build_fixture("nonflat-control");
  const CertificationReport rep = certify(fx.bundle, small_budget(), fx.expect);

  CHECK(!rep.pass());

  const CheckRecord* flat = rep.find("flatness");
  REQUIRE(flat != nullptr);
  CHECK(flat->status == CheckStatus::Fail);
  CHECK(std::abs(flat->stat - std::sqrt(2.0)) <= 1e-9);

  for (const char* name : {"axioms", "admissibility", "nilpotency"}) {
    const CheckRecord* c = rep.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Pass);
  }

  // Everything conditioned on flatness steps aside rather than asserting.
  const CheckRecord* kahler = rep.find("kahler");
  REQUIRE(kahler != nullptr);
  CHECK(kahler->status == CheckStatus::Skipped);
  CHECK(kahler->detail.find("not flat") != std::string::npos);

  const CheckRecord* routes = rep.find("curvature-routes");
  REQUIRE(routes != nullptr);
  CHECK(routes->status == CheckStatus::Skipped);
  CHECK(routes->detail.find("not flat") != std::string::npos);

  const CheckRecord* sn = rep.find("semi-negativity");
  REQUIRE(sn != nullptr);
  CHECK(sn->status == CheckStatus::Skipped);
  CHECK(sn->detail.find("asserted only for flat bundles") !=
        std::string::npos);
}

TEST_CASE("certification reports render deterministically") {
  const Fixture fx = build_fixture("sym2");
  CertifyOptions opt = small_budget();

  const CertificationReport a = certify(fx.bundle, opt, fx.expect);
  const CertificationReport b = certify(fx.bundle, opt, fx.expect);
  CHECK(render_json(a) == render_json(b));

  opt.policy = ExecutionPolicy::Serial;
  const CertificationReport c = certify(fx.bundle, opt, fx.expect);
  CHECK(render_json(a) == render_json(c));

  const std::string text = render_text(a);
  CHECK(text.find("verdict: PASS") != std::string::npos);
  CHECK(text.find("sym2") != std::string::npos);

  const std::string csv = render_csv(a);
  CHECK(csv.rfind("index,t1_re,t1_im,flatness,kahler,route_disagreement\n",
                  0) == 0);
  // header + one line per sample
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        1 + static_cast<long>(a.samples.size()));
}

TEST_CASE("harness rejects out-of-range ranks and allows empty runs") {
  HarnessOptions opt;
  opt.trials = 1;
  opt.rank = 1;
  CHECK_THROWS_AS(run_nilpotent_harness(opt), DomainError);
  opt.rank = 17;
  CHECK_THROWS_AS(run_nilpotent_harness(opt), DomainError);

  opt.rank = 2;
  opt.trials = 0;
  const HarnessReport rep = run_nilpotent_harness(opt);
  CHECK(rep.pass());
  CHECK(rep.constructed.count == 0);
  CHECK(rep.general.count == 0);
  CHECK(!rep.shift_block.present);
}

TEST_CASE("harness reports are byte-stable across execution policies") {
  HarnessOptions opt;
  opt.rank = 3;
  opt.trials = 30;
  opt.seed = 11;

  const HarnessReport par = run_nilpotent_harness(opt);
  opt.policy = ExecutionPolicy::Serial;
  const HarnessReport ser = run_nilpotent_harness(opt);

  CHECK(par.pass());
  CHECK(render_json(par) == render_json(ser));
  CHECK(par.constructed.count == 30);
  CHECK(par.constructed.min_margin >= -1e-9);
  REQUIRE(par.shift_block.present);
  CHECK(std::abs(par.shift_block.lhs - std::sqrt(2.0)) <= 1e-9);
  CHECK(std::abs(par.shift_block.m1 - std::sqrt(2.0)) <= 1e-9);

  const std::string text = render_text(par);
  CHECK(text.find("rank: 3") != std::string::npos);
  CHECK(text.find("shift block") != std::string::npos);
}
