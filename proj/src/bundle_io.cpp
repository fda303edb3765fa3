#include "hodge/bundle_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hodge/errors.hpp"
#include "hodge/expr.hpp"
#include "hodge/fixtures.hpp"

namespace hodge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool get_int(const ordered_json& j, const std::string& key, int& out,
             std::vector<ValidationIssue>& issues) {
  if (!j.contains(key)) {
    issues.push_back({"$." + key, "missing"});
    return false;
  }
  if (!j.at(key).is_number_integer()) {
    issues.push_back({"$." + key, "must be an integer"});
    return false;
  }
  out = j.at(key).get<int>();
  return true;
}

bool get_double(const ordered_json& j, const std::string& key,
                const std::string& where, double& out,
                std::vector<ValidationIssue>& issues) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    issues.push_back({where + "." + key, "missing or not a number"});
    return false;
  }
  out = j.at(key).get<double>();
  return true;
}

bool get_pair(const ordered_json& j, const std::string& key,
              const std::string& where, double& lo, double& hi,
              std::vector<ValidationIssue>& issues) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2 ||
      !j.at(key)[0].is_number() || !j.at(key)[1].is_number()) {
    issues.push_back({where + "." + key, "must be a [low, high] number pair"});
    return false;
  }
  lo = j.at(key)[0].get<double>();
  hi = j.at(key)[1].get<double>();
  return true;
}

std::optional<CoordinateRange> parse_range(const ordered_json& entry,
                                           const std::string& where,
                                           std::vector<ValidationIssue>& issues) {
  if (!entry.is_object() || entry.size() != 1 ||
      (!entry.contains("box") && !entry.contains("half_plane"))) {
    issues.push_back(
        {where, "must be an object with exactly a \"box\" or \"half_plane\" key"});
    return std::nullopt;
  }
  if (entry.contains("box")) {
    const auto& box = entry.at("box");
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
    bool ok = get_pair(box, "re", where + ".box", re_lo, re_hi, issues);
    ok = get_pair(box, "im", where + ".box", im_lo, im_hi, issues) && ok;
    if (!ok) return std::nullopt;
    if (!(re_lo < re_hi) || !(im_lo < im_hi)) {
      issues.push_back({where + ".box", "ranges must be nonempty"});
      return std::nullopt;
    }
    return CoordinateRange::box(re_lo, re_hi, im_lo, im_hi);
  }
  const auto& hp = entry.at("half_plane");
  double im_min = 0, im_max = 0, re_lo = 0, re_hi = 0;
  bool ok = get_double(hp, "im_min", where + ".half_plane", im_min, issues);
  ok = get_double(hp, "im_max", where + ".half_plane", im_max, issues) && ok;
  ok = get_pair(hp, "re", where + ".half_plane", re_lo, re_hi, issues) && ok;
  if (!ok) return std::nullopt;
  if (!(im_min > 0.0) || !(im_min < im_max) || !(re_lo < re_hi)) {
    issues.push_back({where + ".half_plane",
                      "needs 0 < im_min < im_max and a nonempty re range"});
    return std::nullopt;
  }
  return CoordinateRange::upper_half_plane(im_min, im_max, re_lo, re_hi);
}

ScalarExpr parse_entry(const ordered_json& cell, const std::string& where) {
  if (!cell.is_string())
    throw ValidationError({{where, "must be an expression string"}});
  try {
    return parse_expr(cell.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.line(), e.column(),
                     e.expected());
  }
}

ExprMatrix parse_matrix(const ordered_json& rows, int r,
                        const std::string& where,
                        std::vector<ValidationIssue>& issues) {
  ExprMatrix m(r, r);
  if (!rows.is_array() || static_cast<int>(rows.size()) != r) {
    issues.push_back({where, "must be a " + std::to_string(r) + "x" +
                                 std::to_string(r) + " array of strings"});
    return m;
  }
  for (int i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != r) {
      issues.push_back({where + "[" + std::to_string(i) + "]",
                        "must have " + std::to_string(r) + " entries"});
      continue;
    }
    for (int j = 0; j < r; ++j) {
      m(i, j) = parse_entry(row[static_cast<std::size_t>(j)],
                            where + "[" + std::to_string(i) + "][" +
                                std::to_string(j) + "]");
    }
  }
  return m;
}

}  // namespace

HiggsBundleChart bundle_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    throw ParseError(e.what(), line, col, {});
  }

  std::vector<ValidationIssue> issues;
  if (!j.is_object())
    throw ValidationError(
        std::vector<ValidationIssue>{{"$", "top level must be an object"}});

  std::string name;
  if (!j.contains("name") || !j.at("name").is_string())
    issues.push_back({"$.name", "missing or not a string"});
  else
    name = j.at("name").get<std::string>();

  int m = 0;
  int r = 0;
  bool dims_ok = get_int(j, "base_dim", m, issues);
  dims_ok = get_int(j, "rank", r, issues) && dims_ok;
  if (dims_ok && (m < 1 || m > 4))
    issues.push_back({"$.base_dim", "must be between 1 and 4"}), dims_ok = false;
  if (dims_ok && (r < 1 || r > 16))
    issues.push_back({"$.rank", "must be between 1 and 16"}), dims_ok = false;
  if (!dims_ok) throw ValidationError(std::move(issues));

  std::vector<CoordinateRange> coords;
  if (!j.contains("domain") || !j.at("domain").is_array() ||
      static_cast<int>(j.at("domain").size()) != m) {
    issues.push_back(
        {"$.domain", "must be an array of base_dim coordinate ranges"});
  } else {
    for (int c = 0; c < m; ++c) {
      auto range = parse_range(j.at("domain")[static_cast<std::size_t>(c)],
                               "$.domain[" + std::to_string(c) + "]", issues);
      if (range) coords.push_back(*range);
    }
  }

  std::vector<ExprMatrix> theta;
  if (!j.contains("theta") || !j.at("theta").is_array() ||
      static_cast<int>(j.at("theta").size()) != m) {
    issues.push_back(
        {"$.theta", "must be an array of base_dim rank x rank matrices"});
  } else {
    for (int c = 0; c < m; ++c)
      theta.push_back(parse_matrix(j.at("theta")[static_cast<std::size_t>(c)],
                                   r, "$.theta[" + std::to_string(c) + "]",
                                   issues));
  }

  ExprMatrix h(r, r);
  if (!j.contains("h"))
    issues.push_back({"$.h", "missing"});
  else
    h = parse_matrix(j.at("h"), r, "$.h", issues);

  SampleSpec spec;
  if (j.contains("samples")) {
    const auto& s = j.at("samples");
    if (!s.is_object())
      issues.push_back({"$.samples", "must be an object"});
    else {
      if (s.contains("count")) {
        if (!s.at("count").is_number_integer() || s.at("count").get<int>() < 1)
          issues.push_back({"$.samples.count", "must be a positive integer"});
        else
          spec.count = s.at("count").get<int>();
      }
      if (s.contains("seed")) {
        if (!s.at("seed").is_number_unsigned() &&
            !s.at("seed").is_number_integer())
          issues.push_back({"$.samples.seed", "must be an integer"});
        else
          spec.seed = s.at("seed").get<std::uint64_t>();
      }
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));

  // Structural content checks, aggregated across all entries.
  for (int c = 0; c < m; ++c) {
    const ExprMatrix& th = theta[static_cast<std::size_t>(c)];
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        const std::string where = "$.theta[" + std::to_string(c) + "][" +
                                  std::to_string(a) + "][" +
                                  std::to_string(b) + "]";
        if (!th(a, b).structurally_holomorphic())
          issues.push_back(
              {where, "Higgs field not holomorphic: entry depends on conj(t)"});
        if (th(a, b).coord_count() > m)
          issues.push_back({where, "references a coordinate beyond base_dim"});
      }
  }
  ChartDomain domain(std::move(coords));

  // The Hermitian condition h_ab = conj(h_ba) is checked numerically at
  // probe points: a tree-level mirror comparison would reject legitimate
  // real-valued entries like Im t, whose conjugate is a different tree.
  const std::vector<BasePoint> probe = domain.sample_points(16, spec.seed);
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      const std::string where =
          "$.h[" + std::to_string(a) + "][" + std::to_string(b) + "]";
      if (h(a, b).coord_count() > m || h(b, a).coord_count() > m) {
        issues.push_back({where, "references a coordinate beyond base_dim"});
        continue;
      }
      double defect = 0.0, scale = 0.0;
      int used = 0;
      for (const auto& t : probe) {
        try {
          const Complex va = eval(h(a, b), t);
          const Complex vb = eval(h(b, a), t);
          defect = std::max(defect, std::abs(va - std::conj(vb)));
          scale = std::max(scale, std::abs(va));
          ++used;
        } catch (const SingularEval&) {
          // entry undefined there; positivity checks deal with it later
        }
      }
      if (used > 0 && defect > 1e-9 * std::max(1.0, scale))
        issues.push_back({where, "metric is not Hermitian: entry is not the "
                                 "conjugate of its mirror"});
    }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  HiggsBundleChart bundle(std::move(name), m, r, std::move(theta),
                          std::move(h), std::move(domain), spec);

  // Numeric validation at the bundle's own sample points; structural
  // problems were caught above, this picks up non-commuting components and
  // metrics that fail to be positive somewhere in the domain.
  const ValidationReport report = validate(bundle, bundle.sample_points());
  if (!report.ok()) throw ValidationError(report.issues);

  return bundle;
}

HiggsBundleChart load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("failed reading \"" + path + "\"");
  return bundle_from_json(buffer.str());
}

std::string bundle_to_json(const HiggsBundleChart& bundle) {
  ordered_json j;
  j["name"] = bundle.name();
  j["base_dim"] = bundle.base_dim();
  j["rank"] = bundle.rank();

  ordered_json domain = ordered_json::array();
  for (const CoordinateRange& c : bundle.domain().coords()) {
    ordered_json entry;
    if (c.half_plane) {
      entry["half_plane"] = {{"im_min", c.im_min},
                             {"im_max", c.im_max},
                             {"re", {c.re_min, c.re_max}}};
    } else {
      entry["box"] = {{"re", {c.re_min, c.re_max}},
                      {"im", {c.im_min, c.im_max}}};
    }
    domain.push_back(entry);
  }
  j["domain"] = domain;

  ordered_json theta = ordered_json::array();
  for (int c = 0; c < bundle.base_dim(); ++c) {
    const ExprMatrix& th = bundle.theta(c);
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < bundle.rank(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < bundle.rank(); ++b)
        row.push_back(to_string(th(a, b)));
      rows.push_back(row);
    }
    theta.push_back(rows);
  }
  j["theta"] = theta;

  ordered_json hm = ordered_json::array();
  for (int a = 0; a < bundle.rank(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < bundle.rank(); ++b)
      row.push_back(to_string(bundle.raw_metric()(a, b)));
    hm.push_back(row);
  }
  j["h"] = hm;

  j["samples"] = {{"count", bundle.samples().count},
                  {"seed", bundle.samples().seed}};
  return j.dump(2) + "\n";
}

void emit_fixture(const std::string& name, const std::string& path) {
  const Fixture fixture = build_fixture(name);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open \"" + path + "\" for writing");
  out << bundle_to_json(fixture.bundle);
  if (!out) throw Error("failed writing \"" + path + "\"");
}

}  // namespace hodge
