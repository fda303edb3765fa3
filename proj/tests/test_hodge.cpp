#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "hodge/bundle.hpp"
#include "hodge/expr.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/hodge.hpp"
#include "support/fd_oracle.hpp"

using namespace hodge;
using hodge::testing::fd_wirtinger;
using hodge::testing::rel_gap;

namespace {

Vec random_direction(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g;
  Vec v(m);
  for (int i = 0; i < m; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

double tensor_gap(const BaseCurvatureSample& a, const BaseCurvatureSample& b) {
  const int m = a.base_dim();
  double worst = 0.0;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int p = 0; p < m; ++p) {
          const Complex x = a.at(j, k, l, p);
          const Complex y = b.at(j, k, l, p);
          const double diff = std::abs(x - y);
          if (diff <= 1e-9) continue;  // absolute floor near zero
          worst = std::max(worst,
                           diff / std::max(std::abs(x), std::abs(y)));
        }
  return worst;
}

ExprMatrix matrix_of(std::vector<std::vector<std::string>> rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(rows[0].size());
  ExprMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = parse_expr(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("Hodge metric closed forms") {
  const Fixture uni = build_fixture("uniformizing");
  for (double y : {0.5, 1.0, 1.7}) {
    const Mat g = hodge_metric(uni.bundle, {Complex(0.3, y)});
    CHECK(std::abs(g(0, 0) - Complex(1.0 / (4.0 * y * y), 0.0)) <= 1e-13);
  }

  const Fixture s2 = build_fixture("sym2");
  for (double y : {0.5, 1.0, 1.7}) {
    const Mat g = hodge_metric(s2.bundle, {Complex(-0.2, y)});
    CHECK(std::abs(g(0, 0) - Complex(1.0 / (y * y), 0.0)) <= 1e-13);
  }

  const Fixture prod = build_fixture("product");
  const double y1 = 0.8, y2 = 1.3;
  const Mat g = hodge_metric(prod.bundle, {Complex(0.1, y1), Complex(0.4, y2)});
  CHECK(std::abs(g(0, 0) - Complex(1.0 / (4.0 * y1 * y1), 0.0)) <= 1e-13);
  CHECK(std::abs(g(1, 1) - Complex(1.0 / (4.0 * y2 * y2), 0.0)) <= 1e-13);
  CHECK(std::abs(g(0, 1)) <= 1e-15);

  const Fixture zero = build_fixture("zero");
  CHECK(hodge_metric(zero.bundle, {Complex(0.2, 0.1)}).norm() == 0.0);
}

TEST_CASE("Hodge metric derivatives match finite differences") {
  for (const std::string name : {"uniformizing", "sym2", "product"}) {
    const Fixture fx = build_fixture(name);
    const int m = fx.bundle.base_dim();
    for (const BasePoint& t : fx.bundle.sample_points(10, 17)) {
      const PointFrame frame(fx.bundle, t);
      const MetricDerivatives md = hodge_metric_derivatives(frame);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          auto entry = [&](const BasePoint& q) {
            return hodge_metric(fx.bundle, q)(a, b);
          };
          for (int l = 0; l < m; ++l) {
            CHECK(rel_gap(md.dg[l](a, b),
                          fd_wirtinger(entry, t, l, Wirtinger::Holomorphic)) <=
                  1e-6);
            CHECK(rel_gap(md.dg_bar[l](a, b),
                          fd_wirtinger(entry, t, l,
                                       Wirtinger::Antiholomorphic)) <= 1e-6);
            // mixed second derivative: difference the symbolic first one
            for (int k = 0; k < m; ++k) {
              auto dl_entry = [&](const BasePoint& q) {
                const PointFrame fq(fx.bundle, q);
                return hodge_metric_derivatives(fq).dg[l](a, b);
              };
              CHECK(rel_gap(md.d2g[l][k](a, b),
                            fd_wirtinger(dl_entry, t, k,
                                         Wirtinger::Antiholomorphic)) <= 1e-6);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Kahler residual") {
  // one base dimension: the symmetry is vacuous, the residual identically 0
  for (const std::string name : {"uniformizing", "sym2", "zero"}) {
    const Fixture fx = build_fixture(name);
    for (const BasePoint& t : fx.bundle.sample_points(10, 23))
      CHECK(kahler_residual(fx.bundle, t) == 0.0);
  }

  const Fixture prod = build_fixture("product");
  for (const BasePoint& t : prod.bundle.sample_points(20, 23))
    CHECK(kahler_residual(prod.bundle, t) <= 1e-12);

  // dependent field components break the derivative symmetry: theta_2 =
  // t1 theta_1 gives d_1 G_{2 kbar} - d_2 G_{1 kbar} = 1 at every point
  auto t1 = matrix_of({{"0", "1"}, {"0", "0"}});
  auto t2 = matrix_of({{"0", "t1"}, {"0", "0"}});
  const HiggsBundleChart skew(
      "skew", 2, 2, {t1, t2}, ExprMatrix::identity(2),
      ChartDomain({CoordinateRange::box(-1, 1, -1, 1),
                   CoordinateRange::box(-1, 1, -1, 1)}),
      SampleSpec{});
  const double res = kahler_residual(skew, {Complex(0.3, 0.1), Complex(0.2, 0.4)});
  CHECK(res == doctest::Approx(1.0));
}

TEST_CASE("direct curvature closed forms") {
  const Fixture uni = build_fixture("uniformizing");
  for (double y : {0.7, 1.0, 1.9}) {
    const auto sample = base_curvature_direct(uni.bundle, {Complex(0.2, y)});
    const double expected = -1.0 / (8.0 * y * y * y * y);
    CHECK(std::abs(sample.at(0, 0, 0, 0) - Complex(expected, 0.0)) <=
          1e-9 * std::abs(expected));
  }

  const Fixture s2 = build_fixture("sym2");
  const auto s2_sample = base_curvature_direct(s2.bundle, {Complex(0.0, 1.0)});
  CHECK(std::abs(s2_sample.at(0, 0, 0, 0) - Complex(-0.5, 0.0)) <= 1e-9);

  // block product: mixed components of the tensor vanish
  const Fixture prod = build_fixture("product");
  const auto psample = base_curvature_direct(
      prod.bundle, {Complex(0.1, 1.1), Complex(-0.3, 0.6)});
  for (int l = 0; l < 2; ++l)
    for (int p = 0; p < 2; ++p) {
      CHECK(std::abs(psample.at(0, 1, l, p)) <= 1e-12);
      CHECK(std::abs(psample.at(1, 0, l, p)) <= 1e-12);
    }
}

TEST_CASE("a constant Hodge metric has zero curvature on every route") {
  // nonflat-control: G = Tr(theta theta^H) = 1 everywhere. The direct and
  // subbundle routes never assume flatness and must agree here.
  const Fixture ctrl = build_fixture("nonflat-control");
  const BasePoint t = {Complex(0.4, -0.2)};
  const auto direct = base_curvature_direct(ctrl.bundle, t);
  const auto sub = base_curvature_subbundle(ctrl.bundle, t);
  CHECK(std::abs(direct.at(0, 0, 0, 0)) <= 1e-12);
  CHECK(std::abs(sub.at(0, 0, 0, 0)) <= 1e-12);
  CHECK(std::abs(direct.metric()(0, 0) - Complex(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("flat formula refuses non-harmonic metrics") {
  const Fixture ctrl = build_fixture("nonflat-control");
  const BasePoint t = {Complex(0.1, 0.5)};
  CHECK_THROWS_AS(base_curvature_flat_formula(ctrl.bundle, t), NotFlatError);
  try {
    base_curvature_flat_formula(ctrl.bundle, t);
  } catch (const NotFlatError& e) {
    CHECK(e.residual() == doctest::Approx(std::sqrt(2.0)));
  }
}

TEST_CASE("curvature routes refuse degenerate Hodge metrics") {
  const Fixture zero = build_fixture("zero");
  const BasePoint t0 = {Complex(0.3, 0.2)};
  CHECK_THROWS_AS(base_curvature_direct(zero.bundle, t0), DegenerateGram);

  const Fixture dup = build_fixture("nonadmissible-control");
  const BasePoint t1 = {Complex(0.3, 0.2), Complex(-0.1, 0.4)};
  CHECK_THROWS_AS(base_curvature_subbundle(dup.bundle, t1), DegenerateGram);
  CHECK_THROWS_AS(base_curvature_direct(dup.bundle, t1), DegenerateGram);
}

TEST_CASE("three curvature routes agree on the flat fixtures") {
  for (const std::string name : {"uniformizing", "sym2", "product"}) {
    const Fixture fx = build_fixture(name);
    for (const BasePoint& t : fx.bundle.sample_points(10, 31)) {
      const PointFrame frame(fx.bundle, t);
      const auto direct = base_curvature_direct(frame);
      const auto sub = base_curvature_subbundle(frame);
      const auto flat = base_curvature_flat_formula(frame);
      CAPTURE(name);
      CHECK(tensor_gap(direct, sub) <= 1e-6);
      CHECK(tensor_gap(direct, flat) <= 1e-6);
      CHECK(tensor_gap(sub, flat) <= 1e-6);
    }
  }
}

TEST_CASE("bisectional form is semi-negative on the flat fixtures") {
  std::mt19937_64 rng(67);
  for (const std::string name : {"uniformizing", "sym2", "product"}) {
    const Fixture fx = build_fixture(name);
    const int m = fx.bundle.base_dim();
    for (const BasePoint& t : fx.bundle.sample_points(5, 41)) {
      const auto sample = base_curvature_direct(fx.bundle, t);
      for (int i = 0; i < 200; ++i) {
        const Vec xi = random_direction(rng, m);
        const Vec v = random_direction(rng, m);
        double imag = 0.0;
        const double b = bisectional_form(sample, xi, v, &imag);
        CHECK(b <= 1e-10);
        CHECK(imag <= 1e-12 * std::max(1.0, std::abs(b)));
      }
      double trace_imag = 0.0;
      CHECK(scalar_trace_check(sample, &trace_imag) <= 1e-10);
      CHECK(trace_imag <= 1e-12);
    }
  }
}

TEST_CASE("scalar trace closed form on the product fixture") {
  const Fixture prod = build_fixture("product");
  const auto sample = base_curvature_direct(
      prod.bundle, {Complex(0.0, 1.0), Complex(0.0, 1.0)});
  // each factor contributes R(dt, dt) = -1/8 at y = 1
  CHECK(scalar_trace_check(sample) == doctest::Approx(-0.25));
}

TEST_CASE("holomorphic sectional curvature of the catalog") {
  const Fixture uni = build_fixture("uniformizing");
  for (const BasePoint& t : uni.bundle.sample_points(10, 43)) {
    Vec v(1);
    v(0) = Complex(1.0, 0.0);
    const double hsc = holomorphic_sectional_curvature(uni.bundle, t, v);
    CHECK(hsc == doctest::Approx(-2.0).epsilon(1e-9));
    // scale invariance in the direction
    v(0) = Complex(-2.4, 1.7);
    CHECK(holomorphic_sectional_curvature(uni.bundle, t, v) ==
          doctest::Approx(-2.0).epsilon(1e-9));
  }

  const Fixture s2 = build_fixture("sym2");
  Vec w(1);
  w(0) = Complex(0.3, -0.8);
  CHECK(holomorphic_sectional_curvature(s2.bundle, {Complex(0.4, 1.2)}, w) ==
        doctest::Approx(-0.5).epsilon(1e-9));

  const Fixture prod = build_fixture("product");
  const BasePoint tp = {Complex(0.0, 1.0), Complex(0.0, 1.0)};
  Vec e1 = Vec::Zero(2), e2 = Vec::Zero(2), diag = Vec::Zero(2);
  e1(0) = 1.0;
  e2(1) = 1.0;
  diag(0) = diag(1) = 1.0;
  CHECK(holomorphic_sectional_curvature(prod.bundle, tp, e1) ==
        doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(holomorphic_sectional_curvature(prod.bundle, tp, e2) ==
        doctest::Approx(-2.0).epsilon(1e-9));
  // equal mix of the two factors: R = -1/4, (v,v) = 1/2, HSC = -1
  CHECK(holomorphic_sectional_curvature(prod.bundle, tp, diag) ==
        doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("sectional curvature stays under the nilpotency bound") {
  std::mt19937_64 rng(71);
  struct Row {
    const char* name;
    double bound;
  };
  for (const Row row : {Row{"uniformizing", -0.5}, Row{"sym2", -1.0 / 12.0},
                        Row{"product", -0.25}}) {
    const Fixture fx = build_fixture(row.name);
    const int m = fx.bundle.base_dim();
    for (const BasePoint& t : fx.bundle.sample_points(3, 47)) {
      const auto sample = base_curvature_direct(fx.bundle, t);
      for (int i = 0; i < 200; ++i) {
        const Vec v = random_direction(rng, m);
        CHECK(holomorphic_sectional_curvature(sample, v) <=
              row.bound + 1e-8);
      }
    }
  }
}

TEST_CASE("HSC consistency with the bisectional pairing") {
  const Fixture prod = build_fixture("product");
  const BasePoint t = {Complex(0.2, 0.9), Complex(-0.4, 1.4)};
  const auto sample = base_curvature_direct(prod.bundle, t);
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const Vec v = random_direction(rng, 2);
    const double den = std::norm(sample.pair(v, v));
    CHECK(rel_gap(holomorphic_sectional_curvature(sample, v),
                  bisectional_form(sample, v, v) / den) <= 1e-10);
  }
}

TEST_CASE("scaling the field scales the curvature, scaling h does nothing") {
  // theta doubled: G gains |c|^2 = 4, HSC drops by 1/|c|^2 to -1/2. The
  // doubled field is no longer harmonic for the same h, which only the flat
  // route cares about.
  auto theta2 = matrix_of({{"0", "1"}, {"0", "0"}});
  auto h = matrix_of({{"2i / (t1 - conj(t1))", "0"},
                      {"0", "(t1 - conj(t1)) / 2i"}});
  const HiggsBundleChart scaled(
      "scaled", 1, 2, {theta2}, h,
      ChartDomain({CoordinateRange::upper_half_plane(0.2, 2.2, -1.5, 1.5)}),
      SampleSpec{});
  const BasePoint t = {Complex(0.3, 1.1)};
  Vec v(1);
  v(0) = 1.0;
  const double y = 1.1;
  CHECK(std::abs(hodge_metric(scaled, t)(0, 0) -
                 Complex(1.0 / (y * y), 0.0)) <= 1e-13);
  CHECK(holomorphic_sectional_curvature(scaled, t, v) ==
        doctest::Approx(-0.5).epsilon(1e-9));

  // fibre metric doubled: adjoints, G, and curvature are all unchanged
  auto h2 = matrix_of({{"4i / (t1 - conj(t1))", "0"},
                       {"0", "(t1 - conj(t1)) / i"}});
  auto theta = matrix_of({{"0", "0.5"}, {"0", "0"}});
  const HiggsBundleChart rescaled(
      "rescaled", 1, 2, {theta}, h2,
      ChartDomain({CoordinateRange::upper_half_plane(0.2, 2.2, -1.5, 1.5)}),
      SampleSpec{});
  const Fixture uni = build_fixture("uniformizing");
  CHECK(std::abs(hodge_metric(rescaled, t)(0, 0) -
                 hodge_metric(uni.bundle, t)(0, 0)) <= 1e-14);
  CHECK(holomorphic_sectional_curvature(rescaled, t, v) ==
        doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(flatness_residual(rescaled, t) <= 1e-12);
}
