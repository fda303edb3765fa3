#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <doctest.h>

#include "hodge/expr.hpp"
#include "support/fd_oracle.hpp"
#include "support/random_expr.hpp"

using namespace hodge;
using hodge::testing::fd_wirtinger;
using hodge::testing::RandomExpr;
using hodge::testing::rel_gap;

namespace {

const Complex I(0.0, 1.0);

ScalarExpr t(int j) { return ScalarExpr::coord(j); }
ScalarExpr c(double re, double im = 0.0) {
  return ScalarExpr::constant(Complex(re, im));
}

std::vector<BasePoint> probe_points_1d() {
  return {{Complex(0.3, 0.7)},
          {Complex(-1.1, 0.4)},
          {Complex(0.9, -0.6)},
          {Complex(2.0, 1.5)}};
}

}  // namespace

TEST_CASE("constant folding and absorption") {
  CHECK((c(2) + c(3)).kind() == ExprKind::Constant);
  CHECK((c(2) + c(3)).constant_value() == Complex(5.0, 0.0));
  CHECK((c(0) + t(0)) == t(0));
  CHECK((c(1) * t(0)) == t(0));
  CHECK((c(0) * t(0)).is_zero());
  CHECK(pow(t(0), 0).is_one());
  CHECK(pow(t(0), 1) == t(0));
  CHECK((t(0) - t(0)).is_zero() == false);  // no global simplification
}

TEST_CASE("evaluation matches hand computation") {
  const ScalarExpr e = (t(0) * t(0) + c(3, 0) * t(0) + c(0, 1)) / t(1);
  const BasePoint p = {Complex(1.0, 2.0), Complex(0.0, -1.0)};
  const Complex z = p[0];
  const Complex expected = (z * z + 3.0 * z + I) / p[1];
  CHECK(std::abs(eval(e, p) - expected) <= 1e-15 * std::abs(expected));
}

TEST_CASE("division by zero reports SingularEval") {
  const ScalarExpr e = c(1) / t(0);
  CHECK_THROWS_AS(eval(e, {Complex(0.0, 0.0)}), SingularEval);
  CHECK_THROWS_AS(eval(pow(t(0), -2), {Complex(0.0, 0.0)}), SingularEval);
  CHECK(eval(pow(t(0), -2), {Complex(2.0, 0.0)}) == Complex(0.25, 0.0));
}

TEST_CASE("missing coordinate reports DomainError") {
  CHECK_THROWS_AS(eval(t(1), {Complex(1.0, 0.0)}), DomainError);
}

TEST_CASE("conjugation pushes through to the leaves") {
  const ScalarExpr e = t(0) * t(1) + c(0, 2);
  const ScalarExpr bar = conj(e);
  // No Conj node exists; the structure mirrors the original with CoordBar
  // leaves and conjugated constants.
  CHECK(bar.kind() == ExprKind::Sum);
  CHECK(bar.lhs().kind() == ExprKind::Product);
  CHECK(bar.lhs().lhs().kind() == ExprKind::CoordBar);
  CHECK(bar.rhs().constant_value() == Complex(0.0, -2.0));
  CHECK(conj(bar) == e);
  CHECK(conj(ScalarExpr::coord_bar(3)) == ScalarExpr::coord(3));
}

TEST_CASE("conjugated trees evaluate to the conjugate value") {
  RandomExpr gen(101, 2, true);
  const BasePoint p = {Complex(0.4, 0.9), Complex(-0.7, 0.3)};
  int used = 0;
  for (int i = 0; i < 200; ++i) {
    const ScalarExpr e = gen.tree(4);
    Complex v;
    try {
      v = eval(e, p);
    } catch (const SingularEval&) {
      continue;
    }
    if (!std::isfinite(std::abs(v)) || std::abs(v) > 1e8) continue;
    ++used;
    const Complex vbar = eval(conj(e), p);
    CHECK(std::abs(vbar - std::conj(v)) <= 1e-12 * std::max(1.0, std::abs(v)));
  }
  CHECK(used > 100);
}

TEST_CASE("conj-free trees are structurally holomorphic") {
  RandomExpr gen(202, 2, false);
  for (int i = 0; i < 100; ++i) {
    const ScalarExpr e = gen.tree(4);
    CHECK(e.structurally_holomorphic());
    // The antiholomorphic derivative is the structural zero, not merely a
    // tree that happens to evaluate to zero.
    CHECK(wirtinger(e, 0, Wirtinger::Antiholomorphic).is_zero());
    CHECK(wirtinger(e, 1, Wirtinger::Antiholomorphic).is_zero());
  }
  CHECK_FALSE((t(0) + conj(t(0))).structurally_holomorphic());
}

TEST_CASE("wirtinger derivative basics") {
  // d/dt (t^2 + 3t + 1) = 2t + 3
  const ScalarExpr e = pow(t(0), 2) + c(3) * t(0) + c(1);
  const ScalarExpr de = wirtinger(e, 0, Wirtinger::Holomorphic);
  for (const BasePoint& p : probe_points_1d()) {
    const Complex z = p[0];
    CHECK(std::abs(eval(de, p) - (2.0 * z + 3.0)) <= 1e-14 * std::abs(z));
  }
  // d/dt (1/t) = -1/t^2, d/dt t^-2 = -2 t^-3
  const ScalarExpr dq = wirtinger(c(1) / t(0), 0, Wirtinger::Holomorphic);
  const ScalarExpr dp = wirtinger(pow(t(0), -2), 0, Wirtinger::Holomorphic);
  for (const BasePoint& p : probe_points_1d()) {
    const Complex z = p[0];
    CHECK(std::abs(eval(dq, p) + 1.0 / (z * z)) <= 1e-13);
    CHECK(std::abs(eval(dp, p) + 2.0 / (z * z * z)) <= 1e-13);
  }
  // dbar of conj(t)^2 = 2 conj(t); d of the same is zero
  const ScalarExpr f = pow(ScalarExpr::coord_bar(0), 2);
  CHECK(wirtinger(f, 0, Wirtinger::Holomorphic).is_zero());
  const ScalarExpr df = wirtinger(f, 0, Wirtinger::Antiholomorphic);
  for (const BasePoint& p : probe_points_1d())
    CHECK(std::abs(eval(df, p) - 2.0 * std::conj(p[0])) <= 1e-14);
  // cross-coordinate: d/dt1 t2 = 0, dbar/dt1 conj(t2) = 0
  CHECK(wirtinger(t(1), 0, Wirtinger::Holomorphic).is_zero());
  CHECK(wirtinger(conj(t(1)), 0, Wirtinger::Antiholomorphic).is_zero());
}

TEST_CASE("wirtinger derivatives agree with central differences") {
  RandomExpr gen(303, 2, true);
  const std::vector<BasePoint> points = {{Complex(0.5, 0.8), Complex(1.1, -0.4)},
                                         {Complex(-0.9, 0.35), Complex(0.2, 0.6)}};
  int used = 0;
  for (int i = 0; i < 150; ++i) {
    const ScalarExpr e = gen.tree(4);
    for (const BasePoint& p : points) {
      try {
        if (std::abs(eval(e, p)) > 1e3) continue;
      } catch (const SingularEval&) {
        continue;
      }
      for (int j = 0; j < 2; ++j) {
        for (const Wirtinger dir :
             {Wirtinger::Holomorphic, Wirtinger::Antiholomorphic}) {
          Complex sym;
          Complex fd;
          try {
            sym = eval(wirtinger(e, j, dir), p);
            fd = fd_wirtinger([&](const BasePoint& q) { return eval(e, q); },
                              p, j, dir);
          } catch (const SingularEval&) {
            continue;
          }
          // Poles near the stencil wreck the difference quotient; a large
          // symbolic value is the cheap proxy for that.
          if (!std::isfinite(std::abs(sym)) || std::abs(sym) > 1e4) continue;
          if (!std::isfinite(std::abs(fd))) continue;
          ++used;
          CHECK(rel_gap(sym, fd) <= 2e-7);
        }
      }
    }
  }
  CHECK(used > 400);
}

TEST_CASE("printing parses back to the identical tree") {
  RandomExpr gen(404, 3, true);
  for (int i = 0; i < 300; ++i) {
    const ScalarExpr e = gen.tree(4);
    const std::string text = to_string(e);
    CAPTURE(text);
    CHECK(parse_expr(text) == e);
  }
}

TEST_CASE("parser accepts the documented grammar") {
  CHECK(parse_expr("t1") == t(0));
  CHECK(parse_expr("conj(t2)") == ScalarExpr::coord_bar(1));
  CHECK(parse_expr("i").constant_value() == I);
  CHECK(parse_expr("2.5i").constant_value() == Complex(0.0, 2.5));
  CHECK(parse_expr("-t1") == (-t(0)));
  CHECK(parse_expr("t1 - t2") == (t(0) - t(1)));
  CHECK(parse_expr("t1^-2") == pow(t(0), -2));
  // precedence: ^ over * over +
  CHECK(parse_expr("t1 + t2 * t1^2") == (t(0) + t(1) * pow(t(0), 2)));
  CHECK(parse_expr("(t1 + t2) * t1") == ((t(0) + t(1)) * t(0)));
  CHECK(parse_expr(" 2i / ( t1 - conj( t1 ) ) ") ==
        (c(0, 2) / (t(0) - conj(t(0)))));
  // left association of - and /
  const ScalarExpr chain = parse_expr("t1 - t2 - t1");
  CHECK(eval(chain, {Complex(1, 0), Complex(5, 0)}) == Complex(-5.0, 0.0));
  const ScalarExpr quot = parse_expr("8 / t1 / t2");
  CHECK(eval(quot, {Complex(2, 0), Complex(2, 0)}) == Complex(2.0, 0.0));
}

TEST_CASE("parse errors carry location and expectations") {
  try {
    parse_expr("t1 ^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 4);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("(t1"), ParseError);
  CHECK_THROWS_AS(parse_expr("2 +* 3"), ParseError);
  CHECK_THROWS_AS(parse_expr("t0"), ParseError);
  CHECK_THROWS_AS(parse_expr("conj t1"), ParseError);
  CHECK_THROWS_AS(parse_expr("t1 t2"), ParseError);
}

TEST_CASE("coordinate count tracks the highest index used") {
  CHECK(c(4).coord_count() == 0);
  CHECK(t(0).coord_count() == 1);
  CHECK((t(2) * conj(t(0))).coord_count() == 3);
  CHECK(parse_expr("t5").coord_count() == 5);
}
