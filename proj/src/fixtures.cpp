#include "hodge/fixtures.hpp"

#include <initializer_list>

#include "hodge/errors.hpp"
#include "hodge/expr.hpp"

namespace hodge {

namespace {

// y_j = Im t_j written in coordinates, and its reciprocal.
std::string im_coord(int j) {
  const std::string t = "t" + std::to_string(j + 1);
  return "(" + t + " - conj(" + t + ")) / 2i";
}
std::string inv_im_coord(int j) {
  const std::string t = "t" + std::to_string(j + 1);
  return "2i / (" + t + " - conj(" + t + "))";
}

ExprMatrix matrix_of(std::initializer_list<std::initializer_list<std::string>> rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ExprMatrix m(nr, nc);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& cell : row) {
      m(i, j) = parse_expr(cell);
      ++j;
    }
    ++i;
  }
  return m;
}

CoordinateRange half_plane_band() {
  return CoordinateRange::upper_half_plane(0.2, 2.2, -1.5, 1.5);
}

// sqrt(1/2), printed back exactly as written here.
const std::string kHalfSqrt2 = "0.7071067811865476";

Fixture make_uniformizing() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", "0.5"},  //
                             {"0", "0"}}));
  ExprMatrix h = matrix_of({{inv_im_coord(0), "0"},  //
                            {"0", im_coord(0)}});
  HiggsBundleChart bundle("uniformizing", 1, 2, std::move(theta), std::move(h),
                          ChartDomain({half_plane_band()}), SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 1;
  expect.flat = true;
  expect.admissible = true;
  expect.hsc = -2.0;
  expect.hsc_bound = -0.5;
  expect.hsc_direction = {Complex(1.0, 0.0)};
  return Fixture{std::move(bundle), std::move(expect)};
}

Fixture make_sym2() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", kHalfSqrt2, "0"},
                             {"0", "0", kHalfSqrt2},
                             {"0", "0", "0"}}));
  const std::string y = "(" + im_coord(0) + ")";
  ExprMatrix h = matrix_of({{y + "^-2", "0", "0"},
                            {"0", "1", "0"},
                            {"0", "0", y + "^2"}});
  HiggsBundleChart bundle("sym2", 1, 3, std::move(theta), std::move(h),
                          ChartDomain({half_plane_band()}), SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 2;
  expect.flat = true;
  expect.admissible = true;
  expect.hsc = -0.5;
  expect.hsc_bound = -1.0 / 12.0;
  expect.hsc_direction = {Complex(1.0, 0.0)};
  return Fixture{std::move(bundle), std::move(expect)};
}

Fixture make_product() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", "0.5", "0", "0"},
                             {"0", "0", "0", "0"},
                             {"0", "0", "0", "0"},
                             {"0", "0", "0", "0"}}));
  theta.push_back(matrix_of({{"0", "0", "0", "0"},
                             {"0", "0", "0", "0"},
                             {"0", "0", "0", "0.5"},
                             {"0", "0", "0", "0"}}));
  ExprMatrix h = matrix_of({{inv_im_coord(0), "0", "0", "0"},
                            {"0", im_coord(0), "0", "0"},
                            {"0", "0", inv_im_coord(1), "0"},
                            {"0", "0", "0", im_coord(1)}});
  HiggsBundleChart bundle("product", 2, 4, std::move(theta), std::move(h),
                          ChartDomain({half_plane_band(), half_plane_band()}),
                          SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 1;
  expect.flat = true;
  expect.admissible = true;
  expect.hsc = -2.0;
  expect.hsc_bound = -0.25;
  expect.hsc_direction = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
  return Fixture{std::move(bundle), std::move(expect)};
}

Fixture make_zero() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", "0"},  //
                             {"0", "0"}}));
  ExprMatrix h = matrix_of({{"1", "0"},  //
                            {"0", "1"}});
  HiggsBundleChart bundle(
      "zero", 1, 2, std::move(theta), std::move(h),
      ChartDomain({CoordinateRange::box(-1.0, 1.0, -1.0, 1.0)}), SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 0;
  expect.flat = true;
  expect.admissible = false;
  return Fixture{std::move(bundle), std::move(expect)};
}

Fixture make_nonflat_control() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", "1"},  //
                             {"0", "0"}}));
  ExprMatrix h = matrix_of({{"1", "0"},  //
                            {"0", "1"}});
  HiggsBundleChart bundle(
      "nonflat-control", 1, 2, std::move(theta), std::move(h),
      ChartDomain({CoordinateRange::box(-1.0, 1.0, -1.0, 1.0)}), SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 1;
  expect.flat = false;
  expect.admissible = true;
  return Fixture{std::move(bundle), std::move(expect)};
}

Fixture make_nonadmissible_control() {
  std::vector<ExprMatrix> theta;
  theta.push_back(matrix_of({{"0", "1"},  //
                             {"0", "0"}}));
  theta.push_back(matrix_of({{"0", "1"},  //
                             {"0", "0"}}));
  ExprMatrix h = matrix_of({{"1", "0"},  //
                            {"0", "1"}});
  HiggsBundleChart bundle(
      "nonadmissible-control", 2, 2, std::move(theta), std::move(h),
      ChartDomain({CoordinateRange::box(-1.0, 1.0, -1.0, 1.0),
                   CoordinateRange::box(-1.0, 1.0, -1.0, 1.0)}),
      SampleSpec{});
  FixtureExpectations expect;
  expect.nilpotency = 1;
  expect.flat = false;
  expect.admissible = false;
  return Fixture{std::move(bundle), std::move(expect)};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "uniformizing", "sym2",           "product",
      "zero",         "nonflat-control", "nonadmissible-control"};
  return names;
}

bool is_fixture_name(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

Fixture build_fixture(const std::string& name) {
  if (name == "uniformizing") return make_uniformizing();
  if (name == "sym2") return make_sym2();
  if (name == "product") return make_product();
  if (name == "zero") return make_zero();
  if (name == "nonflat-control") return make_nonflat_control();
  if (name == "nonadmissible-control") return make_nonadmissible_control();
  throw UnknownFixtureError("unknown fixture \"" + name +
                            "\"; run the fixture listing for valid names");
}

}  // namespace hodge
