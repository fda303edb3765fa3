#include "hodge/chart.hpp"

#include <cmath>
#include <string>

namespace hodge {

namespace {

// Primes for the Halton bases; enough for 4 complex coordinates.
constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

double halton(std::uint64_t index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed-derived shift in [0,1) for dimension d (Cranley-Patterson rotation).
double toral_shift(std::uint64_t seed, int d) {
  const std::uint64_t bits =
      splitmix64(seed ^ (0xa0761d6478bd642full * static_cast<std::uint64_t>(d + 1)));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Keeps samples off the sampling-box faces: finite-difference probes with
// steps up to a few 1e-5 must not cross the boundary.
constexpr double kEdgeMargin = 1e-3;

double map_to(double u, double lo, double hi) {
  const double width = hi - lo;
  return lo + width * (kEdgeMargin + (1.0 - 2.0 * kEdgeMargin) * u);
}

}  // namespace

CoordinateRange CoordinateRange::box(double re_min, double re_max,
                                     double im_min, double im_max) {
  CoordinateRange r;
  r.re_min = re_min;
  r.re_max = re_max;
  r.im_min = im_min;
  r.im_max = im_max;
  r.half_plane = false;
  return r;
}

CoordinateRange CoordinateRange::upper_half_plane(double im_min, double im_max,
                                                  double re_min,
                                                  double re_max) {
  CoordinateRange r;
  r.re_min = re_min;
  r.re_max = re_max;
  r.im_min = im_min;
  r.im_max = im_max;
  r.half_plane = true;
  return r;
}

bool CoordinateRange::contains(Complex t) const {
  if (half_plane) return t.imag() >= im_min;
  return t.real() >= re_min && t.real() <= re_max && t.imag() >= im_min &&
         t.imag() <= im_max;
}

bool operator==(const CoordinateRange& a, const CoordinateRange& b) {
  return a.re_min == b.re_min && a.re_max == b.re_max &&
         a.im_min == b.im_min && a.im_max == b.im_max &&
         a.half_plane == b.half_plane;
}

ChartDomain::ChartDomain(std::vector<CoordinateRange> coords)
    : coords_(std::move(coords)) {}

bool ChartDomain::contains(const BasePoint& t) const {
  if (static_cast<int>(t.size()) != dim()) return false;
  for (int j = 0; j < dim(); ++j) {
    if (!coords_[static_cast<std::size_t>(j)].contains(
            t[static_cast<std::size_t>(j)])) {
      return false;
    }
  }
  return true;
}

void ChartDomain::require(const BasePoint& t) const {
  if (static_cast<int>(t.size()) != dim()) {
    throw DomainError("point has " + std::to_string(t.size()) +
                      " coordinate(s), chart has " + std::to_string(dim()));
  }
  for (int j = 0; j < dim(); ++j) {
    if (!coords_[static_cast<std::size_t>(j)].contains(
            t[static_cast<std::size_t>(j)])) {
      throw DomainError("coordinate t" + std::to_string(j + 1) +
                        " lies outside the chart domain");
    }
  }
}

BasePoint ChartDomain::sample(std::uint64_t seed, std::uint64_t index) const {
  BasePoint t(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) {
    const auto& range = coords_[static_cast<std::size_t>(j)];
    const int dre = 2 * j;
    const int dim_ = 2 * j + 1;
    double ure = halton(index + 1, kPrimes[dre]) + toral_shift(seed, dre);
    double uim = halton(index + 1, kPrimes[dim_]) + toral_shift(seed, dim_);
    ure -= std::floor(ure);
    uim -= std::floor(uim);
    t[static_cast<std::size_t>(j)] =
        Complex(map_to(ure, range.re_min, range.re_max),
                map_to(uim, range.im_min, range.im_max));
  }
  return t;
}

std::vector<BasePoint> ChartDomain::sample_points(int count,
                                                  std::uint64_t seed) const {
  std::vector<BasePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    pts.push_back(sample(seed, static_cast<std::uint64_t>(i)));
  }
  return pts;
}

bool operator==(const ChartDomain& a, const ChartDomain& b) {
  return a.coords_ == b.coords_;
}

}  // namespace hodge
