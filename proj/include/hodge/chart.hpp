#pragma once

#include <cstdint>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/types.hpp"

namespace hodge {

// Admissible region for one complex coordinate. Two flavours:
//  - box: the full axis-aligned rectangle [re_min,re_max] x [im_min,im_max];
//  - half-plane: membership is Im t >= im_min (with im_min > 0); the re range
//    and im_max merely bound where samples are drawn.
struct CoordinateRange {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
  bool half_plane = false;

  static CoordinateRange box(double re_min, double re_max, double im_min,
                             double im_max);
  static CoordinateRange upper_half_plane(double im_min, double im_max,
                                          double re_min, double re_max);

  bool contains(Complex t) const;
};

// Chart domain: a product of per-coordinate regions, plus a deterministic
// low-discrepancy sampler (Halton sequence with a seed-derived toral shift).
// Samples keep a small relative margin away from the sampling-box faces so
// that finite-difference probes of sampled points stay inside the chart.
class ChartDomain {
 public:
  ChartDomain() = default;
  explicit ChartDomain(std::vector<CoordinateRange> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<CoordinateRange>& coords() const { return coords_; }

  bool contains(const BasePoint& t) const;
  // Throws DomainError naming the offending coordinate.
  void require(const BasePoint& t) const;

  // The index-th sample of the seeded sequence (deterministic in
  // (seed, index), independent of any other call).
  BasePoint sample(std::uint64_t seed, std::uint64_t index) const;
  std::vector<BasePoint> sample_points(int count, std::uint64_t seed) const;

  friend bool operator==(const ChartDomain& a, const ChartDomain& b);

 private:
  std::vector<CoordinateRange> coords_;
};

bool operator==(const CoordinateRange& a, const CoordinateRange& b);

}  // namespace hodge
