#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/bundle.hpp"

namespace hodge {

// Known properties of a catalog bundle; certification compares measurements
// against these.
struct FixtureExpectations {
  int nilpotency = 0;  // k
  bool flat = false;
  bool admissible = false;
  std::optional<double> hsc;        // HSC along hsc_direction
  std::optional<double> hsc_bound;  // -1 / (k^2 rank)
  std::vector<Complex> hsc_direction;
};

struct Fixture {
  HiggsBundleChart bundle;
  FixtureExpectations expect;
};

// Catalog, in a fixed order:
//   uniformizing           m=1 r=2, the weight-one chain over a half-plane
//   sym2                   m=1 r=3, the weight-two chain (HSC -1/2)
//   product                m=2 r=4, block sum of two uniformizing pieces
//   zero                   m=1 r=2, zero Higgs field (flat, not admissible)
//   nonflat-control        m=1 r=2, constant metric with nonzero field
//   nonadmissible-control  m=2 r=2, two equal field components
const std::vector<std::string>& fixture_names();
bool is_fixture_name(const std::string& name);

// Throws UnknownFixtureError for names outside the catalog.
Fixture build_fixture(const std::string& name);

}  // namespace hodge
