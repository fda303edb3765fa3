#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hodge {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// An endomorphism of the fibre, stored as a dense r x r complex matrix.
using Endo = Eigen::MatrixXcd;

// A point of the base chart: one complex coordinate per base dimension.
using BasePoint = std::vector<Complex>;

inline constexpr std::string_view kToolName = "hodgecheck";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Wirtinger derivative direction: d/dt^j or d/dtbar^j.
enum class Wirtinger { Holomorphic, Antiholomorphic };

}  // namespace hodge
