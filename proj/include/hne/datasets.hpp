#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <vector>

namespace hne {

/// Swiss-Roll generator constants. Points are (t cos t, h, t sin t).
namespace swiss {
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTMin = 1.5 * kPi;
inline constexpr double kTMax = 4.5 * kPi;
inline constexpr double kHeight = 21.0;
// Hole rectangle in intrinsic (t, h) coordinates.
inline constexpr double kHoleTMin = 2.5 * kPi;
inline constexpr double kHoleTMax = 3.5 * kPi;
inline constexpr double kHoleHMin = 7.0;
inline constexpr double kHoleHMax = 14.0;
}  // namespace swiss

struct SwissRoll {
  DataMatrix data;           // n x 3
  Eigen::MatrixXd intrinsic;  // n x 2, columns (t, h)
};

/// t ~ U[1.5 pi, 4.5 pi], h ~ U[0, 21]. With `hole`, samples inside the hole
/// rectangle are rejected and redrawn until n points are accepted.
SwissRoll swiss_roll(Index n, std::uint64_t seed, bool hole);

struct LabeledData {
  DataMatrix data;
  std::vector<int> labels;  // component id, -1 for bridge points
  Index blob_points = 0;    // points belonging to a component
  Index bridge_points = 0;  // points on connecting segments
};

namespace cluster3d {
inline constexpr int kClusters = 5;
/// Non-coplanar zigzag; consecutive centers are sqrt(29) apart.
inline constexpr std::array<std::array<double, 3>, kClusters> kCenters = {{
    {0.0, 0.0, 0.0}, {4.0, 3.0, 2.0}, {8.0, 0.0, 4.0}, {12.0, 3.0, 2.0}, {16.0, 0.0, 0.0}}};
/// Isotropic blob standard deviation as a fraction of the center spacing.
inline constexpr double kSpreadFraction = 0.1;
inline constexpr Index kDefaultPerCluster = 52;
inline constexpr Index kDefaultBridge = 9;
}  // namespace cluster3d

/// Five Gaussian blobs plus `bridge_points` equispaced points strictly inside
/// each of the four segments joining consecutive centers.
LabeledData cluster_3d(Index n_per_cluster, Index bridge_points, std::uint64_t seed);

namespace surfaces {
/// Patch A: z = 0, (x, y) in [0,10]^2. Patch B: z = 4, x in [14,24], y in [0,10].
inline constexpr double kSide = 10.0;
inline constexpr double kOffsetX = 14.0;
inline constexpr double kOffsetZ = 4.0;
inline constexpr Index kDefaultTotal = 150;
inline constexpr Index kDefaultBridge = 9;
}  // namespace surfaces

/// Two parallel planar patches joined by a straight bridge from (10, 5, 0) to
/// (14, 5, 4). `n` counts every point, the bridge included.
LabeledData two_surfaces(Index n, Index bridge_points, std::uint64_t seed);

}  // namespace hne
