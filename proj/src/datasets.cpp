#include "hne/datasets.hpp"

#include <cmath>
#include <random>

namespace hne {

SwissRoll swiss_roll(Index n, std::uint64_t seed, bool hole) {
  if (n < 10) throw Error(ErrorCode::InvalidArgument, "swiss_roll needs n >= 10");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> t_dist(swiss::kTMin, swiss::kTMax);
  std::uniform_real_distribution<double> h_dist(0.0, swiss::kHeight);

  DataMatrix::Matrix points(n, 3);
  Eigen::MatrixXd intrinsic(n, 2);
  Index accepted = 0;
  while (accepted < n) {
    const double t = t_dist(rng);
    const double h = h_dist(rng);
    if (hole && t >= swiss::kHoleTMin && t <= swiss::kHoleTMax && h >= swiss::kHoleHMin &&
        h <= swiss::kHoleHMax) {
      continue;
    }
    points.row(accepted) << t * std::cos(t), h, t * std::sin(t);
    intrinsic.row(accepted) << t, h;
    ++accepted;
  }
  return {DataMatrix(std::move(points)), std::move(intrinsic)};
}

LabeledData cluster_3d(Index n_per_cluster, Index bridge_points, std::uint64_t seed) {
  using cluster3d::kCenters;
  using cluster3d::kClusters;
  if (n_per_cluster < 2) throw Error(ErrorCode::InvalidArgument, "cluster_3d needs n_per_cluster >= 2");
  if (bridge_points < 1) throw Error(ErrorCode::InvalidArgument, "cluster_3d needs bridge_points >= 1");

  const auto center = [](int c) {
    return Eigen::RowVector3d(kCenters[c][0], kCenters[c][1], kCenters[c][2]);
  };
  const double spacing = (center(1) - center(0)).norm();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, cluster3d::kSpreadFraction * spacing);

  const Index blobs = kClusters * n_per_cluster;
  const Index bridges = (kClusters - 1) * bridge_points;
  DataMatrix::Matrix points(blobs + bridges, 3);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(blobs + bridges));

  Index row = 0;
  for (int c = 0; c < kClusters; ++c) {
    for (Index p = 0; p < n_per_cluster; ++p) {
      const double dx = noise(rng);
      const double dy = noise(rng);
      const double dz = noise(rng);
      points.row(row++) = center(c) + Eigen::RowVector3d(dx, dy, dz);
      labels.push_back(c);
    }
  }
  for (int c = 0; c + 1 < kClusters; ++c) {
    for (Index b = 1; b <= bridge_points; ++b) {
      const double s = static_cast<double>(b) / static_cast<double>(bridge_points + 1);
      points.row(row++) = center(c) + s * (center(c + 1) - center(c));
      labels.push_back(-1);
    }
  }
  return {DataMatrix(std::move(points)), std::move(labels), blobs, bridges};
}

LabeledData two_surfaces(Index n, Index bridge_points, std::uint64_t seed) {
  using namespace surfaces;
  if (n < 20) throw Error(ErrorCode::InvalidArgument, "two_surfaces needs n >= 20");
  if (bridge_points < 1 || bridge_points > n - 4) {
    throw Error(ErrorCode::InvalidArgument, "two_surfaces needs 1 <= bridge_points <= n-4");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side(0.0, kSide);

  const Index on_patches = n - bridge_points;
  const Index first = (on_patches + 1) / 2;
  DataMatrix::Matrix points(n, 3);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));

  for (Index p = 0; p < on_patches; ++p) {
    const double x = side(rng);
    const double y = side(rng);
    if (p < first) {
      points.row(p) << x, y, 0.0;
      labels.push_back(0);
    } else {
      points.row(p) << kOffsetX + x, y, kOffsetZ;
      labels.push_back(1);
    }
  }
  const Eigen::RowVector3d from(kSide, kSide / 2.0, 0.0);
  const Eigen::RowVector3d to(kOffsetX, kSide / 2.0, kOffsetZ);
  for (Index b = 1; b <= bridge_points; ++b) {
    const double s = static_cast<double>(b) / static_cast<double>(bridge_points + 1);
    points.row(on_patches + b - 1) = from + s * (to - from);
    labels.push_back(-1);
  }
  return {DataMatrix(std::move(points)), std::move(labels), on_patches, bridge_points};
}

}  // namespace hne
