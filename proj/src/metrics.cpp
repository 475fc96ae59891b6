#include "hne/metrics.hpp"

#include "hne/hne_weights.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hne {

double avg_reconstruction_error(const DataMatrix& data, const NeighborIndex& idx,
                                const WeightSet& weights) {
  const Residuals r = hierarchic_residuals(data, idx, weights);
  return weights.variant == Method::Lle ? r.inner.mean() : r.hier.mean();
}

namespace {

// order[i] lists all other points by ascending distance from i (ties by index);
// rank(i, j) is the 1-based position of j in that list.
struct Ranking {
  Index n = 0;
  std::vector<Index> order;  // n x (n-1)
  std::vector<Index> rank;   // n x n, rank of i to itself is 0

  Index nth(Index i, Index r) const { return order[static_cast<std::size_t>(i * (n - 1) + r)]; }
  Index rank_of(Index i, Index j) const { return rank[static_cast<std::size_t>(i * n + j)]; }
};

// points: n x q, one per row
Ranking rank_neighbors(const Eigen::MatrixXd& points) {
  Ranking rk;
  const Index n = points.rows();
  rk.n = n;
  rk.order.resize(static_cast<std::size_t>(n * (n - 1)));
  rk.rank.assign(static_cast<std::size_t>(n * n), 0);
  std::vector<std::pair<double, Index>> dist(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) dist[c++] = {(points.row(i) - points.row(j)).squaredNorm(), j};
    }
    std::sort(dist.begin(), dist.end());
    for (Index r = 0; r < n - 1; ++r) {
      const Index j = dist[static_cast<std::size_t>(r)].second;
      rk.order[static_cast<std::size_t>(i * (n - 1) + r)] = j;
      rk.rank[static_cast<std::size_t>(i * n + j)] = r + 1;
    }
  }
  return rk;
}

// 1 - normalized sum of rank violations: points among the k nearest in
// `near` that are not among the k nearest in `ref`, penalized by their rank in `ref`.
double rank_score(const Ranking& near, const Ranking& ref, Index k) {
  const Index n = near.n;
  double penalty = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index r = 0; r < k; ++r) {
      const Index rank = ref.rank_of(i, near.nth(i, r));
      if (rank > k) penalty += static_cast<double>(rank - k);
    }
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return 1.0 - 2.0 / (nd * kd * (2.0 * nd - 3.0 * kd - 1.0)) * penalty;
}

}  // namespace

EmbeddingQuality embedding_quality(const Eigen::Ref<const Eigen::MatrixXd>& embedding,
                                   const Eigen::Ref<const Eigen::MatrixXd>& reference, Index k_eval) {
  const Index n = reference.rows();
  if (embedding.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "embedding has " + std::to_string(embedding.cols()) + " points, reference has " +
                    std::to_string(n));
  }
  if (k_eval < 1 || 2 * n - 3 * k_eval - 1 <= 0) {
    throw Error(ErrorCode::InvalidArgument, "k_eval must satisfy 1 <= k_eval and 3 k_eval < 2n - 1");
  }
  const Ranking low = rank_neighbors(embedding.transpose());
  const Ranking high = rank_neighbors(reference);

  EmbeddingQuality q;
  q.trustworthiness = rank_score(low, high, k_eval);
  q.continuity = rank_score(high, low, k_eval);

  double shared = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index r = 0; r < k_eval; ++r) {
      if (high.rank_of(i, low.nth(i, r)) <= k_eval) shared += 1.0;
    }
  }
  q.knn_preservation = shared / static_cast<double>(n * k_eval);
  return q;
}

}  // namespace hne
