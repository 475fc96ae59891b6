#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>

namespace hne {

/// Mean over points of the Euclidean reconstruction residual: the inner
/// residual for Method::Lle, the hierarchic residual otherwise.
double avg_reconstruction_error(const DataMatrix& data, const NeighborIndex& idx,
                                const WeightSet& weights);

struct EmbeddingQuality {
  double trustworthiness = 0.0;
  double continuity = 0.0;
  double knn_preservation = 0.0;
};

/// Rank-based neighborhood scores of an embedding against reference
/// coordinates. `embedding` is d x n (one coordinate per row), `reference` is
/// n x q (one point per row). Requires 1 <= k_eval and 2n - 3 k_eval - 1 > 0.
EmbeddingQuality embedding_quality(const Eigen::Ref<const Eigen::MatrixXd>& embedding,
                                   const Eigen::Ref<const Eigen::MatrixXd>& reference, Index k_eval);

inline EmbeddingQuality embedding_quality(const EmbeddingResult& result,
                                          const Eigen::Ref<const Eigen::MatrixXd>& reference,
                                          Index k_eval) {
  return embedding_quality(result.Y, reference, k_eval);
}

}  // namespace hne
