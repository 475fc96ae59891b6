#include "hne/pipeline.hpp"

#include "hne/hne_weights.hpp"
#include "hne/neighbors.hpp"

namespace hne {

EmbedRun run_embedding(const DataMatrix& data, const EmbedConfig& config, const PipelineOptions& options) {
  const EmbedConfig cfg = validate_config(config, data);
  NeighborIndex index = build_hierarchic(data, cfg.k);
  WeightSet weights = compute_weights(data, index, cfg.method, cfg.sigma_reg, cfg.bhne_rotations);
  AlignmentMatrix g = build_alignment(index, weights, cfg.gamma, options.storage);
  const double null_residual = check_null_vector(g);

  EmbeddingResult embedding = embed(g, cfg.d, options.eigen);
  const Residuals residuals = hierarchic_residuals(data, index, weights);
  embedding.inner_residual = residuals.inner;
  embedding.hier_residual = residuals.hier;

  int zero_blocks = 0;
  for (int c : weights.zero_inner_warnings) zero_blocks += c;
  if (zero_blocks > 0) {
    embedding.warnings.push_back("ZeroInnerWeight: " + std::to_string(zero_blocks) +
                                 " outer blocks had a zero inner weight and were set uniform");
  }

  const ConstraintReport constraints = check_constraints(weights);
  std::optional<AlignmentMatrix> kept;
  if (options.keep_alignment) kept.emplace(std::move(g));
  return EmbedRun{std::move(index), std::move(weights), std::move(embedding), constraints,
                  null_residual, std::move(kept)};
}

}  // namespace hne
