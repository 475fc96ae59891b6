#pragma once

#include "hne/alignment.hpp"
#include "hne/core.hpp"
#include "hne/spectral.hpp"

#include <optional>

namespace hne {

struct PipelineOptions {
  Storage storage = Storage::Auto;
  EigenMethod eigen = EigenMethod::Auto;
  bool keep_alignment = false;
};

struct EmbedRun {
  NeighborIndex index;
  WeightSet weights;
  EmbeddingResult embedding;
  ConstraintReport constraints;
  double null_vector_residual = 0.0;  // max |(G e)_r|
  std::optional<AlignmentMatrix> alignment;
};

/// Neighbors, weights, alignment and eigensolve for one configuration.
/// Residual diagnostics are stored on the embedding.
EmbedRun run_embedding(const DataMatrix& data, const EmbedConfig& cfg, const PipelineOptions& options = {});

}  // namespace hne
