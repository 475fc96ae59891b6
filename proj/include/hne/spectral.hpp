#pragma once

#include "hne/alignment.hpp"
#include "hne/core.hpp"

namespace hne {

enum class EigenMethod {
  Auto,       // dense for dense storage, iterative for sparse storage
  Dense,      // full symmetric eigendecomposition
  Iterative,  // shift-invert subspace iteration with the constant vector deflated
};

/// Eigenvalues closer than this to the smallest one flag a disconnected graph.
inline constexpr double kDegenerateGap = 1e-10;

/// Bottom d+1 eigenpairs of G with the smallest (constant-vector) pair
/// discarded. Rows of Y are unit-norm eigenvectors, orthogonal to the
/// all-ones vector; each row's largest-magnitude entry is positive (ties to
/// the lowest index). Throws ConvergenceFailure when the iterative solver
/// stalls; a degenerate null space is reported as a warning, not an error.
EmbeddingResult embed(const AlignmentMatrix& g, Index d, EigenMethod method = EigenMethod::Auto);

/// Flips v so that its largest-magnitude entry (lowest index on ties) is positive.
void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace hne
