#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>

namespace hne {

/// Effective Tikhonov weight for a local Gram matrix: sigma_reg scaled by the
/// mean diagonal of the Gram matrix, or sigma_reg itself when the trace is zero.
double effective_regularizer(double gram_trace, Index m, double sigma_reg);

/// Sum-to-one weights reconstructing `center` from the columns of
/// `neighbors` (D x m):
///
///   argmin_w |sum_j w_j (center - neighbor_j)|^2 + sigma |w|^2,  sum_j w_j = 1
///
/// solved through the regularized Gram system (C + sigma I) w = e followed by
/// normalization. With sigma_reg == 0, or when that system is numerically
/// singular, the unregularized problem is solved by least squares on the
/// sum-zero subspace instead; SingularSystem is thrown when its minimizer is
/// not unique.
Eigen::VectorXd solve_local(const Eigen::Ref<const Eigen::VectorXd>& center,
                            const Eigen::Ref<const Eigen::MatrixXd>& neighbors, double sigma_reg);

/// Inner-layer weights, one solve_local per point. SingularSystem errors carry
/// the point index.
Eigen::MatrixXd solve_inner(const DataMatrix& data, const NeighborIndex& idx, double sigma_reg);

/// solve_inner packaged as a WeightSet of variant Lle.
WeightSet lle_weights(const DataMatrix& data, const NeighborIndex& idx, double sigma_reg);

/// Columns x_{indices[0]}, x_{indices[1]}, ... as a D x m matrix.
Eigen::MatrixXd gather_columns(const DataMatrix& data, const std::vector<Index>& indices);

}  // namespace hne
