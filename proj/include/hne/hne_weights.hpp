#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>

#include <vector>

namespace hne {

/// Inner weights with magnitude at or below this are treated as zero by the
/// outer-layer solvers.
inline constexpr double kZeroInnerWeight = 1e-12;

/// Invariance-prioritizing variant. Each outer block w_{i_l}^{(.)} is the
/// sum-to-one reconstruction of x_i from N(i_l); the scalar w_{i_l} drops out
/// of the argmin. Blocks behind a zero inner weight are uniform.
WeightSet solve_ihne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg);

/// Reconstruction-prioritizing variant. x_i is reconstructed jointly from all
/// k*k outer points; the joint weights are then divided by the inner weights.
/// Blocks behind a zero inner weight get uniform outer weights, the remaining
/// blocks are rescaled so the joint weights still sum to one, and the event is
/// counted in WeightSet::zero_inner_warnings.
WeightSet solve_rhne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg);

/// Outer weights of a single point under the balanced variant.
struct BhnePoint {
  Eigen::MatrixXd outer;           // k x k, row l = w_{i_l}^{(.)}
  std::vector<double> objectives;  // squared hierarchic residual after each sweep
};

/// Balanced variant for one point: rotations + 1 Gauss-Seidel sweeps over the
/// outer blocks. The first sweep approximates the other blocks by the inner
/// neighbors themselves; later sweeps use the freshest outer weights.
BhnePoint solve_bhne_point(const DataMatrix& data, const NeighborIndex& idx,
                           const Eigen::MatrixXd& inner, Index i, double sigma_reg,
                           int rotations);

WeightSet solve_bhne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg, int rotations);

/// Inner and outer weights for any method, starting from the LLE solve.
WeightSet compute_weights(const DataMatrix& data, const NeighborIndex& idx, Method method,
                          double sigma_reg, int rotations);

struct Residuals {
  Eigen::VectorXd inner;  // |x_i - sum_l w_il x_il|
  Eigen::VectorXd hier;   // |x_i - sum_l w_il sum_j w_il^(j) x_il^(j)|, == inner for Lle
};

Residuals hierarchic_residuals(const DataMatrix& data, const NeighborIndex& idx,
                               const WeightSet& weights);

}  // namespace hne
