#include "hne/lle_weights.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include <cmath>
#include <limits>

namespace hne {

namespace {

// Below this reciprocal condition estimate the Gram system is treated as singular.
constexpr double kMinRcond = 1e-13;

// Unregularized fallback for a singular Gram matrix: write w = e/m + N z with
// N an orthonormal basis of the sum-zero subspace and solve the resulting
// unconstrained least-squares problem. The minimizer is unique iff diffs * N
// has full column rank.
Eigen::VectorXd solve_null_space(const Eigen::MatrixXd& diffs) {
  const Index m = diffs.cols();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
  const Eigen::MatrixXd full_q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd basis = full_q.rightCols(m - 1);
  const Eigen::VectorXd base = ones / static_cast<double>(m);

  const Eigen::MatrixXd reduced = diffs * basis;
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(reduced);
  if (cod.rank() < m - 1) {
    throw Error(ErrorCode::SingularSystem,
                "local reconstruction has no unique minimizer (regularization required)");
  }
  const Eigen::VectorXd z = cod.solve(-(diffs * base));
  return base + basis * z;
}

}  // namespace

double effective_regularizer(double gram_trace, Index m, double sigma_reg) {
  return gram_trace > 0.0 ? sigma_reg * gram_trace / static_cast<double>(m) : sigma_reg;
}

Eigen::VectorXd solve_local(const Eigen::Ref<const Eigen::VectorXd>& center,
                            const Eigen::Ref<const Eigen::MatrixXd>& neighbors, double sigma_reg) {
  const Index m = neighbors.cols();
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "solve_local needs at least one neighbor");
  if (neighbors.rows() != center.size()) {
    throw Error(ErrorCode::DimensionMismatch, "center and neighbors differ in dimension");
  }
  if (sigma_reg < 0.0) throw Error(ErrorCode::InvalidArgument, "sigma_reg must be >= 0");
  if (m == 1) return Eigen::VectorXd::Ones(1);

  const Eigen::MatrixXd diffs = (-neighbors).colwise() + center;
  Eigen::MatrixXd gram = diffs.transpose() * diffs;
  const double trace = gram.trace();
  if (trace == 0.0) {
    // Every neighbor coincides with the center: any affine combination is exact.
    return Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  }
  // Without regularization, least squares on the differences avoids squaring
  // the condition number through the Gram matrix.
  if (sigma_reg == 0.0) return solve_null_space(diffs);
  gram.diagonal().array() += effective_regularizer(trace, m, sigma_reg);

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  // LDLT pseudo-inverts zero pivots, so rcond() alone misses exact singularity.
  const Eigen::VectorXd pivots = ldlt.vectorD();
  const bool singular = !(pivots.minCoeff() > kMinRcond * pivots.cwiseAbs().maxCoeff());
  if (ldlt.info() != Eigen::Success || singular || !(ldlt.rcond() > kMinRcond)) {
    return solve_null_space(diffs);
  }
  Eigen::VectorXd w = ldlt.solve(Eigen::VectorXd::Ones(m));
  const double total = w.sum();
  if (!std::isfinite(total) || std::abs(total) < std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::SingularSystem, "local weights cannot be normalized");
  }
  w /= total;
  return w;
}

Eigen::MatrixXd gather_columns(const DataMatrix& data, const std::vector<Index>& indices) {
  Eigen::MatrixXd cols(data.dim(), static_cast<Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) {
    cols.col(static_cast<Index>(c)) = data.point(indices[c]).transpose();
  }
  return cols;
}

Eigen::MatrixXd solve_inner(const DataMatrix& data, const NeighborIndex& idx, double sigma_reg) {
  const Index n = data.n();
  if (idx.n() != n) throw Error(ErrorCode::DimensionMismatch, "neighbor index does not match data");
  Eigen::MatrixXd weights(n, idx.k());
  for (Index i = 0; i < n; ++i) {
    try {
      weights.row(i) = solve_local(data.point(i).transpose(),
                                   gather_columns(data, idx.inner_row(i)), sigma_reg)
                           .transpose();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem) throw;
      throw Error(ErrorCode::SingularSystem,
                  "inner weights of point " + std::to_string(i) + " are singular", i);
    }
  }
  return weights;
}

WeightSet lle_weights(const DataMatrix& data, const NeighborIndex& idx, double sigma_reg) {
  WeightSet w;
  w.variant = Method::Lle;
  w.k = idx.k();
  w.inner = solve_inner(data, idx, sigma_reg);
  return w;
}

}  // namespace hne
