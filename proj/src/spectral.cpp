#include "hne/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>

namespace hne {

void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v) {
  Index best = 0;
  for (Index r = 1; r < v.size(); ++r) {
    if (std::abs(v(r)) > std::abs(v(best))) best = r;
  }
  if (v.size() > 0 && v(best) < 0.0) v = -v;
}

namespace {

void check_d(Index n, Index d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (d > n - 1) {
    throw Error(ErrorCode::DTooLarge, "d = " + std::to_string(d) + " exceeds n-1 = " + std::to_string(n - 1));
  }
}

void flag_degenerate(EmbeddingResult& out) {
  if (out.eigenvalues.size() > 0 && out.eigenvalues(0) - out.null_eigenvalue <= kDegenerateGap) {
    out.degenerate_spectrum = true;
    out.warnings.emplace_back(
        "DegenerateSpectrum: second eigenvalue is within 1e-10 of the smallest; the neighbor "
        "graph is likely disconnected and embedding components decouple");
  }
}

EmbeddingResult finish(Eigen::MatrixXd vectors, Eigen::VectorXd values, double null_value) {
  EmbeddingResult out;
  for (Index r = 0; r < vectors.cols(); ++r) apply_sign_convention(vectors.col(r));
  out.Y = vectors.transpose();
  out.eigenvalues = std::move(values);
  out.null_eigenvalue = null_value;
  flag_degenerate(out);
  return out;
}

EmbeddingResult embed_dense(const Eigen::MatrixXd& g, Index d) {
  const Index n = g.rows();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "dense symmetric eigensolver failed");
  }
  Eigen::VectorXd values = solver.eigenvalues();
  Eigen::MatrixXd vectors = solver.eigenvectors();

  // In a (near-)degenerate null space the solver may return any basis of it.
  // Rotate that basis so its first vector is the constant direction; the rest
  // of the cluster is then orthogonal to e.
  Index cluster = 1;
  while (cluster < n && values(cluster) - values(0) <= kDegenerateGap) ++cluster;
  if (cluster > 1) {
    auto block = vectors.leftCols(cluster);
    const Eigen::VectorXd along = block.transpose() * Eigen::VectorXd::Ones(n);
    if (along.norm() > 0.0) {
      const Eigen::HouseholderQR<Eigen::MatrixXd> qr(along);
      const Eigen::MatrixXd rotation = qr.householderQ() * Eigen::MatrixXd::Identity(cluster, cluster);
      block = Eigen::MatrixXd(block * rotation);
      for (Index c = 0; c < cluster; ++c) {
        values(c) = block.col(c).dot(g * block.col(c));
      }
    }
  }
  return finish(vectors.middleCols(1, d), values.segment(1, d), values(0));
}

void deflate_constant(Eigen::MatrixXd& v) {
  const double n = static_cast<double>(v.rows());
  const Eigen::RowVectorXd means = v.colwise().sum() / n;
  v.rowwise() -= means;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& v) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
  return qr.householderQ() * Eigen::MatrixXd::Identity(v.rows(), v.cols());
}

EmbeddingResult embed_iterative(const Eigen::SparseMatrix<double>& g, Index d) {
  constexpr int kMaxIterations = 5000;
  constexpr double kTolerance = 1e-10;
  const Index n = g.rows();
  const Index block = std::min<Index>(n - 1, std::max<Index>(2 * d, d + 8));

  double upper_bound = 0.0;  // Gershgorin bound on the spectrum
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
  for (Index c = 0; c < g.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(g, c); it; ++it) {
      row_sums(it.row()) += std::abs(it.value());
    }
  }
  upper_bound = row_sums.maxCoeff();
  const double scale = std::max(1.0, upper_bound);
  const double mean_diag = g.diagonal().mean();
  const double shift = mean_diag > 0.0 ? 1e-10 * mean_diag : 1.0;

  Eigen::SparseMatrix<double> shifted = g;
  for (Index r = 0; r < n; ++r) shifted.coeffRef(r, r) += shift;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> factor(shifted);
  if (factor.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "factorization of the shifted alignment matrix failed");
  }

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd basis(n, block);
  for (Index c = 0; c < block; ++c) {
    for (Index r = 0; r < n; ++r) basis(r, c) = normal(rng);
  }
  deflate_constant(basis);
  basis = orthonormalize(basis);

  Eigen::VectorXd ritz;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Eigen::MatrixXd next = factor.solve(basis);
    deflate_constant(next);
    next = orthonormalize(next);
    deflate_constant(next);

    const Eigen::MatrixXd projected = next.transpose() * (g * next);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (projected + projected.transpose()));
    basis = next * small.eigenvectors();
    ritz = small.eigenvalues();

    const Eigen::MatrixXd lead = basis.leftCols(d);
    const Eigen::MatrixXd residual = g * lead - lead * ritz.head(d).asDiagonal();
    if (residual.colwise().norm().maxCoeff() <= kTolerance * scale) {
      const double null_value = Eigen::VectorXd::Ones(n).dot(g * Eigen::VectorXd::Ones(n)) / static_cast<double>(n);
      return finish(lead, ritz.head(d), null_value);
    }
  }
  throw Error(ErrorCode::ConvergenceFailure,
              "subspace iteration did not converge in " + std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

EmbeddingResult embed(const AlignmentMatrix& g, Index d, EigenMethod method) {
  check_d(g.n(), d);
  if (method == EigenMethod::Auto) method = g.is_sparse() ? EigenMethod::Iterative : EigenMethod::Dense;
  if (method == EigenMethod::Dense) return embed_dense(g.to_dense(), d);
  if (g.is_sparse()) return embed_iterative(g.sparse(), d);
  return embed_iterative(g.dense().sparseView(), d);
}

}  // namespace hne
