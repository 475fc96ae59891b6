#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <iosfwd>

namespace hne {

enum class Storage { Auto, Dense, Sparse };

/// Above this many points Storage::Auto assembles a sparse matrix.
inline constexpr Index kDenseLimit = 2000;

/// Symmetric PSD matrix G = gamma * L + L_outer whose bottom eigenvectors give
/// the embedding. Exactly one of the two representations is populated.
class AlignmentMatrix {
 public:
  AlignmentMatrix(Eigen::MatrixXd dense, double gamma);
  AlignmentMatrix(Eigen::SparseMatrix<double> sparse, double gamma);

  Index n() const noexcept { return sparse_ ? sparse_matrix_.rows() : dense_.rows(); }
  double gamma() const noexcept { return gamma_; }
  bool is_sparse() const noexcept { return sparse_; }

  const Eigen::MatrixXd& dense() const;
  const Eigen::SparseMatrix<double>& sparse() const;

  double coeff(Index r, Index c) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd to_dense() const;

 private:
  bool sparse_;
  double gamma_;
  Eigen::MatrixXd dense_;
  Eigen::SparseMatrix<double> sparse_matrix_;
};

/// Scatter-adds M_i = v v^T, v = [-1; w_i], onto rows/cols [i, N(i)] (scaled by
/// gamma) and, for hierarchic weights, M~_i = u u^T with
/// u = [-1; w_i1 w_i1^(.); ...; w_ik w_ik^(.)] onto [i, outer(i) flattened].
/// Repeated indices accumulate. For Method::Lle only L is built and gamma is 1.
AlignmentMatrix build_alignment(const NeighborIndex& idx, const WeightSet& weights, double gamma,
                                Storage storage = Storage::Auto);

/// max_r |(G e)_r|; zero in exact arithmetic for weights satisfying their constraints.
double check_null_vector(const AlignmentMatrix& g);

/// One "row col value" line per stored entry (upper and lower triangle).
void write_coordinate_list(const AlignmentMatrix& g, std::ostream& out);

}  // namespace hne
