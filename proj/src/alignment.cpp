#include "hne/alignment.hpp"

#include <Eigen/SparseCore>

#include <ostream>
#include <vector>

namespace hne {

AlignmentMatrix::AlignmentMatrix(Eigen::MatrixXd dense, double gamma)
    : sparse_(false), gamma_(gamma), dense_(std::move(dense)) {}

AlignmentMatrix::AlignmentMatrix(Eigen::SparseMatrix<double> sparse, double gamma)
    : sparse_(true), gamma_(gamma), sparse_matrix_(std::move(sparse)) {}

const Eigen::MatrixXd& AlignmentMatrix::dense() const {
  if (sparse_) throw Error(ErrorCode::InvalidArgument, "alignment matrix is stored sparse");
  return dense_;
}

const Eigen::SparseMatrix<double>& AlignmentMatrix::sparse() const {
  if (!sparse_) throw Error(ErrorCode::InvalidArgument, "alignment matrix is stored dense");
  return sparse_matrix_;
}

double AlignmentMatrix::coeff(Index r, Index c) const {
  return sparse_ ? sparse_matrix_.coeff(r, c) : dense_(r, c);
}

Eigen::VectorXd AlignmentMatrix::multiply(const Eigen::VectorXd& v) const {
  if (sparse_) return sparse_matrix_ * v;
  return dense_ * v;
}

Eigen::MatrixXd AlignmentMatrix::to_dense() const {
  if (sparse_) return Eigen::MatrixXd(sparse_matrix_);
  return dense_;
}

namespace {

// Accumulates scale * v v^T over the index list `at`, touching only the upper
// triangle so that mirroring afterwards gives an exactly symmetric matrix.
template <typename Sink>
void scatter_rank_one(const std::vector<Index>& at, const std::vector<double>& v, double scale,
                      Sink&& add) {
  const std::size_t m = at.size();
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      const Index a = at[p];
      const Index b = at[q];
      if (a > b) continue;
      add(a, b, scale * (v[p] * v[q]));
    }
  }
}

template <typename Sink>
void assemble(const NeighborIndex& idx, const WeightSet& w, double gamma, bool with_outer,
              Sink&& add) {
  const Index k = idx.k();
  std::vector<Index> at;
  std::vector<double> v;
  for (Index i = 0; i < idx.n(); ++i) {
    at.assign(1, i);
    v.assign(1, -1.0);
    for (Index l = 0; l < k; ++l) {
      at.push_back(idx.inner(i, l));
      v.push_back(w.inner(i, l));
    }
    scatter_rank_one(at, v, gamma, add);

    if (!with_outer) continue;
    at.assign(1, i);
    v.assign(1, -1.0);
    for (Index l = 0; l < k; ++l) {
      for (Index j = 0; j < k; ++j) {
        at.push_back(idx.outer(i, l, j));
        v.push_back(w.joint_at(i, l, j));
      }
    }
    scatter_rank_one(at, v, 1.0, add);
  }
}

}  // namespace

AlignmentMatrix build_alignment(const NeighborIndex& idx, const WeightSet& weights, double gamma,
                                Storage storage) {
  const Index n = idx.n();
  if (weights.n() != n || weights.k != idx.k()) {
    throw Error(ErrorCode::DimensionMismatch, "weights do not match neighbor index");
  }
  const bool with_outer = weights.variant != Method::Lle;
  if (!with_outer) gamma = 1.0;
  if (with_outer && !weights.has_outer()) {
    throw Error(ErrorCode::InvalidArgument, "hierarchic weight set has no outer weights");
  }

  const bool sparse = storage == Storage::Sparse || (storage == Storage::Auto && n > kDenseLimit);
  if (!sparse) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    assemble(idx, weights, gamma, with_outer, [&g](Index a, Index b, double x) { g(a, b) += x; });
    g.triangularView<Eigen::StrictlyLower>() = g.transpose();
    return AlignmentMatrix(std::move(g), gamma);
  }

  std::vector<Eigen::Triplet<double>> triplets;
  const Index k = idx.k();
  triplets.reserve(static_cast<std::size_t>(n * ((k + 1) * (k + 1) + (with_outer ? (k * k + 1) * (k * k + 1) : 0)) / 2 + n));
  assemble(idx, weights, gamma, with_outer,
           [&triplets](Index a, Index b, double x) { triplets.emplace_back(a, b, x); });
  Eigen::SparseMatrix<double> upper(n, n);
  upper.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SparseMatrix<double> full = upper.selfadjointView<Eigen::Upper>();
  full.makeCompressed();
  return AlignmentMatrix(std::move(full), gamma);
}

double check_null_vector(const AlignmentMatrix& g) {
  return g.multiply(Eigen::VectorXd::Ones(g.n())).cwiseAbs().maxCoeff();
}

void write_coordinate_list(const AlignmentMatrix& g, std::ostream& out) {
  const auto old_precision = out.precision(17);
  if (g.is_sparse()) {
    const auto& s = g.sparse();
    for (Index c = 0; c < s.outerSize(); ++c) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(s, c); it; ++it) {
        out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
      }
    }
  } else {
    const auto& d = g.dense();
    for (Index c = 0; c < d.cols(); ++c) {
      for (Index r = 0; r < d.rows(); ++r) {
        if (d(r, c) != 0.0) out << r << ' ' << c << ' ' << d(r, c) << '\n';
      }
    }
  }
  out.precision(old_precision);
}

}  // namespace hne
