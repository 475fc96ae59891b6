#include "support/oracles.hpp"

#include "hne/alignment.hpp"
#include "hne/datasets.hpp"
#include "hne/hne_weights.hpp"
#include "hne/neighbors.hpp"
#include "hne/spectral.hpp"

#include <doctest.h>

using namespace hne;
using namespace hne::testing;

namespace {

AlignmentMatrix alignment_for(const DataMatrix& data, Index k, Method m, Storage s = Storage::Auto) {
  const NeighborIndex idx = build_hierarchic(data, k);
  return build_alignment(idx, compute_weights(data, idx, m, 1e-3, 2), 1.0, s);
}

void check_invariants(const AlignmentMatrix& g, const EmbeddingResult& r) {
  const Index n = g.n();
  const Index d = r.Y.rows();
  const Eigen::MatrixXd dense = g.to_dense();
  CHECK((r.Y * r.Y.transpose() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-8);
  const double scale = std::max(1.0, r.eigenvalues.maxCoeff());
  for (Index a = 0; a < d; ++a) {
    const Eigen::VectorXd y = r.Y.row(a).transpose();
    CHECK((dense * y - r.eigenvalues(a) * y).norm() <= 1e-8 * scale);
    CHECK(std::abs(y.sum()) <= 1e-6 * std::sqrt(static_cast<double>(n)));
    Index arg = 0;
    y.cwiseAbs().maxCoeff(&arg);
    CHECK(y(arg) > 0.0);
  }
}

}  // namespace

TEST_CASE("five point chain") {
  DataMatrix::Matrix m(5, 1);
  m << 0, 1, 2, 3, 4;
  const AlignmentMatrix g = alignment_for(DataMatrix(m), 1, Method::Lle);
  const EmbeddingResult r = embed(g, 1);
  check_invariants(g, r);
  const Eigen::VectorXd y = r.Y.row(0).transpose();
  CHECK(y.dot(g.to_dense() * y) == doctest::Approx(r.eigenvalues(0)).epsilon(1e-10));
  CHECK(r.null_eigenvalue < 1e-12);
}

TEST_CASE("full spectrum matches Jacobi") {
  Rng rng(31);
  for (Method m : {Method::Lle, Method::Ihne, Method::Rhne, Method::Bhne}) {
    const DataMatrix data = random_points(rng, 6, 3);
    const AlignmentMatrix g = alignment_for(data, 2, m);
    const EmbeddingResult r = embed(g, 5);
    check_invariants(g, r);
    const auto [values, vectors] = jacobi_eigen(g.to_dense());
    CHECK(std::abs(values(0) - r.null_eigenvalue) < 1e-9);
    for (Index a = 0; a < 5; ++a) CHECK(std::abs(values(a + 1) - r.eigenvalues(a)) < 1e-9);
    const Eigen::MatrixXd proj = r.Y * g.to_dense() * r.Y.transpose();
    CHECK((proj - Eigen::MatrixXd(r.eigenvalues.asDiagonal())).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(embed(alignment_for(random_points(rng, 6, 3), 2, Method::Lle), 6), Error);
}

TEST_CASE("trace is minimal over orthonormal frames") {
  Rng rng(32);
  const DataMatrix data = random_points(rng, 60, 3);
  for (Method m : {Method::Lle, Method::Rhne}) {
    const AlignmentMatrix g = alignment_for(data, 5, m);
    const Eigen::MatrixXd dense = g.to_dense();
    const EmbeddingResult r = embed(g, 2);
    const double best = (r.Y * dense * r.Y.transpose()).trace();
    Eigen::MatrixXd frame(60, 3);
    for (int t = 0; t < 50; ++t) {
      frame.col(0).setOnes();
      frame.rightCols(2) = random_gaussian(rng, 60, 2);
      const Eigen::MatrixXd q = gram_schmidt(frame).rightCols(2).transpose();
      CHECK(best <= (q * dense * q.transpose()).trace() + 1e-9);
    }
  }
}

TEST_CASE("disconnected graph is flagged") {
  DataMatrix::Matrix m(10, 2);
  for (Index i = 0; i < 5; ++i) {
    m.row(i) << static_cast<double>(i), 0.1 * static_cast<double>(i * i);
    m.row(i + 5) << 100.0 + static_cast<double>(i), 0.1 * static_cast<double>(i * i);
  }
  const AlignmentMatrix g = alignment_for(DataMatrix(m), 2, Method::Lle);
  const EmbeddingResult r = embed(g, 1);
  CHECK(r.degenerate_spectrum);
  CHECK_FALSE(r.warnings.empty());
  CHECK(std::abs(r.Y.row(0).sum()) < 1e-8);
}

TEST_CASE("invariants on the Swiss roll") {
  const SwissRoll sr = swiss_roll(200, 1, false);
  for (Method m : {Method::Lle, Method::Ihne, Method::Rhne, Method::Bhne}) {
    const AlignmentMatrix g = alignment_for(sr.data, 6, m);
    const EmbeddingResult r = embed(g, 2);
    check_invariants(g, r);
    CHECK_FALSE(r.degenerate_spectrum);
  }
}

TEST_CASE("iterative solver agrees with the dense one") {
  const SwissRoll sr = swiss_roll(400, 2, false);
  for (Method m : {Method::Lle, Method::Rhne}) {
    const AlignmentMatrix dense = alignment_for(sr.data, 6, m, Storage::Dense);
    const AlignmentMatrix sparse = alignment_for(sr.data, 6, m, Storage::Sparse);
    const EmbeddingResult a = embed(dense, 2, EigenMethod::Dense);
    const EmbeddingResult b = embed(sparse, 2, EigenMethod::Iterative);
    const EmbeddingResult c = embed(dense, 2, EigenMethod::Iterative);
    check_invariants(sparse, b);
    for (Index t = 0; t < 2; ++t) {
      CHECK(std::abs(a.eigenvalues(t) - b.eigenvalues(t)) < 1e-8 * std::max(1.0, a.eigenvalues(t)));
      CHECK(std::abs(a.eigenvalues(t) - c.eigenvalues(t)) < 1e-8 * std::max(1.0, a.eigenvalues(t)));
    }
    CHECK((a.Y - b.Y).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("sign convention") {
  Eigen::VectorXd v(4);
  v << 0.1, -0.7, 0.7, 0.2;
  apply_sign_convention(v);
  CHECK(v(1) == 0.7);
  CHECK(v(2) == -0.7);
  v << 0.1, 0.3, -0.5, 0.2;
  apply_sign_convention(v);
  CHECK(v(2) == 0.5);
}
