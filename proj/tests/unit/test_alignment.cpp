#include "support/oracles.hpp"

#include "hne/alignment.hpp"
#include "hne/hne_weights.hpp"
#include "hne/neighbors.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace hne;
using namespace hne::testing;

namespace {

const Method kAll[] = {Method::Lle, Method::Ihne, Method::Rhne, Method::Bhne};

struct Instance {
  DataMatrix data;
  NeighborIndex idx;
};

Instance random_instance(Rng& rng, Index n, Index dim, Index k) {
  DataMatrix data = random_points(rng, n, dim);
  NeighborIndex idx = build_hierarchic(data, k);
  return {std::move(data), std::move(idx)};
}

}  // namespace

TEST_CASE("three collinear points") {
  DataMatrix::Matrix m(3, 1);
  m << 0, 1, 2;
  const DataMatrix data(m);
  const NeighborIndex idx = build_hierarchic(data, 1);
  const WeightSet w = compute_weights(data, idx, Method::Lle, 1e-3, 2);
  const Eigen::MatrixXd g = build_alignment(idx, w, 1.0).to_dense();
  Eigen::Matrix3d expect;
  expect << 2, -2, 0, -2, 3, -1, 0, -1, 1;
  CHECK((g - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("constant vector is in the null space") {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance in = random_instance(rng, 30 + trial, 2 + trial % 4, 2 + trial % 4);
    for (Method m : kAll) {
      const WeightSet w = compute_weights(in.data, in.idx, m, 1e-3, 2);
      for (Storage s : {Storage::Dense, Storage::Sparse}) {
        CHECK(check_null_vector(build_alignment(in.idx, w, 0.5, s)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("symmetric and positive semidefinite") {
  Rng rng(2);
  const Instance in = random_instance(rng, 40, 3, 4);
  for (Method m : kAll) {
    const WeightSet w = compute_weights(in.data, in.idx, m, 1e-3, 2);
    const Eigen::MatrixXd g = build_alignment(in.idx, w, 1.0).to_dense();
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (int t = 0; t < 100; ++t) {
      const Eigen::VectorXd v = random_gaussian(rng, 40, 1);
      CHECK(v.dot(g * v) >= -1e-9);
    }
  }
}

TEST_CASE("linear in gamma") {
  Rng rng(3);
  const Instance in = random_instance(rng, 25, 3, 3);
  for (Method m : {Method::Ihne, Method::Rhne, Method::Bhne}) {
    const WeightSet w = compute_weights(in.data, in.idx, m, 1e-3, 2);
    const Eigen::MatrixXd outer_only = build_alignment(in.idx, w, 0.0).to_dense();
    WeightSet inner_only = w;
    inner_only.variant = Method::Lle;
    inner_only.outer.clear();
    const Eigen::MatrixXd l = build_alignment(in.idx, inner_only, 1.0).to_dense();
    for (double gamma : {0.0, 0.25, 1.0}) {
      const Eigen::MatrixXd g = build_alignment(in.idx, w, gamma).to_dense();
      CHECK((g - (gamma * l + outer_only)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("dense and sparse assembly agree") {
  Rng rng(4);
  const Instance in = random_instance(rng, 50, 4, 5);
  for (Method m : kAll) {
    const WeightSet w = compute_weights(in.data, in.idx, m, 1e-3, 2);
    const AlignmentMatrix dense = build_alignment(in.idx, w, 0.7, Storage::Dense);
    const AlignmentMatrix sparse = build_alignment(in.idx, w, 0.7, Storage::Sparse);
    CHECK_FALSE(dense.is_sparse());
    CHECK(sparse.is_sparse());
    CHECK((dense.to_dense() - sparse.to_dense()).cwiseAbs().maxCoeff() < 1e-13);
    const Eigen::VectorXd v = random_gaussian(rng, 50, 1);
    CHECK((dense.multiply(v) - sparse.multiply(v)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("nonzeros stay inside local neighborhoods") {
  Rng rng(5);
  const Instance in = random_instance(rng, 30, 3, 3);
  const WeightSet w = compute_weights(in.data, in.idx, Method::Bhne, 1e-3, 2);
  const Eigen::MatrixXd g = build_alignment(in.idx, w, 1.0).to_dense();
  std::vector<std::set<Index>> groups;
  for (Index p = 0; p < 30; ++p) {
    std::set<Index> grp{p};
    for (Index v : in.idx.inner_row(p)) grp.insert(v);
    for (Index v : in.idx.outer_flat(p)) grp.insert(v);
    groups.push_back(std::move(grp));
  }
  for (Index r = 0; r < 30; ++r) {
    for (Index c = 0; c < 30; ++c) {
      if (g(r, c) == 0.0) continue;
      bool covered = false;
      for (const auto& grp : groups) covered = covered || (grp.count(r) && grp.count(c));
      CHECK(covered);
    }
  }
}

TEST_CASE("broken constraint shows up in G e") {
  Rng rng(6);
  const Instance in = random_instance(rng, 20, 3, 4);
  WeightSet w = compute_weights(in.data, in.idx, Method::Lle, 1e-3, 2);
  w.inner.row(0) *= 1.1;
  // row 0 now sums to 1.1; (G e)_0 picks up -0.1 from its own term
  CHECK(check_null_vector(build_alignment(in.idx, w, 1.0)) > 1e-3);
}

TEST_CASE("coordinate list round trip") {
  Rng rng(7);
  const Instance in = random_instance(rng, 12, 2, 3);
  const WeightSet w = compute_weights(in.data, in.idx, Method::Rhne, 1e-3, 2);
  for (Storage s : {Storage::Dense, Storage::Sparse}) {
    const AlignmentMatrix g = build_alignment(in.idx, w, 1.0, s);
    std::stringstream buf;
    write_coordinate_list(g, buf);
    Eigen::MatrixXd back = Eigen::MatrixXd::Zero(12, 12);
    Index r, c;
    double v;
    while (buf >> r >> c >> v) back(r, c) = v;
    CHECK((back - g.to_dense()).cwiseAbs().maxCoeff() == 0.0);
  }
}
