#include "hne/hne_weights.hpp"

#include "hne/lle_weights.hpp"

#include <cmath>

namespace hne {

namespace {

void check_inputs(const DataMatrix& data, const NeighborIndex& idx, const Eigen::MatrixXd& inner) {
  if (idx.n() != data.n() || inner.rows() != data.n() || inner.cols() != idx.k()) {
    throw Error(ErrorCode::DimensionMismatch, "weights, neighbor index and data disagree in shape");
  }
}

WeightSet make_set(Method variant, const NeighborIndex& idx, const Eigen::MatrixXd& inner) {
  WeightSet w;
  w.variant = variant;
  w.k = idx.k();
  w.inner = inner;
  w.outer.assign(static_cast<std::size_t>(idx.n() * idx.k() * idx.k()), 0.0);
  return w;
}

// Rethrows a singular local solve tagged with the point it belongs to.
[[noreturn]] void rethrow_at(const Error& e, Index i) {
  if (e.code() != ErrorCode::SingularSystem) throw e;
  throw Error(ErrorCode::SingularSystem,
              "outer weights of point " + std::to_string(i) + " are singular", i);
}

}  // namespace

WeightSet solve_ihne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg) {
  check_inputs(data, idx, inner);
  const Index n = data.n();
  const Index k = idx.k();
  WeightSet w = make_set(Method::Ihne, idx, inner);

  for (Index i = 0; i < n; ++i) {
    const Eigen::VectorXd center = data.point(i).transpose();
    for (Index l = 0; l < k; ++l) {
      Eigen::VectorXd block;
      if (std::abs(inner(i, l)) <= kZeroInnerWeight) {
        block = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
      } else {
        try {
          block = solve_local(center, gather_columns(data, idx.inner_row(idx.inner(i, l))),
                              sigma_reg);
        } catch (const Error& e) {
          rethrow_at(e, i);
        }
      }
      for (Index j = 0; j < k; ++j) w.outer_at(i, l, j) = block(j);
    }
  }
  return w;
}

WeightSet solve_rhne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg) {
  check_inputs(data, idx, inner);
  const Index n = data.n();
  const Index k = idx.k();
  const double uniform = 1.0 / static_cast<double>(k);
  WeightSet w = make_set(Method::Rhne, idx, inner);
  w.zero_inner_warnings.assign(static_cast<std::size_t>(n), 0);

  for (Index i = 0; i < n; ++i) {
    Eigen::VectorXd joint;
    try {
      joint = solve_local(data.point(i).transpose(), gather_columns(data, idx.outer_flat(i)),
                          sigma_reg);
    } catch (const Error& e) {
      rethrow_at(e, i);
    }

    int zero_blocks = 0;
    double orphaned_inner = 0.0;  // sum of inner weights of zero blocks
    double kept_joint = 0.0;      // joint mass carried by the divisible blocks
    for (Index l = 0; l < k; ++l) {
      const double wl = inner(i, l);
      if (std::abs(wl) <= kZeroInnerWeight) {
        ++zero_blocks;
        orphaned_inner += wl;
        for (Index j = 0; j < k; ++j) w.outer_at(i, l, j) = uniform;
        continue;
      }
      for (Index j = 0; j < k; ++j) {
        const double jw = joint(l * k + j);
        w.outer_at(i, l, j) = jw / wl;
        kept_joint += jw;
      }
    }
    if (zero_blocks == 0) continue;

    w.zero_inner_warnings[static_cast<std::size_t>(i)] = zero_blocks;
    // Zero blocks contribute exactly their inner weight to the joint sum; rescale
    // the rest so that the total is one again.
    const double target = 1.0 - orphaned_inner;
    if (std::abs(kept_joint) > kZeroInnerWeight) {
      const double scale = target / kept_joint;
      for (Index l = 0; l < k; ++l) {
        if (std::abs(inner(i, l)) <= kZeroInnerWeight) continue;
        for (Index j = 0; j < k; ++j) w.outer_at(i, l, j) *= scale;
      }
    } else {
      for (Index l = 0; l < k; ++l) {
        for (Index j = 0; j < k; ++j) w.outer_at(i, l, j) = uniform;
      }
    }
  }
  return w;
}

BhnePoint solve_bhne_point(const DataMatrix& data, const NeighborIndex& idx,
                           const Eigen::MatrixXd& inner, Index i, double sigma_reg,
                           int rotations) {
  const Index k = idx.k();
  const Index dim = data.dim();
  if (rotations < 1) throw Error(ErrorCode::InvalidArgument, "rotations must be >= 1");

  const Eigen::VectorXd center = data.point(i).transpose();
  std::vector<Eigen::MatrixXd> outer_points;
  outer_points.reserve(static_cast<std::size_t>(k));
  for (Index l = 0; l < k; ++l) {
    outer_points.push_back(gather_columns(data, idx.inner_row(idx.inner(i, l))));
  }

  BhnePoint result;
  result.outer = Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(k));
  // recon.col(l) = sum_j w_il^(j) x_il^(j) under the current outer weights.
  Eigen::MatrixXd recon(dim, k);
  for (Index l = 0; l < k; ++l) recon.col(l) = outer_points[l] * result.outer.row(l).transpose();

  Eigen::MatrixXd inner_points(dim, k);
  for (Index l = 0; l < k; ++l) inner_points.col(l) = data.point(idx.inner(i, l)).transpose();

  const Eigen::VectorXd wi = inner.row(i).transpose();
  for (int sweep = 0; sweep <= rotations; ++sweep) {
    const Eigen::MatrixXd& others = sweep == 0 ? inner_points : recon;
    for (Index l = 0; l < k; ++l) {
      const double wl = wi(l);
      if (std::abs(wl) <= kZeroInnerWeight) continue;
      // x_i minus every block except l. On sweeps after the first, `recon`
      // already holds this sweep's blocks m < l (Gauss-Seidel).
      Eigen::VectorXd target = center - others * wi + wl * others.col(l);
      try {
        const Eigen::VectorXd block = solve_local(target / wl, outer_points[l], sigma_reg);
        result.outer.row(l) = block.transpose();
      } catch (const Error& e) {
        rethrow_at(e, i);
      }
      recon.col(l) = outer_points[l] * result.outer.row(l).transpose();
    }
    result.objectives.push_back((center - recon * wi).squaredNorm());
  }
  return result;
}

WeightSet solve_bhne(const DataMatrix& data, const NeighborIndex& idx,
                     const Eigen::MatrixXd& inner, double sigma_reg, int rotations) {
  check_inputs(data, idx, inner);
  const Index k = idx.k();
  WeightSet w = make_set(Method::Bhne, idx, inner);
  for (Index i = 0; i < data.n(); ++i) {
    const BhnePoint point = solve_bhne_point(data, idx, inner, i, sigma_reg, rotations);
    for (Index l = 0; l < k; ++l) {
      for (Index j = 0; j < k; ++j) w.outer_at(i, l, j) = point.outer(l, j);
    }
  }
  return w;
}

WeightSet compute_weights(const DataMatrix& data, const NeighborIndex& idx, Method method,
                          double sigma_reg, int rotations) {
  if (method == Method::Lle) return lle_weights(data, idx, sigma_reg);
  const Eigen::MatrixXd inner = solve_inner(data, idx, sigma_reg);
  switch (method) {
    case Method::Ihne: return solve_ihne(data, idx, inner, sigma_reg);
    case Method::Rhne: return solve_rhne(data, idx, inner, sigma_reg);
    case Method::Bhne: return solve_bhne(data, idx, inner, sigma_reg, rotations);
    case Method::Lle: break;
  }
  return lle_weights(data, idx, sigma_reg);
}

Residuals hierarchic_residuals(const DataMatrix& data, const NeighborIndex& idx,
                               const WeightSet& weights) {
  const Index n = data.n();
  const Index k = idx.k();
  if (weights.n() != n || weights.k != k) {
    throw Error(ErrorCode::DimensionMismatch, "weights do not match neighbor index");
  }
  Residuals r;
  r.inner.resize(n);
  r.hier.resize(n);
  for (Index i = 0; i < n; ++i) {
    Eigen::RowVectorXd inner_rec = Eigen::RowVectorXd::Zero(data.dim());
    Eigen::RowVectorXd hier_rec = Eigen::RowVectorXd::Zero(data.dim());
    for (Index l = 0; l < k; ++l) {
      inner_rec += weights.inner(i, l) * data.point(idx.inner(i, l));
      if (!weights.has_outer()) continue;
      for (Index j = 0; j < k; ++j) {
        hier_rec += weights.joint_at(i, l, j) * data.point(idx.outer(i, l, j));
      }
    }
    r.inner(i) = (data.point(i) - inner_rec).norm();
    r.hier(i) = weights.has_outer() ? (data.point(i) - hier_rec).norm() : r.inner(i);
  }
  return r;
}

}  // namespace hne
