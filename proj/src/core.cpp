#include "hne/core.hpp"

#include <algorithm>
#include <cmath>

namespace hne {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DTooLarge: return "DTooLarge";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InconsistentDimensions: return "InconsistentDimensions";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<Index> point)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      point_(point) {}

DataMatrix::DataMatrix(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "data matrix must have at least one row and one column");
  }
  if (!points_.allFinite()) {
    throw Error(ErrorCode::NonFinite, "data matrix contains NaN or Inf");
  }
}

NeighborIndex::NeighborIndex(Index n, Index k, std::vector<Index> inner_table)
    : n_(n), k_(k), inner_(std::move(inner_table)) {
  if (k_ < 1 || k_ > n_ - 1) {
    throw Error(ErrorCode::KTooLarge, "neighborhood size must satisfy 1 <= k <= n-1");
  }
  if (static_cast<Index>(inner_.size()) != n_ * k_) {
    throw Error(ErrorCode::InvalidArgument, "inner index table has wrong size");
  }
  for (Index i = 0; i < n_; ++i) {
    for (Index l = 0; l < k_; ++l) {
      const Index j = inner(i, l);
      if (j < 0 || j >= n_ || j == i) {
        throw Error(ErrorCode::InvalidArgument, "invalid inner neighbor index", i);
      }
    }
  }
}

std::vector<Index> NeighborIndex::inner_row(Index i) const {
  const auto first = inner_.begin() + static_cast<std::ptrdiff_t>(i * k_);
  return {first, first + static_cast<std::ptrdiff_t>(k_)};
}

std::vector<Index> NeighborIndex::outer_flat(Index i) const {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(k_ * k_));
  for (Index l = 0; l < k_; ++l) {
    for (Index j = 0; j < k_; ++j) out.push_back(outer(i, l, j));
  }
  return out;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Lle: return "lle";
    case Method::Ihne: return "ihne";
    case Method::Rhne: return "rhne";
    case Method::Bhne: return "bhne";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Lle, Method::Ihne, Method::Rhne, Method::Bhne}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

ConstraintReport check_constraints(const WeightSet& w) {
  ConstraintReport report;
  const Index n = w.n();
  const Index k = w.k;
  for (Index i = 0; i < n; ++i) {
    report.inner_sum = std::max(report.inner_sum, std::abs(w.inner.row(i).sum() - 1.0));
    if (!w.has_outer()) continue;
    double joint = 0.0;
    for (Index l = 0; l < k; ++l) {
      double block = 0.0;
      for (Index j = 0; j < k; ++j) {
        block += w.outer_at(i, l, j);
        joint += w.joint_at(i, l, j);
      }
      report.outer_sum = std::max(report.outer_sum, std::abs(block - 1.0));
    }
    report.joint_sum = std::max(report.joint_sum, std::abs(joint - 1.0));
  }
  return report;
}

EmbedConfig validate_config(const EmbedConfig& cfg, const DataMatrix& data) {
  const Index n = data.n();
  const Index dim = data.dim();
  if (cfg.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (cfg.k >= n) {
    throw Error(ErrorCode::KTooLarge,
                "k = " + std::to_string(cfg.k) + " but n = " + std::to_string(n) + " (need k <= n-1)");
  }
  if (cfg.d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (cfg.d >= dim || cfg.d >= n) {
    throw Error(ErrorCode::DTooLarge, "d = " + std::to_string(cfg.d) + " must be below D = " +
                                          std::to_string(dim) + " and n = " + std::to_string(n));
  }
  if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "gamma must lie in [0, 1]");
  }
  if (!(cfg.sigma_reg >= 0.0) || !std::isfinite(cfg.sigma_reg)) {
    throw Error(ErrorCode::InvalidArgument, "sigma_reg must be finite and >= 0");
  }
  if (cfg.bhne_rotations < 1) throw Error(ErrorCode::InvalidArgument, "rotations must be >= 1");
  if (!data.points().allFinite()) throw Error(ErrorCode::NonFinite, "data contains NaN or Inf");
  return cfg;
}

}  // namespace hne
