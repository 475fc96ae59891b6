#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hne {

using Index = Eigen::Index;

enum class ErrorCode {
  InvalidArgument,
  KTooLarge,
  DTooLarge,
  NonFinite,
  SingularSystem,
  ConvergenceFailure,
  IoError,
  InconsistentDimensions,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Carries a machine-readable code and, for
/// per-point numerical failures, the offending point index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<Index> point = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<Index> point() const noexcept { return point_; }

 private:
  ErrorCode code_;
  std::optional<Index> point_;
};

/// n points in D dimensions, one point per row. Entries are finite.
class DataMatrix {
 public:
  using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit DataMatrix(Matrix points);

  const Matrix& points() const noexcept { return points_; }
  Index n() const noexcept { return points_.rows(); }
  Index dim() const noexcept { return points_.cols(); }

  auto point(Index i) const { return points_.row(i); }

 private:
  Matrix points_;
};

/// Inner k-NN lists plus, for every inner neighbor, its own k-NN list.
/// outer(i, l, j) == inner(inner(i, l), j); repetitions (including i) are kept.
class NeighborIndex {
 public:
  NeighborIndex(Index n, Index k, std::vector<Index> inner);

  Index n() const noexcept { return n_; }
  Index k() const noexcept { return k_; }

  Index inner(Index i, Index l) const { return inner_[static_cast<std::size_t>(i * k_ + l)]; }
  Index outer(Index i, Index l, Index j) const { return inner(inner(i, l), j); }

  /// Row i of the inner layer.
  std::vector<Index> inner_row(Index i) const;
  /// All k*k outer indices of point i in (l, j) order.
  std::vector<Index> outer_flat(Index i) const;

 private:
  Index n_;
  Index k_;
  std::vector<Index> inner_;
};

enum class Method { Lle, Ihne, Rhne, Bhne };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Inner weights (n x k) and, for the hierarchic variants, outer weights
/// (n x k x k) stored factored. For RHNE the product inner*outer is the
/// joint weight of the outer point.
struct WeightSet {
  Method variant = Method::Lle;
  Index k = 0;
  Eigen::MatrixXd inner;      // n x k
  std::vector<double> outer;  // n*k*k, empty for Method::Lle
  // RHNE only: number of blocks per point where the inner weight was too small
  // to divide the joint weight by.
  std::vector<int> zero_inner_warnings;

  Index n() const noexcept { return inner.rows(); }
  bool has_outer() const noexcept { return !outer.empty(); }

  double& outer_at(Index i, Index l, Index j) {
    return outer[static_cast<std::size_t>((i * k + l) * k + j)];
  }
  double outer_at(Index i, Index l, Index j) const {
    return outer[static_cast<std::size_t>((i * k + l) * k + j)];
  }
  double joint_at(Index i, Index l, Index j) const { return inner(i, l) * outer_at(i, l, j); }
};

/// Worst deviations from the variant's sum constraints.
struct ConstraintReport {
  double inner_sum = 0.0;   // max_i |sum_l w_il - 1|
  double outer_sum = 0.0;   // IHNE/BHNE: max_{i,l} |sum_j w_il^(j) - 1|
  double joint_sum = 0.0;   // all hierarchic: max_i |sum_l sum_j w_il w_il^(j) - 1|
};

ConstraintReport check_constraints(const WeightSet& weights);

/// Low-dimensional coordinates, one coordinate per row (d x n), with Y Y^T = I.
struct EmbeddingResult {
  Eigen::MatrixXd Y;
  Eigen::VectorXd eigenvalues;  // the d retained eigenvalues, ascending
  double null_eigenvalue = 0.0;  // the discarded (smallest) eigenvalue
  bool degenerate_spectrum = false;
  Eigen::VectorXd inner_residual;  // filled by the pipeline, empty otherwise
  Eigen::VectorXd hier_residual;
  std::vector<std::string> warnings;
};

struct EmbedConfig {
  Index k = 5;
  Index d = 2;
  Method method = Method::Lle;
  double gamma = 1.0;
  double sigma_reg = 1e-3;
  int bhne_rotations = 2;
  unsigned long long seed = 0;
};

/// Returns cfg unchanged if it is admissible for data, throws Error otherwise.
EmbedConfig validate_config(const EmbedConfig& cfg, const DataMatrix& data);

}  // namespace hne
