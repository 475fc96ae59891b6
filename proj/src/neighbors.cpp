#include "hne/neighbors.hpp"

#include <algorithm>
#include <utility>

namespace hne {

std::vector<Index> build_knn(const DataMatrix& data, Index k) {
  const Index n = data.n();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (k > n - 1) {
    throw Error(ErrorCode::KTooLarge,
                "k = " + std::to_string(k) + " needs at least k+1 points, got n = " + std::to_string(n));
  }

  const auto& x = data.points();
  std::vector<Index> result(static_cast<std::size_t>(n * k));
  std::vector<std::pair<double, Index>> candidates(static_cast<std::size_t>(n - 1));

  for (Index i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      // Difference form keeps d(i,j) == d(j,i) bit-for-bit, so ties are exact.
      candidates[c++] = {(x.row(i) - x.row(j)).squaredNorm(), j};
    }
    // pair ordering is (distance, index): ties go to the smaller index.
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                      candidates.end());
    for (Index l = 0; l < k; ++l) {
      result[static_cast<std::size_t>(i * k + l)] = candidates[static_cast<std::size_t>(l)].second;
    }
  }
  return result;
}

NeighborIndex build_hierarchic(const DataMatrix& data, Index k) {
  return NeighborIndex(data.n(), k, build_knn(data, k));
}

}  // namespace hne
