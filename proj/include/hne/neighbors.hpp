#pragma once

#include "hne/core.hpp"

#include <vector>

namespace hne {

/// Exact Euclidean k-NN. Row i holds the k nearest points to x_i (excluding i)
/// sorted by ascending distance; equal distances resolve to the smaller index.
/// Returned flat, row-major n x k.
std::vector<Index> build_knn(const DataMatrix& data, Index k);

/// Two-layer neighbor graph: the k-NN lists and the k-NN lists of each neighbor.
NeighborIndex build_hierarchic(const DataMatrix& data, Index k);

}  // namespace hne
