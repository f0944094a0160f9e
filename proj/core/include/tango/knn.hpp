#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tango/dataset.hpp"

namespace tango {

/// Exact k-nearest-neighbor lists (self excluded) plus the global scale
/// constant d_max = max over points of the distance to their k-th neighbor.
struct KnnGraph {
  int k = 0;
  std::size_t n = 0;
  /// n*k neighbor ids, each row sorted by ascending (distance, id).
  std::vector<PointId> neighbors;
  /// n*k Euclidean distances matching `neighbors`.
  std::vector<double> distances;
  double d_max = 0.0;

  std::span<const PointId> neighbors_of(std::size_t i) const {
    return {neighbors.data() + i * k, static_cast<std::size_t>(k)};
  }
  std::span<const double> distances_of(std::size_t i) const {
    return {distances.data() + i * k, static_cast<std::size_t>(k)};
  }
};

/// Exact Euclidean kNN for every point. Distance ties break by ascending
/// point id, so the output is deterministic and independent of the worker
/// count. Requires 1 <= k <= n-1. `workers` = 0 picks a hardware default.
KnnGraph build_knn(const DataMatrix& data, int k, int workers = 0);

}  // namespace tango
