#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tango/knn.hpp"

namespace tango {

/// Sparse symmetric shared-nearest-neighbor similarity graph. An entry
/// exists for a pair (i, j) only when one of them is a k-neighbor of the
/// other and they share at least one neighbor; stored values are strictly
/// positive and bounded by k. Per-point adjacency lists are sorted by
/// descending similarity, ties by ascending id.
struct SimilarityGraph {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;  // n + 1
  std::vector<PointId> adj;
  std::vector<double> value;

  std::size_t degree(std::size_t i) const {
    return offsets[i + 1] - offsets[i];
  }
  std::span<const PointId> neighbors_of(std::size_t i) const {
    return {adj.data() + offsets[i], degree(i)};
  }
  std::span<const double> values_of(std::size_t i) const {
    return {value.data() + offsets[i], degree(i)};
  }
};

/// Per-point density in [0, 1]; the maximum entry is exactly 1 unless every
/// raw similarity sum is zero.
using DensityVector = std::vector<double>;

/// Builds the SNN similarity graph. Each shared neighbor p of a candidate
/// pair contributes exp(-((d(p,i)+d(p,j)) / (2*d_max))^2). Throws DataError
/// when knn.d_max == 0 (all neighborhoods degenerate). Deterministic for
/// any worker count.
SimilarityGraph snn_similarity(const KnnGraph& knn, int workers = 0);

/// Density of each point: the sum of its k largest incident similarities
/// (fewer if the degree is smaller), normalized by the global maximum sum.
DensityVector density(const SimilarityGraph& sim, int k);

}  // namespace tango
