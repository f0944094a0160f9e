#pragma once

#include <cstdint>
#include <vector>

#include "tango/similarity.hpp"

namespace tango {

/// Strict total order used everywhere a "higher density" comparison is
/// needed: compare (density, id) lexicographically. Guarantees the leader
/// graph is acyclic even across density ties.
inline bool density_order_less(const DensityVector& rho, PointId a,
                               PointId b) {
  if (rho[a] != rho[b]) return rho[a] < rho[b];
  return a < b;
}

/// Point ids sorted ascending under the (density, id) order.
std::vector<PointId> density_ascending_order(const DensityVector& rho);

/// Leader selection shared by the dependency forest and the baselines:
/// leader(i) is the strictly-higher point of maximal similarity to i
/// (similarity ties by ascending id), or kNoPoint if no such point exists.
struct LeaderInfo {
  std::vector<PointId> leader;      // kNoPoint when absent
  std::vector<double> leader_sim;   // A(i, leader(i)); 0 when absent
  std::vector<std::int32_t> rank;   // 1-based position of the leader in the
                                    // descending-similarity adjacency list;
                                    // 0 when absent
};
LeaderInfo compute_leaders(const SimilarityGraph& sim,
                           const DensityVector& rho);

/// Density-ascending dependency forest: at most one out-edge per point,
/// weighted by exp(-(rank/max_rank)^2).
struct DependencyForest {
  std::size_t n = 0;
  std::vector<PointId> leader;     // kNoPoint for roots
  std::vector<std::int32_t> rank;  // 0 for roots
  std::vector<double> weight;      // 0 for roots, otherwise in (0, 1)
  std::int32_t max_rank = 1;
};

DependencyForest build_forest(const SimilarityGraph& sim,
                              const DensityVector& rho);

}  // namespace tango
