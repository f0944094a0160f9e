#include "tango/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tango {

std::vector<PointId> density_ascending_order(const DensityVector& rho) {
  std::vector<PointId> order(rho.size());
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return density_order_less(rho, a, b);
  });
  return order;
}

LeaderInfo compute_leaders(const SimilarityGraph& sim,
                           const DensityVector& rho) {
  const std::size_t n = sim.n;
  LeaderInfo info;
  info.leader.assign(n, kNoPoint);
  info.leader_sim.assign(n, 0.0);
  info.rank.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ids = sim.neighbors_of(i);
    const auto vals = sim.values_of(i);
    // The adjacency list is sorted by (similarity desc, id asc), so the
    // first strictly-higher neighbor is the argmax with the id tie-break.
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (density_order_less(rho, static_cast<PointId>(i), ids[t])) {
        info.leader[i] = ids[t];
        info.leader_sim[i] = vals[t];
        info.rank[i] = static_cast<std::int32_t>(t + 1);
        break;
      }
    }
  }
  return info;
}

DependencyForest build_forest(const SimilarityGraph& sim,
                              const DensityVector& rho) {
  const LeaderInfo info = compute_leaders(sim, rho);
  DependencyForest forest;
  forest.n = sim.n;
  forest.leader = info.leader;
  forest.rank = info.rank;
  forest.max_rank = 1;
  for (std::int32_t r : forest.rank) {
    forest.max_rank = std::max(forest.max_rank, r);
  }
  forest.weight.assign(sim.n, 0.0);
  const double inv_max = 1.0 / static_cast<double>(forest.max_rank);
  for (std::size_t i = 0; i < sim.n; ++i) {
    if (forest.leader[i] != kNoPoint) {
      const double x = static_cast<double>(forest.rank[i]) * inv_max;
      forest.weight[i] = std::exp(-x * x);
    }
  }
  return forest;
}

}  // namespace tango
