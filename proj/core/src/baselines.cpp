#include "tango/baselines.hpp"

#include <algorithm>

namespace tango {
namespace {

BaselineResult run_break_rule(const SimilarityGraph& sim,
                              const DensityVector& rho, double tau,
                              bool require_density, double rho_threshold) {
  const std::size_t n = sim.n;
  const LeaderInfo info = compute_leaders(sim, rho);

  std::vector<PointId> parent(n, kNoPoint);
  BaselineResult out;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_mode;
    if (info.leader[i] == kNoPoint) {
      is_mode = true;
    } else {
      const bool below_tau = info.leader_sim[i] < tau;
      is_mode = require_density ? (below_tau && rho[i] > rho_threshold)
                                : below_tau;
    }
    if (is_mode) {
      out.modes.push_back(static_cast<PointId>(i));
    } else {
      parent[i] = info.leader[i];
    }
  }

  // Root-following with memoization, labels keyed by ascending mode id.
  std::vector<int> mode_index(n, -1);
  for (std::size_t t = 0; t < out.modes.size(); ++t) {
    mode_index[out.modes[t]] = static_cast<int>(t);
  }
  out.labels.c = static_cast<int>(out.modes.size());
  out.labels.labels.assign(n, -1);
  std::vector<PointId> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (out.labels.labels[start] != -1) continue;
    path.clear();
    PointId cur = static_cast<PointId>(start);
    while (mode_index[cur] == -1 && out.labels.labels[cur] == -1) {
      path.push_back(cur);
      cur = parent[cur];
    }
    const int label =
        mode_index[cur] != -1 ? mode_index[cur] : out.labels.labels[cur];
    if (mode_index[cur] != -1) out.labels.labels[cur] = label;
    for (PointId p : path) out.labels.labels[p] = label;
  }
  return out;
}

}  // namespace

BaselineResult quick_shift(const SimilarityGraph& sim,
                           const DensityVector& rho, double tau) {
  return run_break_rule(sim, rho, tau, false, 0.0);
}

BaselineResult dpc_break(const SimilarityGraph& sim, const DensityVector& rho,
                         double tau, double rho_threshold) {
  return run_break_rule(sim, rho, tau, true, rho_threshold);
}

}  // namespace tango
