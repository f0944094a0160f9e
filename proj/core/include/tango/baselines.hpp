#pragma once

#include <vector>

#include "tango/forest.hpp"
#include "tango/spectral.hpp"

namespace tango {

struct BaselineResult {
  std::vector<PointId> modes;  // ascending point ids
  ClusterLabels labels;        // one cluster per mode, labeled by ascending
                               // mode id
};

/// Quick Shift over the similarity graph: every point links to its
/// most-similar strictly-higher-density neighbor; the link is broken (and
/// the point becomes a mode) when that similarity falls below tau or no
/// such neighbor exists.
BaselineResult quick_shift(const SimilarityGraph& sim,
                           const DensityVector& rho, double tau);

/// Density-peaks break rule: identical dependency graph, but a link is
/// broken only when the similarity falls below tau AND the point's density
/// exceeds rho_threshold.
BaselineResult dpc_break(const SimilarityGraph& sim, const DensityVector& rho,
                         double tau, double rho_threshold);

}  // namespace tango
