#pragma once

#include <cstddef>
#include <vector>

#include "tango/similarity.hpp"
#include "tango/typicality.hpp"

namespace tango {

/// A similarity-graph edge whose endpoints lie in different sub-clusters,
/// weighted by connectivity c = A(i,j) * rho(i) * rho(j).
struct CrossEdge {
  double c = 0.0;
  PointId point_i = kNoPoint;
  PointId point_j = kNoPoint;
  PointId mode_i = kNoPoint;
  PointId mode_j = kNoPoint;
};

/// One edge per unordered sparse similarity pair with endpoints in distinct
/// sub-clusters. Same-sub-cluster pairs are excluded by membership, never
/// by comparing the weight against 1.
std::vector<CrossEdge> cross_edges(const SimilarityGraph& sim,
                                   const DensityVector& rho,
                                   const SubClustering& sc);

/// Dense symmetric path-based similarity among modes. The diagonal is kept
/// at zero; consumers treat self-similarity as maximal.
struct PBSimMatrix {
  std::vector<PointId> modes;  // ascending mode ids; row/col order
  std::size_t q = 0;
  std::vector<double> values;  // q*q

  double at(std::size_t a, std::size_t b) const { return values[a * q + b]; }
  double& at(std::size_t a, std::size_t b) { return values[a * q + b]; }
};

/// Maximum over connecting paths of the minimum edge connectivity, computed
/// by adding edges in descending weight order and recording the joining
/// weight for every mode pair merged across the two components. Pairs in
/// different components of the cross-edge graph stay at 0. Deterministic:
/// sorting breaks ties by endpoint ids, and permuting the input changes
/// nothing.
PBSimMatrix pbsim(const std::vector<CrossEdge>& edges,
                  const std::vector<PointId>& modes);

}  // namespace tango
