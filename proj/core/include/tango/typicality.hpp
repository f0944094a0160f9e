#pragma once

#include <cstdint>
#include <vector>

#include "tango/forest.hpp"

namespace tango {

/// Typicality of each point: the unique solution of T = B^T T + rho, where
/// B is the dependency matrix encoded by the forest.
using TypicalityVector = std::vector<double>;

/// Solves T = B^T T + rho in O(n): initialize T = rho, then walk points in
/// ascending (density, id) order and push each point's typicality to its
/// leader, scaled by the dependency weight. Throws InternalError if an edge
/// points against the density order (which would make the system cyclic).
TypicalityVector solve_typicality(const DependencyForest& forest,
                                  const DensityVector& rho);

/// Reference solver: materializes the dense system (I - B^T) T = rho and
/// solves it with a standard LU factorization. Intended for verification on
/// small instances; requires n <= 500.
TypicalityVector solve_typicality_oracle(const DependencyForest& forest,
                                         const DensityVector& rho);

/// Max-norm residual ||T - (B^T T + rho)||_inf; a solved vector satisfies
/// this to within 1e-9.
double typicality_residual(const DependencyForest& forest,
                           const DensityVector& rho,
                           const TypicalityVector& T);

/// Tree-like sub-clusters produced by typicality-aware dependency breaking.
struct SubClustering {
  std::vector<PointId> modes;          // ascending point ids
  std::vector<std::uint8_t> is_mode;   // 0/1 per point
  std::vector<PointId> assignment;     // point -> id of its mode
  std::size_t q = 0;                   // number of modes
};

/// A point becomes a mode when it has no leader or its typicality is >= its
/// leader's (the equality case breaks the edge). Every other point is
/// assigned to the mode reached by following unbroken leader edges.
SubClustering find_modes(const DependencyForest& forest,
                         const TypicalityVector& T);

}  // namespace tango
