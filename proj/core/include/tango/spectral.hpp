#pragma once

#include <cstdint>
#include <vector>

#include "tango/pathsim.hpp"

namespace tango {

struct SpectralConfig {
  int kmeans_restarts = 10;
  int kmeans_max_iters = 300;
  double kmeans_tol = 1e-6;  // relative inertia improvement
};

/// Optional introspection of the spectral step, filled when requested.
struct SpectralDiagnostics {
  std::vector<double> eigenvalues;  // of the normalized Laplacian, ascending
  std::vector<double> embedding_row_norms;  // after row normalization
};

/// Normalized-cut clustering of the mode graph. Zero-degree modes are split
/// off as forced singletons first (consuming label slots); the remainder is
/// embedded with the symmetric normalized Laplacian, row-normalized, and
/// grouped by seeded k-means++ keeping the lowest-inertia restart. Returns
/// one label in [0, clusters) per mode, in the order of pb.modes.
///
/// Throws InsufficientModesError when clusters > q or when the forced
/// singletons leave no room for the connected remainder.
std::vector<int> spectral_modes(const PBSimMatrix& pb, int clusters,
                                std::uint64_t seed,
                                const SpectralConfig& config = {},
                                SpectralDiagnostics* diag = nullptr);

/// Final per-point labels in [0, c).
struct ClusterLabels {
  std::vector<int> labels;
  int c = 0;
};

/// Copies each point's label from the mode of its sub-cluster.
/// mode_labels is indexed like pb.modes (ascending mode point ids).
ClusterLabels propagate_labels(const SubClustering& sc,
                               const std::vector<int>& mode_labels);

}  // namespace tango
