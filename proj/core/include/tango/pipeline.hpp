#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tango/baselines.hpp"
#include "tango/dataset.hpp"
#include "tango/knn.hpp"
#include "tango/spectral.hpp"

namespace tango {

enum class Algorithm { kTango, kQuickShift, kDpc };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

struct PipelineConfig {
  Algorithm algorithm = Algorithm::kTango;
  int k = 10;
  int clusters = 2;          // ignored by the baselines
  std::uint64_t seed = 0;
  double tau = 0.0;          // baselines only
  double rho_threshold = 0.0;  // dpc only
  bool normalize = true;
  int workers = 0;           // 0 = hardware default
  bool keep_artifacts = false;
  SpectralConfig spectral;
};

/// Intermediate products, retained on request (debug dumps, tests).
struct PipelineArtifacts {
  KnnGraph knn;
  SimilarityGraph sim;
  DensityVector rho;
  DependencyForest forest;
  TypicalityVector typicality;
  SubClustering sub;
  PBSimMatrix pb;
};

struct StageTiming {
  std::string name;
  double seconds = 0.0;
};

struct PipelineResult {
  ClusterLabels labels;
  std::vector<PointId> modes;
  std::size_t n = 0;
  std::vector<StageTiming> stages;
  double total_seconds = 0.0;
  /// Wall time of the similarity-matrix stage (kNN + shared-neighbor
  /// kernel), reported separately from everything else.
  double similarity_seconds = 0.0;
  double remaining_seconds = 0.0;
  std::optional<PipelineArtifacts> artifacts;
};

/// Runs the configured algorithm end to end on a feature matrix.
PipelineResult run_pipeline(const DataMatrix& data,
                            const PipelineConfig& config);

}  // namespace tango
