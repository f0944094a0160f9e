#include "tango/pipeline.hpp"

#include <chrono>
#include <utility>

#include "tango/pathsim.hpp"
#include "tango/typicality.hpp"

namespace tango {
namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& stages) : stages_(stages) {}

  template <typename Fn>
  auto run(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      stages_.push_back({name, elapsed(start)});
    } else {
      auto result = fn();
      stages_.push_back({name, elapsed(start)});
      return result;
    }
  }

  static double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }

 private:
  std::vector<StageTiming>& stages_;
};

double stage_seconds(const std::vector<StageTiming>& stages,
                     const std::string& name) {
  for (const auto& s : stages) {
    if (s.name == name) return s.seconds;
  }
  return 0.0;
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "tango") return Algorithm::kTango;
  if (name == "quickshift") return Algorithm::kQuickShift;
  if (name == "dpc") return Algorithm::kDpc;
  throw ConfigError("unknown algorithm '" + name +
                    "' (expected tango, quickshift or dpc)");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kTango: return "tango";
    case Algorithm::kQuickShift: return "quickshift";
    case Algorithm::kDpc: return "dpc";
  }
  return "?";
}

PipelineResult run_pipeline(const DataMatrix& data,
                            const PipelineConfig& config) {
  if (config.k < 1) throw ConfigError("k must be >= 1");
  if (config.clusters < 1) throw ConfigError("clusters must be >= 1");

  PipelineResult result;
  result.n = data.rows;
  StageClock clock(result.stages);
  const auto t0 = std::chrono::steady_clock::now();

  DataMatrix working;
  if (config.normalize) {
    working = clock.run("normalize", [&] { return normalize_minmax(data); });
  } else {
    require_finite(data);
    working = data;
  }

  KnnGraph knn = clock.run("knn", [&] {
    return build_knn(working, config.k, config.workers);
  });
  SimilarityGraph sim = clock.run("similarity", [&] {
    return snn_similarity(knn, config.workers);
  });
  DensityVector rho =
      clock.run("density", [&] { return density(sim, config.k); });

  if (config.algorithm == Algorithm::kTango) {
    DependencyForest forest =
        clock.run("forest", [&] { return build_forest(sim, rho); });
    TypicalityVector typ = clock.run("typicality", [&] {
      return solve_typicality(forest, rho);
    });
    SubClustering sub =
        clock.run("modes", [&] { return find_modes(forest, typ); });
    std::vector<CrossEdge> edges = clock.run("cross_edges", [&] {
      return cross_edges(sim, rho, sub);
    });
    PBSimMatrix pb =
        clock.run("pbsim", [&] { return pbsim(edges, sub.modes); });
    std::vector<int> mode_labels = clock.run("spectral", [&] {
      return spectral_modes(pb, config.clusters, config.seed, config.spectral);
    });
    result.labels = clock.run("propagate", [&] {
      return propagate_labels(sub, mode_labels);
    });
    result.modes = sub.modes;
    if (config.keep_artifacts) {
      result.artifacts = PipelineArtifacts{
          std::move(knn), std::move(sim), std::move(rho), std::move(forest),
          std::move(typ), std::move(sub), std::move(pb)};
    }
  } else {
    BaselineResult baseline = clock.run(algorithm_name(config.algorithm), [&] {
      return config.algorithm == Algorithm::kQuickShift
                 ? quick_shift(sim, rho, config.tau)
                 : dpc_break(sim, rho, config.tau, config.rho_threshold);
    });
    result.labels = std::move(baseline.labels);
    result.modes = std::move(baseline.modes);
    if (config.keep_artifacts) {
      result.artifacts = PipelineArtifacts{std::move(knn), std::move(sim),
                                           std::move(rho), {}, {}, {}, {}};
    }
  }

  result.total_seconds = StageClock::elapsed(t0);
  result.similarity_seconds = stage_seconds(result.stages, "knn") +
                              stage_seconds(result.stages, "similarity");
  result.remaining_seconds = 0.0;
  for (const auto& s : result.stages) result.remaining_seconds += s.seconds;
  result.remaining_seconds -= result.similarity_seconds;
  return result;
}

}  // namespace tango
