#include "tango/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>

#include "rng.hpp"

namespace tango {
namespace {

struct KMeansRun {
  std::vector<int> labels;
  double inertia = std::numeric_limits<double>::infinity();
};

KMeansRun kmeans_once(const Eigen::MatrixXd& X, int k, detail::Rng rng,
                      int max_iters, double tol) {
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd centers(k, X.cols());
  std::vector<double> dist2(n);

  // k-means++ seeding.
  centers.row(0) = X.row(static_cast<Eigen::Index>(rng.uniform_index(n)));
  for (Eigen::Index i = 0; i < n; ++i) {
    dist2[i] = (X.row(i) - centers.row(0)).squaredNorm();
  }
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) total += dist2[i];
    Eigen::Index pick = 0;
    if (total > 0.0) {
      const double r = rng.uniform01() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    } else {
      // All remaining points coincide with chosen centers; take the lowest
      // index so the run stays deterministic.
      pick = static_cast<Eigen::Index>(c % n);
    }
    centers.row(c) = X.row(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      dist2[i] = std::min(dist2[i], (X.row(i) - centers.row(c)).squaredNorm());
    }
  }

  KMeansRun run;
  run.labels.assign(n, 0);
  double prev_inertia = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < max_iters; ++iter) {
    // Assignment; ties go to the lowest center index.
    double inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (X.row(i) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (X.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      run.labels[i] = best;
      dist2[i] = best_d;
      inertia += best_d;
    }

    // Re-seed empty clusters with the farthest point.
    std::vector<Eigen::Index> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) ++counts[run.labels[i]];
    for (int c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      Eigen::Index far = 0;
      double far_d = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (counts[run.labels[i]] > 1 && dist2[i] > far_d) {
          far_d = dist2[i];
          far = i;
        }
      }
      --counts[run.labels[far]];
      run.labels[far] = c;
      counts[c] = 1;
      dist2[far] = 0.0;
    }

    // Update step.
    centers.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
      centers.row(run.labels[i]) += X.row(i);
    }
    for (int c = 0; c < k; ++c) {
      centers.row(c) /= static_cast<double>(counts[c]);
    }

    run.inertia = inertia;
    if (prev_inertia - inertia <= tol * std::max(inertia, 1e-300)) break;
    prev_inertia = inertia;
  }
  return run;
}

std::vector<int> kmeans(const Eigen::MatrixXd& X, int k, std::uint64_t seed,
                        const SpectralConfig& config) {
  KMeansRun best;
  for (int r = 0; r < config.kmeans_restarts; ++r) {
    KMeansRun run = kmeans_once(X, k, detail::Rng(detail::mix_seed(seed, r)),
                                config.kmeans_max_iters, config.kmeans_tol);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  return best.labels;
}

}  // namespace

std::vector<int> spectral_modes(const PBSimMatrix& pb, int clusters,
                                std::uint64_t seed,
                                const SpectralConfig& config,
                                SpectralDiagnostics* diag) {
  const std::size_t q = pb.q;
  if (clusters < 1) throw ConfigError("spectral_modes: clusters must be >= 1");
  if (static_cast<std::size_t>(clusters) > q) {
    throw InsufficientModesError(
        "spectral_modes: requested " + std::to_string(clusters) +
        " clusters but only " + std::to_string(q) +
        " modes exist; a larger neighborhood size k usually yields more "
        "modes");
  }
  if (static_cast<std::size_t>(clusters) == q) {
    std::vector<int> labels(q);
    for (std::size_t t = 0; t < q; ++t) labels[t] = static_cast<int>(t);
    return labels;
  }

  std::vector<double> degree(q, 0.0);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) degree[a] += pb.at(a, b);
  }
  std::vector<std::size_t> singles, rest;
  for (std::size_t a = 0; a < q; ++a) {
    (degree[a] == 0.0 ? singles : rest).push_back(a);
  }
  const std::size_t z = singles.size();
  if (z > static_cast<std::size_t>(clusters)) {
    throw InsufficientModesError(
        "spectral_modes: " + std::to_string(z) +
        " isolated modes exceed the requested " + std::to_string(clusters) +
        " clusters");
  }
  const std::size_t rem = rest.size();
  const int crem = clusters - static_cast<int>(z);
  if (rem > 0 && crem == 0) {
    throw InsufficientModesError(
        "spectral_modes: isolated modes consume every cluster slot but " +
        std::to_string(rem) + " connected modes remain");
  }

  std::vector<int> labels(q, -1);
  for (std::size_t t = 0; t < z; ++t) labels[singles[t]] = static_cast<int>(t);
  if (rem == 0) return labels;

  // Symmetric normalized Laplacian on the connected remainder.
  Eigen::MatrixXd W(rem, rem);
  for (std::size_t a = 0; a < rem; ++a) {
    for (std::size_t b = 0; b < rem; ++b) {
      W(a, b) = pb.at(rest[a], rest[b]);
    }
  }
  Eigen::VectorXd inv_sqrt_deg(rem);
  for (std::size_t a = 0; a < rem; ++a) {
    inv_sqrt_deg[a] = 1.0 / std::sqrt(W.row(a).sum());
  }
  const Eigen::MatrixXd normalized =
      inv_sqrt_deg.asDiagonal() * W * inv_sqrt_deg.asDiagonal();
  const Eigen::MatrixXd L =
      Eigen::MatrixXd::Identity(rem, rem) - normalized;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(L);
  if (eig.info() != Eigen::Success) {
    throw InternalError("spectral_modes: eigendecomposition failed");
  }
  Eigen::MatrixXd embedding = eig.eigenvectors().leftCols(crem);
  std::vector<double> row_norms(rem);
  for (std::size_t a = 0; a < rem; ++a) {
    const double norm = embedding.row(a).norm();
    row_norms[a] = norm;
    if (norm > 0.0) embedding.row(a) /= norm;
  }
  if (diag != nullptr) {
    diag->eigenvalues.assign(eig.eigenvalues().data(),
                             eig.eigenvalues().data() + rem);
    diag->embedding_row_norms.resize(rem);
    for (std::size_t a = 0; a < rem; ++a) {
      diag->embedding_row_norms[a] =
          row_norms[a] > 0.0 ? embedding.row(a).norm() : 0.0;
    }
  }

  const std::vector<int> group = kmeans(embedding, crem, seed, config);

  // Compact k-means group numbers into [z, clusters) by first occurrence so
  // the final labeling is independent of k-means internals.
  std::vector<int> remap(crem, -1);
  int next = static_cast<int>(z);
  for (std::size_t a = 0; a < rem; ++a) {
    if (remap[group[a]] == -1) remap[group[a]] = next++;
    labels[rest[a]] = remap[group[a]];
  }
  return labels;
}

ClusterLabels propagate_labels(const SubClustering& sc,
                               const std::vector<int>& mode_labels) {
  if (mode_labels.size() != sc.q) {
    throw ConfigError("propagate_labels: one label per mode required");
  }
  ClusterLabels out;
  out.labels.resize(sc.assignment.size());
  int c = 0;
  for (int l : mode_labels) c = std::max(c, l + 1);
  out.c = c;
  for (std::size_t i = 0; i < sc.assignment.size(); ++i) {
    const auto it = std::lower_bound(sc.modes.begin(), sc.modes.end(),
                                     sc.assignment[i]);
    out.labels[i] = mode_labels[static_cast<std::size_t>(
        std::distance(sc.modes.begin(), it))];
  }
  return out;
}

}  // namespace tango
