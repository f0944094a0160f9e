#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace tango {

/// Adjusted Rand Index in [-1, 1]; 1 iff the partitions agree up to
/// relabeling. Both degenerate identical-trivial cases return 1.
double ari(std::span<const int> pred, std::span<const int> truth);

/// Mutual information normalized by the arithmetic mean of the entropies,
/// in [0, 1]. The single-cluster-vs-single-cluster case returns 1 when the
/// partitions are identical, else 0.
double nmi(std::span<const int> pred, std::span<const int> truth);

/// Best agreement fraction over all injective mappings of predicted labels
/// onto true labels, solved by optimal assignment on the contingency table.
double acc(std::span<const int> pred, std::span<const int> truth);

struct MetricsReport {
  double ari = 0.0;
  double nmi = 0.0;
  double acc = 0.0;
  std::size_t n = 0;
  int clusters_pred = 0;
  int clusters_true = 0;
};

MetricsReport evaluate(std::span<const int> pred, std::span<const int> truth);

/// JSON object {ari, nmi, acc, n, clusters_pred, clusters_true}.
std::string to_json(const MetricsReport& report);

}  // namespace tango
