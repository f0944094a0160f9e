#include "tango/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>
#include <vector>

#include "tango/common.hpp"

namespace tango {
namespace {

struct Contingency {
  std::size_t n = 0;
  std::size_t r = 0, s = 0;                  // distinct pred / truth labels
  std::vector<std::int64_t> row_sum, col_sum;
  // Nonzero cells only; (row, col) -> count.
  std::unordered_map<std::uint64_t, std::int64_t> cells;

  std::int64_t at(std::size_t i, std::size_t j) const {
    const auto it = cells.find(static_cast<std::uint64_t>(i) << 32 | j);
    return it == cells.end() ? 0 : it->second;
  }
};

std::vector<int> compact(std::span<const int> labels, std::size_t& count) {
  std::unordered_map<int, int> ids;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [it, inserted] =
        ids.try_emplace(labels[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  count = ids.size();
  return out;
}

Contingency contingency(std::span<const int> pred,
                        std::span<const int> truth) {
  if (pred.size() != truth.size()) {
    throw ConfigError("metrics: label vectors have different lengths");
  }
  if (pred.size() < 2) {
    throw ConfigError("metrics: need at least two points");
  }
  Contingency t;
  t.n = pred.size();
  const std::vector<int> p = compact(pred, t.r);
  const std::vector<int> q = compact(truth, t.s);
  t.row_sum.assign(t.r, 0);
  t.col_sum.assign(t.s, 0);
  for (std::size_t i = 0; i < t.n; ++i) {
    ++t.row_sum[p[i]];
    ++t.col_sum[q[i]];
    ++t.cells[static_cast<std::uint64_t>(p[i]) << 32 |
              static_cast<std::uint32_t>(q[i])];
  }
  return t;
}

inline double comb2(double x) { return x * (x - 1.0) / 2.0; }

/// Max-weight assignment of rows to columns (rows <= cols), returning the
/// total matched weight. Standard Hungarian algorithm with potentials.
std::int64_t assignment_max(const Contingency& t, bool transpose) {
  const std::size_t rows = transpose ? t.s : t.r;
  const std::size_t cols = transpose ? t.r : t.s;
  auto cost = [&](std::size_t i, std::size_t j) -> double {
    return -static_cast<double>(transpose ? t.at(j, i) : t.at(i, j));
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0);
  std::vector<std::size_t> match(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(cols + 1, inf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::int64_t total = 0;
  for (std::size_t j = 1; j <= cols; ++j) {
    if (match[j] != 0) {
      total += transpose ? t.at(j - 1, match[j] - 1)
                         : t.at(match[j] - 1, j - 1);
    }
  }
  return total;
}

}  // namespace

double ari(std::span<const int> pred, std::span<const int> truth) {
  const Contingency t = contingency(pred, truth);
  double sum_cells = 0.0;
  for (const auto& [key, count] : t.cells) {
    sum_cells += comb2(static_cast<double>(count));
  }
  double sum_rows = 0.0, sum_cols = 0.0;
  for (std::int64_t a : t.row_sum) sum_rows += comb2(static_cast<double>(a));
  for (std::int64_t b : t.col_sum) sum_cols += comb2(static_cast<double>(b));
  const double pairs = comb2(static_cast<double>(t.n));
  const double expected = sum_rows * sum_cols / pairs;
  const double max_index = 0.5 * (sum_rows + sum_cols) - expected;
  if (max_index == 0.0) {
    // Both partitions trivial in the same way; they are identical.
    return 1.0;
  }
  return (sum_cells - expected) / max_index;
}

double nmi(std::span<const int> pred, std::span<const int> truth) {
  const Contingency t = contingency(pred, truth);
  const double n = static_cast<double>(t.n);
  auto entropy = [n](const std::vector<std::int64_t>& marginal) {
    double h = 0.0;
    for (std::int64_t m : marginal) {
      if (m > 0) {
        const double p = static_cast<double>(m) / n;
        h -= p * std::log(p);
      }
    }
    return h;
  };
  const double hu = entropy(t.row_sum);
  const double hv = entropy(t.col_sum);
  if (hu == 0.0 && hv == 0.0) {
    // Single cluster vs single cluster: identical partitions.
    return 1.0;
  }
  double mi = 0.0;
  for (const auto& [key, count] : t.cells) {
    const std::size_t i = key >> 32;
    const std::size_t j = key & 0xffffffffu;
    const double pij = static_cast<double>(count) / n;
    const double pi = static_cast<double>(t.row_sum[i]) / n;
    const double qj = static_cast<double>(t.col_sum[j]) / n;
    mi += pij * std::log(pij / (pi * qj));
  }
  const double value = mi / (0.5 * (hu + hv));
  return std::clamp(value, 0.0, 1.0);
}

double acc(std::span<const int> pred, std::span<const int> truth) {
  const Contingency t = contingency(pred, truth);
  // Run the assignment with the smaller side as rows; the matching (and
  // hence the score) is the same either way.
  const std::int64_t matched = assignment_max(t, t.s < t.r);
  return static_cast<double>(matched) / static_cast<double>(t.n);
}

MetricsReport evaluate(std::span<const int> pred, std::span<const int> truth) {
  const Contingency t = contingency(pred, truth);
  MetricsReport report;
  report.n = t.n;
  report.clusters_pred = static_cast<int>(t.r);
  report.clusters_true = static_cast<int>(t.s);
  report.ari = ari(pred, truth);
  report.nmi = nmi(pred, truth);
  report.acc = acc(pred, truth);
  return report;
}

std::string to_json(const MetricsReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"ari\": %.17g, \"nmi\": %.17g, \"acc\": %.17g, "
                "\"n\": %zu, \"clusters_pred\": %d, \"clusters_true\": %d}",
                report.ari, report.nmi, report.acc, report.n,
                report.clusters_pred, report.clusters_true);
  return buf;
}

}  // namespace tango
