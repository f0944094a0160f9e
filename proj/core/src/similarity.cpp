#include "tango/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace tango {
namespace {

// Neighbor lists of one point re-sorted by id, for linear-time
// intersection.
struct IdSortedLists {
  std::vector<PointId> ids;    // n*k
  std::vector<double> dists;   // n*k, aligned with ids
};

IdSortedLists sort_by_id(const KnnGraph& knn, int workers) {
  const std::size_t n = knn.n;
  const std::size_t k = static_cast<std::size_t>(knn.k);
  IdSortedLists out;
  out.ids.resize(n * k);
  out.dists.resize(n * k);
  detail::parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = begin; i < end; ++i) {
      const auto ids = knn.neighbors_of(i);
      const auto ds = knn.distances_of(i);
      for (std::size_t t = 0; t < k; ++t) perm[t] = t;
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return ids[a] < ids[b];
      });
      for (std::size_t t = 0; t < k; ++t) {
        out.ids[i * k + t] = ids[perm[t]];
        out.dists[i * k + t] = ds[perm[t]];
      }
    }
  });
  return out;
}

}  // namespace

SimilarityGraph snn_similarity(const KnnGraph& knn, int workers) {
  if (knn.d_max <= 0.0) {
    throw DataError(
        "snn_similarity: d_max is zero; every k-neighborhood is a single "
        "repeated point, so similarities are undefined");
  }
  const std::size_t n = knn.n;
  const std::size_t k = static_cast<std::size_t>(knn.k);
  const double inv_scale = 1.0 / (2.0 * knn.d_max);

  // Reverse lists: which points have i among their k neighbors.
  std::vector<std::size_t> rev_count(n + 1, 0);
  for (PointId j : knn.neighbors) ++rev_count[static_cast<std::size_t>(j) + 1];
  for (std::size_t i = 0; i < n; ++i) rev_count[i + 1] += rev_count[i];
  std::vector<PointId> rev(knn.neighbors.size());
  {
    std::vector<std::size_t> cursor(rev_count.begin(), rev_count.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (PointId j : knn.neighbors_of(i)) {
        rev[cursor[j]++] = static_cast<PointId>(i);
      }
    }
  }

  const IdSortedLists lists = sort_by_id(knn, workers);

  // Each unordered pair is owned by its smaller endpoint; per-owner output
  // slots make the parallel phase write-disjoint and deterministic.
  struct Entry {
    PointId j;
    double a;
  };
  std::vector<std::vector<Entry>> owned(n);

  detail::parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<PointId> cand;
    for (std::size_t i = begin; i < end; ++i) {
      cand.clear();
      for (PointId j : knn.neighbors_of(i)) {
        if (j > static_cast<PointId>(i)) cand.push_back(j);
      }
      for (std::size_t t = rev_count[i]; t < rev_count[i + 1]; ++t) {
        if (rev[t] > static_cast<PointId>(i)) cand.push_back(rev[t]);
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

      const PointId* ids_i = lists.ids.data() + i * k;
      const double* ds_i = lists.dists.data() + i * k;
      for (PointId j : cand) {
        const PointId* ids_j = lists.ids.data() + static_cast<std::size_t>(j) * k;
        const double* ds_j = lists.dists.data() + static_cast<std::size_t>(j) * k;
        double a = 0.0;
        std::size_t ti = 0, tj = 0;
        while (ti < k && tj < k) {
          if (ids_i[ti] < ids_j[tj]) {
            ++ti;
          } else if (ids_i[ti] > ids_j[tj]) {
            ++tj;
          } else {
            const double arg = (ds_i[ti] + ds_j[tj]) * inv_scale;
            a += std::exp(-arg * arg);
            ++ti;
            ++tj;
          }
        }
        if (a > 0.0) owned[i].push_back({j, a});
      }
    }
  });

  SimilarityGraph g;
  g.n = n;
  g.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : owned[i]) {
      ++g.offsets[i + 1];
      ++g.offsets[static_cast<std::size_t>(e.j) + 1];
    }
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.adj.resize(g.offsets[n]);
  g.value.resize(g.offsets[n]);
  {
    std::vector<std::size_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : owned[i]) {
        g.adj[cursor[i]] = e.j;
        g.value[cursor[i]++] = e.a;
        const std::size_t j = static_cast<std::size_t>(e.j);
        g.adj[cursor[j]] = static_cast<PointId>(i);
        g.value[cursor[j]++] = e.a;
      }
    }
  }

  // Adjacency order (descending similarity, ascending id) feeds density,
  // leader selection and rank directly.
  detail::parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> perm;
    std::vector<PointId> tmp_id;
    std::vector<double> tmp_v;
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t deg = g.degree(i);
      perm.resize(deg);
      for (std::size_t t = 0; t < deg; ++t) perm[t] = g.offsets[i] + t;
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (g.value[a] != g.value[b]) return g.value[a] > g.value[b];
        return g.adj[a] < g.adj[b];
      });
      tmp_id.resize(deg);
      tmp_v.resize(deg);
      for (std::size_t t = 0; t < deg; ++t) {
        tmp_id[t] = g.adj[perm[t]];
        tmp_v[t] = g.value[perm[t]];
      }
      std::copy(tmp_id.begin(), tmp_id.end(), g.adj.begin() + g.offsets[i]);
      std::copy(tmp_v.begin(), tmp_v.end(), g.value.begin() + g.offsets[i]);
    }
  });

  return g;
}

DensityVector density(const SimilarityGraph& sim, int k) {
  if (k < 1) throw ConfigError("density: k must be positive");
  const std::size_t n = sim.n;
  DensityVector rho(n, 0.0);
  double max_raw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto vals = sim.values_of(i);
    const std::size_t take = std::min<std::size_t>(vals.size(), k);
    double raw = 0.0;
    for (std::size_t t = 0; t < take; ++t) raw += vals[t];
    rho[i] = raw;
    max_raw = std::max(max_raw, raw);
  }
  if (max_raw > 0.0) {
    for (double& r : rho) r /= max_raw;
  }
  return rho;
}

}  // namespace tango
