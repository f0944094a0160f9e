#include "tango/pathsim.hpp"

#include <algorithm>
#include <unordered_map>

namespace tango {

std::vector<CrossEdge> cross_edges(const SimilarityGraph& sim,
                                   const DensityVector& rho,
                                   const SubClustering& sc) {
  std::vector<CrossEdge> edges;
  for (std::size_t i = 0; i < sim.n; ++i) {
    const auto ids = sim.neighbors_of(i);
    const auto vals = sim.values_of(i);
    for (std::size_t t = 0; t < ids.size(); ++t) {
      const PointId j = ids[t];
      if (j <= static_cast<PointId>(i)) continue;  // one edge per pair
      const PointId mi = sc.assignment[i];
      const PointId mj = sc.assignment[j];
      if (mi == mj) continue;
      edges.push_back({vals[t] * rho[i] * rho[j], static_cast<PointId>(i), j,
                       mi, mj});
    }
  }
  return edges;
}

namespace {

/// Union-find over mode indices that keeps explicit member lists so a merge
/// can enumerate all newly connected pairs.
class MergingForest {
 public:
  explicit MergingForest(std::size_t q) : parent_(q), members_(q) {
    for (std::size_t i = 0; i < q; ++i) {
      parent_[i] = static_cast<std::int32_t>(i);
      members_[i] = {static_cast<std::int32_t>(i)};
    }
  }

  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Merges the components of a and b; returns nullptr if already joined,
  /// otherwise the (smaller, larger) member lists valid until the next call.
  std::pair<const std::vector<std::int32_t>*, const std::vector<std::int32_t>*>
  merge(std::int32_t a, std::int32_t b) {
    std::int32_t ra = find(a);
    std::int32_t rb = find(b);
    if (ra == rb) return {nullptr, nullptr};
    if (members_[ra].size() > members_[rb].size()) std::swap(ra, rb);
    merged_small_ = std::move(members_[ra]);
    parent_[ra] = rb;
    auto& big = members_[rb];
    big.insert(big.end(), merged_small_.begin(), merged_small_.end());
    return {&merged_small_, &big};
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::vector<std::int32_t>> members_;
  std::vector<std::int32_t> merged_small_;
};

}  // namespace

PBSimMatrix pbsim(const std::vector<CrossEdge>& edges,
                  const std::vector<PointId>& modes) {
  PBSimMatrix m;
  m.modes = modes;
  std::sort(m.modes.begin(), m.modes.end());
  m.q = m.modes.size();
  m.values.assign(m.q * m.q, 0.0);

  std::unordered_map<PointId, std::int32_t> index;
  index.reserve(m.q);
  for (std::size_t t = 0; t < m.q; ++t) index[m.modes[t]] = static_cast<std::int32_t>(t);

  std::vector<CrossEdge> order(edges);
  std::sort(order.begin(), order.end(), [](const CrossEdge& a, const CrossEdge& b) {
    if (a.c != b.c) return a.c > b.c;
    if (a.point_i != b.point_i) return a.point_i < b.point_i;
    return a.point_j < b.point_j;
  });

  MergingForest uf(m.q);
  for (const CrossEdge& e : order) {
    const auto ia = index.find(e.mode_i);
    const auto ib = index.find(e.mode_j);
    if (ia == index.end() || ib == index.end()) {
      throw ConfigError("pbsim: edge references a mode not in the mode set");
    }
    auto [small, big] = uf.merge(ia->second, ib->second);
    if (small == nullptr) continue;
    // Every pair across the two former components is first connected by
    // this edge, so its bottleneck connectivity is e.c.
    const std::size_t old_big = big->size() - small->size();
    for (std::int32_t x : *small) {
      for (std::size_t t = 0; t < old_big; ++t) {
        const std::int32_t y = (*big)[t];
        m.at(x, y) = e.c;
        m.at(y, x) = e.c;
      }
    }
  }
  return m;
}

}  // namespace tango
