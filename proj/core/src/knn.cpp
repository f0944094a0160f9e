#include "tango/knn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "parallel.hpp"

namespace tango {
namespace {

struct Candidate {
  double d2;
  PointId id;
};

// Lexicographic (distance, id); defines both the output order and the
// deterministic tie-break.
inline bool closer(const Candidate& a, const Candidate& b) {
  return a.d2 < b.d2 || (a.d2 == b.d2 && a.id < b.id);
}

inline double squared_distance(const double* a, const double* b,
                               std::size_t d) {
  double s = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const double diff = a[c] - b[c];
    s += diff * diff;
  }
  return s;
}

/// Fixed-capacity set of the k best candidates; top of the heap is the
/// current worst.
class KBest {
 public:
  explicit KBest(int k) : k_(static_cast<std::size_t>(k)) { heap_.reserve(k_); }

  bool full() const { return heap_.size() == k_; }
  double worst_d2() const { return heap_.front().d2; }

  void offer(Candidate c) {
    if (heap_.size() < k_) {
      heap_.push_back(c);
      std::push_heap(heap_.begin(), heap_.end(), closer);
    } else if (closer(c, heap_.front())) {
      std::pop_heap(heap_.begin(), heap_.end(), closer);
      heap_.back() = c;
      std::push_heap(heap_.begin(), heap_.end(), closer);
    }
  }

  /// Extracts candidates sorted by ascending (distance, id).
  std::vector<Candidate> sorted() {
    std::sort_heap(heap_.begin(), heap_.end(), closer);
    return std::move(heap_);
  }

 private:
  std::size_t k_;
  std::vector<Candidate> heap_;
};

class KdTree {
 public:
  KdTree(const DataMatrix& data, int leaf_size)
      : data_(data), leaf_size_(leaf_size), order_(data.rows) {
    std::iota(order_.begin(), order_.end(), PointId{0});
    nodes_.reserve(2 * data.rows / leaf_size + 2);
    root_ = build(0, data.rows);
  }

  void query(PointId self, KBest& best) const {
    search(root_, data_.row(self), self, best);
  }

 private:
  struct Node {
    int split_dim = -1;  // -1 marks a leaf
    double split_val = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::size_t begin = 0, end = 0;  // leaf payload range in order_
  };

  std::int32_t build(std::size_t begin, std::size_t end) {
    Node node;
    if (end - begin <= static_cast<std::size_t>(leaf_size_)) {
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
    // Split along the dimension with the widest extent.
    int dim = 0;
    double best_extent = -1.0;
    for (std::size_t c = 0; c < data_.cols; ++c) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t i = begin; i < end; ++i) {
        const double v = data_(order_[i], c);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi - lo > best_extent) {
        best_extent = hi - lo;
        dim = static_cast<int>(c);
      }
    }
    if (best_extent <= 0.0) {
      // All points in this range coincide; keep them in one leaf.
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end, [&](PointId a, PointId b) {
                       return data_(a, dim) < data_(b, dim);
                     });
    node.split_dim = dim;
    node.split_val = data_(order_[mid], dim);
    nodes_.push_back(node);
    const std::int32_t idx = static_cast<std::int32_t>(nodes_.size() - 1);
    const std::int32_t left = build(begin, mid);
    const std::int32_t right = build(mid, end);
    nodes_[idx].left = left;
    nodes_[idx].right = right;
    return idx;
  }

  void search(std::int32_t node_idx, const double* q, PointId self,
              KBest& best) const {
    const Node& node = nodes_[node_idx];
    if (node.split_dim < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const PointId p = order_[i];
        if (p == self) continue;
        best.offer({squared_distance(q, data_.row(p), data_.cols), p});
      }
      return;
    }
    const double diff = q[node.split_dim] - node.split_val;
    const std::int32_t near = diff < 0.0 ? node.left : node.right;
    const std::int32_t far = diff < 0.0 ? node.right : node.left;
    search(near, q, self, best);
    // Points at exactly the bounding distance can still win a tie on id, so
    // the far side is pruned only on a strictly larger plane distance.
    if (!best.full() || diff * diff <= best.worst_d2()) {
      search(far, q, self, best);
    }
  }

  const DataMatrix& data_;
  int leaf_size_;
  std::vector<PointId> order_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

void brute_force_row(const DataMatrix& data, PointId self, KBest& best) {
  const double* q = data.row(self);
  const PointId n = static_cast<PointId>(data.rows);
  for (PointId j = 0; j < n; ++j) {
    if (j == self) continue;
    best.offer({squared_distance(q, data.row(j), data.cols), j});
  }
}

}  // namespace

KnnGraph build_knn(const DataMatrix& data, int k, int workers) {
  if (data.empty() || data.cols == 0) {
    throw DataError("build_knn: empty input");
  }
  require_finite(data);
  const std::size_t n = data.rows;
  if (k < 1 || static_cast<std::size_t>(k) >= n) {
    throw ConfigError("build_knn: k must satisfy 1 <= k <= n-1, got k=" +
                      std::to_string(k) + " with n=" + std::to_string(n));
  }

  KnnGraph g;
  g.k = k;
  g.n = n;
  g.neighbors.resize(n * static_cast<std::size_t>(k));
  g.distances.resize(n * static_cast<std::size_t>(k));

  // A spatial index pays off for large low-dimensional inputs; either path
  // returns the same exact, id-tie-broken result.
  const bool use_tree = data.cols <= 12 && n >= 2048;
  std::optional<KdTree> tree;
  if (use_tree) tree.emplace(data, 16);

  detail::parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      KBest best(k);
      if (tree) {
        tree->query(static_cast<PointId>(i), best);
      } else {
        brute_force_row(data, static_cast<PointId>(i), best);
      }
      const auto sorted = best.sorted();
      for (int j = 0; j < k; ++j) {
        g.neighbors[i * k + j] = sorted[j].id;
        g.distances[i * k + j] = std::sqrt(sorted[j].d2);
      }
    }
  });

  double d_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d_max = std::max(d_max, g.distances[i * k + (k - 1)]);
  }
  g.d_max = d_max;
  return g;
}

}  // namespace tango
