#include "tango/typicality.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace tango {

TypicalityVector solve_typicality(const DependencyForest& forest,
                                  const DensityVector& rho) {
  const std::size_t n = forest.n;
  if (rho.size() != n) {
    throw ConfigError("solve_typicality: forest and density sizes differ");
  }
  const std::vector<PointId> order = density_ascending_order(rho);
  std::vector<std::int32_t> position(n);
  for (std::size_t t = 0; t < n; ++t) {
    position[order[t]] = static_cast<std::int32_t>(t);
  }

  TypicalityVector T(rho.begin(), rho.end());
  for (PointId i : order) {
    const PointId j = forest.leader[i];
    if (j == kNoPoint) continue;
    if (position[j] <= position[i]) {
      throw InternalError(
          "solve_typicality: dependency edge does not ascend the density "
          "order; the forest is cyclic");
    }
    T[j] += T[i] * forest.weight[i];
  }
  return T;
}

TypicalityVector solve_typicality_oracle(const DependencyForest& forest,
                                         const DensityVector& rho) {
  const std::size_t n = forest.n;
  if (rho.size() != n) {
    throw ConfigError("solve_typicality_oracle: size mismatch");
  }
  if (n > 500) {
    throw ConfigError("solve_typicality_oracle: dense path limited to n <= 500");
  }
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const PointId j = forest.leader[i];
    if (j != kNoPoint) {
      // (I - B^T)_{ji} = -B_{ij}
      system(j, static_cast<Eigen::Index>(i)) -= forest.weight[i];
    }
  }
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) b[static_cast<Eigen::Index>(i)] = rho[i];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  if (std::abs(lu.determinant()) < 1e-12) {
    throw InternalError(
        "solve_typicality_oracle: singular system; the dependency matrix is "
        "not forest-shaped");
  }
  const Eigen::VectorXd x = lu.solve(b);
  return TypicalityVector(x.data(), x.data() + n);
}

double typicality_residual(const DependencyForest& forest,
                           const DensityVector& rho,
                           const TypicalityVector& T) {
  const std::size_t n = forest.n;
  std::vector<double> rhs(rho.begin(), rho.end());
  for (std::size_t i = 0; i < n; ++i) {
    const PointId j = forest.leader[i];
    if (j != kNoPoint) rhs[j] += forest.weight[i] * T[i];
  }
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    res = std::max(res, std::abs(T[i] - rhs[i]));
  }
  return res;
}

SubClustering find_modes(const DependencyForest& forest,
                         const TypicalityVector& T) {
  const std::size_t n = forest.n;
  SubClustering sc;
  sc.is_mode.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const PointId j = forest.leader[i];
    if (j == kNoPoint || T[i] >= T[j]) {
      sc.is_mode[i] = 1;
      sc.modes.push_back(static_cast<PointId>(i));
    }
  }
  sc.q = sc.modes.size();

  // Iterative root-following with memoization; recursion would overflow on
  // long chains.
  sc.assignment.assign(n, kNoPoint);
  std::vector<PointId> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (sc.assignment[start] != kNoPoint) continue;
    path.clear();
    PointId cur = static_cast<PointId>(start);
    while (!sc.is_mode[cur] && sc.assignment[cur] == kNoPoint) {
      path.push_back(cur);
      cur = forest.leader[cur];
    }
    const PointId root = sc.is_mode[cur] ? cur : sc.assignment[cur];
    if (sc.is_mode[cur]) sc.assignment[cur] = cur;
    for (PointId p : path) sc.assignment[p] = root;
  }
  return sc;
}

}  // namespace tango
