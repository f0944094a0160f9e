// Shared deterministic fixtures for the test and acceptance suites.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rng.hpp"
#include "tango/dataset.hpp"
#include "tango/forest.hpp"

namespace fixtures {

inline tango::DataMatrix random_points(std::size_t n, std::size_t dims,
                                       std::uint64_t seed,
                                       double span = 1.0) {
  tango::detail::Rng rng(seed);
  tango::DataMatrix m;
  m.rows = n;
  m.cols = dims;
  m.values.resize(n * dims);
  for (double& v : m.values) v = span * rng.uniform01();
  return m;
}

/// Arbitrary forest-shaped dependency structure with random densities and
/// ranks; exercises the typicality solvers beyond what real data produces.
struct RandomForest {
  tango::DependencyForest forest;
  tango::DensityVector rho;
};

inline RandomForest random_forest(std::size_t n, std::uint64_t seed,
                                  double root_probability = 0.25) {
  tango::detail::Rng rng(seed);
  RandomForest out;
  out.rho.resize(n);
  for (double& r : out.rho) r = rng.uniform01();

  const std::vector<tango::PointId> order =
      tango::density_ascending_order(out.rho);
  std::vector<std::int32_t> position(n);
  for (std::size_t t = 0; t < n; ++t) position[order[t]] = static_cast<std::int32_t>(t);

  out.forest.n = n;
  out.forest.leader.assign(n, tango::kNoPoint);
  out.forest.rank.assign(n, 0);
  out.forest.weight.assign(n, 0.0);
  std::int32_t max_rank = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int32_t pos = position[i];
    if (pos + 1 == static_cast<std::int32_t>(n)) continue;  // global maximum
    if (rng.uniform01() < root_probability) continue;
    const std::size_t offset = rng.uniform_index(n - 1 - pos);
    out.forest.leader[i] = order[pos + 1 + offset];
    out.forest.rank[i] = static_cast<std::int32_t>(1 + rng.uniform_index(8));
    max_rank = std::max(max_rank, out.forest.rank[i]);
  }
  out.forest.max_rank = max_rank;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.forest.leader[i] != tango::kNoPoint) {
      const double x = static_cast<double>(out.forest.rank[i]) /
                       static_cast<double>(max_rank);
      out.forest.weight[i] = std::exp(-x * x);
    }
  }
  return out;
}

/// Two-cluster layout in which a sparse satellite group around a secondary
/// peak P decides whether P's dependency on the dense cluster is broken.
/// `satellites` controls how many extra points surround P.
inline tango::DataMatrix crossover_scene(int satellites) {
  std::vector<double> pts;
  auto add = [&pts](double x, double y) {
    pts.push_back(x);
    pts.push_back(y);
  };

  // Dense cluster around the origin (its peak plays the role of Q).
  tango::detail::Rng rng(0xf16'2u);
  for (int i = 0; i < 60; ++i) {
    add(0.35 * rng.normal(), 0.35 * rng.normal());
  }
  // P and a thin bridge of companions towards the dense cluster.
  const double px = 2.1, py = 0.0;
  add(px, py);
  add(px - 0.45, 0.12);
  add(px - 0.45, -0.12);
  add(px - 0.85, 0.0);
  add(px - 1.25, 0.05);
  add(px + 0.4, 0.15);
  add(px + 0.4, -0.15);
  // Satellite ring(s) around P.
  for (int s = 0; s < satellites; ++s) {
    const double angle = 2.0 * 3.14159265358979323846 *
                         static_cast<double>(s % 12) / 12.0;
    const double radius = s < 12 ? 0.5 : 0.75;
    add(px + radius * std::cos(angle), py + radius * std::sin(angle));
  }

  tango::DataMatrix m;
  m.rows = pts.size() / 2;
  m.cols = 2;
  m.values = std::move(pts);
  return m;
}

/// Index of the point P in crossover_scene.
constexpr std::size_t kCrossoverP = 60;

}  // namespace fixtures
