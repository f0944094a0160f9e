#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tango/typicality.hpp"

using namespace tango;

namespace {

DependencyForest manual_forest(std::size_t n,
                               const std::vector<std::pair<PointId, double>>& edges) {
  DependencyForest f;
  f.n = n;
  f.leader.assign(n, kNoPoint);
  f.rank.assign(n, 0);
  f.weight.assign(n, 0.0);
  f.max_rank = 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    f.leader[i] = edges[i].first;
    f.weight[i] = edges[i].second;
    f.rank[i] = edges[i].first == kNoPoint ? 0 : 1;
  }
  return f;
}

}  // namespace

TEST_CASE("one-level tree: direct expansion") {
  // root 0 with children 1, 2
  const DependencyForest f = manual_forest(
      3, {{kNoPoint, 0.0}, {0, 0.6}, {0, 0.25}});
  const DensityVector rho{0.9, 0.4, 0.2};
  const TypicalityVector T = solve_typicality(f, rho);
  CHECK(T[1] == 0.4);
  CHECK(T[2] == 0.2);
  CHECK(T[0] == doctest::Approx(0.9 + 0.6 * 0.4 + 0.25 * 0.2).epsilon(1e-15));
}

TEST_CASE("chain collects typicality through intermediate points") {
  // x4 -> x2 -> x0 and x1 -> x0, x3 -> x0 (indices: i=0, x1..x4=1..4)
  const double w1 = 0.8, w2 = 0.7, w3 = 0.55, w4 = 0.9;
  const DependencyForest f = manual_forest(
      5, {{kNoPoint, 0.0}, {0, w1}, {0, w2}, {0, w3}, {2, w4}});
  const DensityVector rho{0.9, 0.3, 0.5, 0.2, 0.1};
  const TypicalityVector T = solve_typicality(f, rho);
  CHECK(T[2] == doctest::Approx(rho[2] + w4 * rho[4]).epsilon(1e-15));
  const double expected =
      w1 * rho[1] + w2 * (w4 * rho[4] + rho[2]) + w3 * rho[3] + rho[0];
  CHECK(T[0] == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("empty forest: T equals the density vector") {
  const DependencyForest f = manual_forest(
      4, {{kNoPoint, 0.0}, {kNoPoint, 0.0}, {kNoPoint, 0.0}, {kNoPoint, 0.0}});
  const DensityVector rho{0.1, 0.9, 0.4, 0.2};
  CHECK(solve_typicality(f, rho) == rho);
  CHECK(solve_typicality_oracle(f, rho) == rho);
}

TEST_CASE("forward solve matches the dense oracle on random forests") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto fx = fixtures::random_forest(10 + seed * 2, seed);
    const TypicalityVector fast = solve_typicality(fx.forest, fx.rho);
    const TypicalityVector dense = solve_typicality_oracle(fx.forest, fx.rho);
    REQUIRE(fast.size() == dense.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      REQUIRE(std::abs(fast[i] - dense[i]) <= 1e-9);
    }
    REQUIRE(typicality_residual(fx.forest, fx.rho, fast) <= 1e-9);
  }
}

TEST_CASE("T dominates rho and the fixed point holds") {
  const auto fx = fixtures::random_forest(200, 77);
  const TypicalityVector T = solve_typicality(fx.forest, fx.rho);
  for (std::size_t i = 0; i < T.size(); ++i) {
    CHECK(T[i] >= fx.rho[i]);
  }
  CHECK(typicality_residual(fx.forest, fx.rho, T) <= 1e-9);
}

TEST_CASE("unit determinant after the density permutation") {
  const auto fx = fixtures::random_forest(40, 5);
  const std::size_t n = fx.forest.n;
  const auto order = density_ascending_order(fx.rho);
  // Permuted system I - M^T must be unit lower triangular, so its
  // determinant is exactly 1; the unpermuted determinant matches it.
  std::vector<std::int32_t> pos(n);
  for (std::size_t t = 0; t < n; ++t) pos[order[t]] = static_cast<std::int32_t>(t);
  Eigen::MatrixXd permuted = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd plain = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const PointId j = fx.forest.leader[i];
    if (j == kNoPoint) continue;
    permuted(pos[j], pos[i]) -= fx.forest.weight[i];
    plain(j, static_cast<Eigen::Index>(i)) -= fx.forest.weight[i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    CHECK(permuted(r, r) == 1.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      CHECK(permuted(r, c) == 0.0);  // strictly upper part vanishes
    }
  }
  CHECK(std::abs(plain.partialPivLu().determinant() - 1.0) <= 1e-9);
}

TEST_CASE("linearity in rho") {
  const auto fx = fixtures::random_forest(100, 11);
  const TypicalityVector T = solve_typicality(fx.forest, fx.rho);

  DensityVector scaled8 = fx.rho;
  for (double& r : scaled8) r *= 8.0;
  const TypicalityVector T8 = solve_typicality(fx.forest, scaled8);
  for (std::size_t i = 0; i < T.size(); ++i) {
    CHECK(T8[i] == 8.0 * T[i]);  // power-of-two scaling is bit-exact
  }

  DensityVector scaled3 = fx.rho;
  for (double& r : scaled3) r *= 3.0;
  const TypicalityVector T3 = solve_typicality(fx.forest, scaled3);
  for (std::size_t i = 0; i < T.size(); ++i) {
    CHECK(T3[i] == doctest::Approx(3.0 * T[i]).epsilon(1e-12));
  }
}

TEST_CASE("cyclic input is rejected as an invariant violation") {
  DependencyForest f;
  f.n = 2;
  f.leader = {1, 0};
  f.rank = {1, 1};
  f.weight = {0.5, 0.5};
  f.max_rank = 1;
  const DensityVector rho{0.3, 0.7};
  CHECK_THROWS_AS(solve_typicality(f, rho), InternalError);
}

TEST_CASE("oracle rejects oversized instances") {
  const auto fx = fixtures::random_forest(501, 3);
  CHECK_THROWS_AS(solve_typicality_oracle(fx.forest, fx.rho), ConfigError);
}

TEST_CASE("find_modes: no edges means every point is a mode") {
  const DependencyForest f = manual_forest(
      3, {{kNoPoint, 0.0}, {kNoPoint, 0.0}, {kNoPoint, 0.0}});
  const TypicalityVector T{0.1, 0.2, 0.3};
  const SubClustering sc = find_modes(f, T);
  CHECK(sc.q == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(sc.assignment[i] == static_cast<PointId>(i));
  }
}

TEST_CASE("find_modes: equal typicality breaks the edge") {
  const DependencyForest f = manual_forest(2, {{1, 0.5}, {kNoPoint, 0.0}});
  SUBCASE("strictly below keeps the dependency") {
    const TypicalityVector T{0.5, 0.8};
    const SubClustering sc = find_modes(f, T);
    CHECK(sc.q == 1);
    CHECK(sc.assignment[0] == 1);
  }
  SUBCASE("exact tie breaks it") {
    const TypicalityVector T{0.8, 0.8};
    const SubClustering sc = find_modes(f, T);
    CHECK(sc.q == 2);
    CHECK(sc.is_mode[0] == 1);
  }
}

TEST_CASE("find_modes matches the component-labeling oracle") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    const auto fx = fixtures::random_forest(60, seed);
    const TypicalityVector T = solve_typicality(fx.forest, fx.rho);
    const SubClustering sc = find_modes(fx.forest, T);
    const auto expected = oracle::components_after_breaking(fx.forest, T);
    REQUIRE(sc.assignment == expected);
    // every mode maps to itself; q counts the modes
    std::size_t q = 0;
    for (std::size_t i = 0; i < sc.is_mode.size(); ++i) {
      if (sc.is_mode[i]) {
        ++q;
        REQUIRE(sc.assignment[i] == static_cast<PointId>(i));
      }
    }
    REQUIRE(sc.q == q);
    REQUIRE(sc.q >= 1);
  }
}

TEST_CASE("raising a point's typicality never demotes it from mode") {
  const auto fx = fixtures::random_forest(80, 21);
  TypicalityVector T = solve_typicality(fx.forest, fx.rho);
  const SubClustering before = find_modes(fx.forest, T);
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (!before.is_mode[i]) continue;
    TypicalityVector bumped = T;
    bumped[i] += 0.5;
    const SubClustering after = find_modes(fx.forest, bumped);
    CHECK(after.is_mode[i] == 1);
  }
}
