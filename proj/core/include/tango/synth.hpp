#pragma once

#include <cstdint>
#include <vector>

#include "tango/dataset.hpp"

namespace tango {

struct SyntheticData {
  DataMatrix points;
  std::vector<int> labels;
};

/// Isotropic Gaussian blobs around well-separated fixed centers. Points are
/// dealt round-robin, so n divisible by the center count gives exactly
/// balanced classes. Deterministic per seed on any platform.
SyntheticData make_blobs(std::size_t n, int centers, double stddev,
                         std::uint64_t seed);

/// Two interleaving half-circles with Gaussian coordinate noise.
SyntheticData make_moons(std::size_t n, double noise, std::uint64_t seed);

/// Two concentric circles; the inner radius is `factor` times the outer.
SyntheticData make_circles(std::size_t n, double noise, double factor,
                           std::uint64_t seed);

}  // namespace tango
