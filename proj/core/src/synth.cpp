#include "tango/synth.hpp"

#include <cmath>
#include <numbers>

#include "rng.hpp"

namespace tango {
namespace {

constexpr double kPi = std::numbers::pi;

// Centers on a coarse grid; consecutive centers are far apart relative to
// the default spreads used in tests and fixtures.
void blob_center(int index, double& x, double& y) {
  static constexpr double coords[][2] = {
      {0.0, 0.0}, {6.0, 0.0}, {3.0, 5.2}, {-6.0, 2.0},
      {0.0, -6.5}, {9.0, 5.0}, {-4.0, -5.0}, {12.0, -2.0},
  };
  constexpr int known = static_cast<int>(sizeof(coords) / sizeof(coords[0]));
  const int wrap = index % known;
  const int layer = index / known;
  x = coords[wrap][0] + 20.0 * layer;
  y = coords[wrap][1];
}

}  // namespace

SyntheticData make_blobs(std::size_t n, int centers, double stddev,
                         std::uint64_t seed) {
  if (n < 4) throw ConfigError("make_blobs: n must be >= 4");
  if (centers < 1) throw ConfigError("make_blobs: centers must be >= 1");
  detail::Rng rng(detail::mix_seed(seed, 0xb10b5));
  SyntheticData out;
  out.points.rows = n;
  out.points.cols = 2;
  out.points.values.resize(2 * n);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = static_cast<int>(i % static_cast<std::size_t>(centers));
    double cx, cy;
    blob_center(c, cx, cy);
    out.points(i, 0) = cx + stddev * rng.normal();
    out.points(i, 1) = cy + stddev * rng.normal();
    out.labels[i] = c;
  }
  return out;
}

SyntheticData make_moons(std::size_t n, double noise, std::uint64_t seed) {
  if (n < 4) throw ConfigError("make_moons: n must be >= 4");
  detail::Rng rng(detail::mix_seed(seed, 0x30035));
  SyntheticData out;
  out.points.rows = n;
  out.points.cols = 2;
  out.points.values.resize(2 * n);
  out.labels.resize(n);
  const std::size_t n_outer = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    double x, y;
    if (i < n_outer) {
      const double t = kPi * static_cast<double>(i) /
                       static_cast<double>(n_outer - 1);
      x = std::cos(t);
      y = std::sin(t);
      out.labels[i] = 0;
    } else {
      const std::size_t j = i - n_outer;
      const std::size_t n_inner = n - n_outer;
      const double t = kPi * static_cast<double>(j) /
                       static_cast<double>(n_inner - 1);
      x = 1.0 - std::cos(t);
      y = 0.5 - std::sin(t);
      out.labels[i] = 1;
    }
    out.points(i, 0) = x + noise * rng.normal();
    out.points(i, 1) = y + noise * rng.normal();
  }
  return out;
}

SyntheticData make_circles(std::size_t n, double noise, double factor,
                           std::uint64_t seed) {
  if (n < 4) throw ConfigError("make_circles: n must be >= 4");
  if (factor <= 0.0 || factor >= 1.0) {
    throw ConfigError("make_circles: factor must lie in (0, 1)");
  }
  detail::Rng rng(detail::mix_seed(seed, 0xc12c1e5));
  SyntheticData out;
  out.points.rows = n;
  out.points.cols = 2;
  out.points.values.resize(2 * n);
  out.labels.resize(n);
  const std::size_t n_outer = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const bool outer = i < n_outer;
    const std::size_t j = outer ? i : i - n_outer;
    const std::size_t m = outer ? n_outer : n - n_outer;
    const double t = 2.0 * kPi * static_cast<double>(j) /
                     static_cast<double>(m);
    const double r = outer ? 1.0 : factor;
    out.points(i, 0) = r * std::cos(t) + noise * rng.normal();
    out.points(i, 1) = r * std::sin(t) + noise * rng.normal();
    out.labels[i] = outer ? 0 : 1;
  }
  return out;
}

}  // namespace tango
