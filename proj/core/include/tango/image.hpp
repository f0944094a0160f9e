#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tango/dataset.hpp"

namespace tango {

/// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  std::size_t pixels() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
};

/// Reads a PPM image (binary P6 or ASCII P3, maxval 255). Throws DataError
/// on anything else, including images above `max_pixels`.
Image read_ppm(const std::string& path, std::size_t max_pixels = 1 << 24);
void write_ppm(const Image& image, const std::string& path);

/// One 5-dimensional row (row, col, R, G, B) per pixel, in raster order.
DataMatrix pixel_features(const Image& image);

/// Renders per-pixel cluster labels with a fixed distinct-color palette.
Image label_map_image(int width, int height, std::span<const int> labels);

}  // namespace tango
