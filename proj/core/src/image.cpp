#include "tango/image.hpp"

#include <cctype>
#include <fstream>

namespace tango {
namespace {

// Reads the next whitespace/comment-delimited integer token of a PPM header.
int next_header_int(std::istream& in, const std::string& path) {
  while (true) {
    const int ch = in.peek();
    if (ch == '#') {
      std::string comment;
      std::getline(in, comment);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      break;
    }
  }
  int value = 0;
  if (!(in >> value)) {
    throw DataError(path + ": truncated PPM header");
  }
  return value;
}

}  // namespace

Image read_ppm(const std::string& path, std::size_t max_pixels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open image: " + path);
  std::string magic;
  in >> magic;
  if (magic != "P6" && magic != "P3") {
    throw DataError(path + ": unsupported image format (expected PPM P6/P3)");
  }
  Image img;
  img.width = next_header_int(in, path);
  img.height = next_header_int(in, path);
  const int maxval = next_header_int(in, path);
  if (img.width <= 0 || img.height <= 0) {
    throw DataError(path + ": invalid image dimensions");
  }
  if (img.pixels() > max_pixels) {
    throw DataError(path + ": image exceeds the supported size (" +
                    std::to_string(max_pixels) + " pixels)");
  }
  if (maxval != 255) {
    throw DataError(path + ": only 8-bit PPM images are supported");
  }
  const std::size_t bytes = img.pixels() * 3;
  img.rgb.resize(bytes);
  if (magic == "P6") {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(img.rgb.data()),
            static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in.gcount()) != bytes) {
      throw DataError(path + ": truncated pixel data");
    }
  } else {
    for (std::size_t i = 0; i < bytes; ++i) {
      int v;
      if (!(in >> v) || v < 0 || v > 255) {
        throw DataError(path + ": invalid pixel sample");
      }
      img.rgb[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

void write_ppm(const Image& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write image: " + path);
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()),
            static_cast<std::streamsize>(image.rgb.size()));
  if (!out) throw DataError("failed writing image: " + path);
}

DataMatrix pixel_features(const Image& image) {
  DataMatrix m;
  m.rows = image.pixels();
  m.cols = 5;
  m.values.resize(m.rows * m.cols);
  std::size_t p = 0;
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c, ++p) {
      m(p, 0) = static_cast<double>(r);
      m(p, 1) = static_cast<double>(c);
      m(p, 2) = static_cast<double>(image.rgb[3 * p + 0]);
      m(p, 3) = static_cast<double>(image.rgb[3 * p + 1]);
      m(p, 4) = static_cast<double>(image.rgb[3 * p + 2]);
    }
  }
  return m;
}

Image label_map_image(int width, int height, std::span<const int> labels) {
  static constexpr std::uint8_t palette[][3] = {
      {230, 25, 75},  {60, 180, 75},   {255, 225, 25}, {0, 130, 200},
      {245, 130, 48}, {145, 30, 180},  {70, 240, 240}, {240, 50, 230},
      {210, 245, 60}, {250, 190, 212}, {0, 128, 128},  {220, 190, 255},
      {170, 110, 40}, {255, 250, 200}, {128, 0, 0},    {170, 255, 195},
  };
  constexpr int palette_size = static_cast<int>(sizeof(palette) / 3);
  if (labels.size() != static_cast<std::size_t>(width) * height) {
    throw ConfigError("label_map_image: label count does not match size");
  }
  Image img;
  img.width = width;
  img.height = height;
  img.rgb.resize(labels.size() * 3);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const auto& color = palette[labels[p] % palette_size];
    img.rgb[3 * p + 0] = color[0];
    img.rgb[3 * p + 1] = color[1];
    img.rgb[3 * p + 2] = color[2];
  }
  return img;
}

}  // namespace tango
