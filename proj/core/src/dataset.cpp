#include "tango/dataset.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tango {

void require_finite(const DataMatrix& data) {
  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      if (!std::isfinite(data(r, c))) {
        throw DataError("non-finite value at row " + std::to_string(r) +
                        ", column " + std::to_string(c));
      }
    }
  }
}

DataMatrix normalize_minmax(const DataMatrix& data) {
  if (data.empty() || data.cols == 0) {
    throw DataError("cannot normalize an empty matrix");
  }
  require_finite(data);

  std::vector<double> lo(data.cols, std::numeric_limits<double>::infinity());
  std::vector<double> hi(data.cols, -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      const double v = data(r, c);
      if (v < lo[c]) lo[c] = v;
      if (v > hi[c]) hi[c] = v;
    }
  }

  DataMatrix out;
  out.rows = data.rows;
  out.cols = data.cols;
  out.values.resize(data.values.size());
  for (std::size_t c = 0; c < data.cols; ++c) {
    const double range = hi[c] - lo[c];
    for (std::size_t r = 0; r < data.rows; ++r) {
      out(r, c) = range > 0.0 ? (data(r, c) - lo[c]) / range : 0.0;
    }
  }
  return out;
}

}  // namespace tango
