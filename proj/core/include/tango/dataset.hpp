#pragma once

#include <cstddef>
#include <vector>

#include "tango/common.hpp"

namespace tango {

/// Dense row-major feature matrix. One row per data point.
struct DataMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // rows * cols, row-major

  double operator()(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return values[r * cols + c];
  }
  const double* row(std::size_t r) const { return values.data() + r * cols; }

  bool empty() const { return rows == 0; }
};

/// Rescales every column affinely to [0, 1]. Columns with zero range map to
/// all-zeros. Throws DataError (with row/column location) on non-finite
/// values and on empty input.
DataMatrix normalize_minmax(const DataMatrix& data);

/// Throws DataError naming the first non-finite entry, if any.
void require_finite(const DataMatrix& data);

}  // namespace tango
