#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tango/dataset.hpp"

namespace tango {

struct CsvReadOptions {
  /// Skip the first non-empty row.
  bool header = false;
  /// Zero-based column holding ground-truth labels, or -1 for none. The
  /// column is excluded from the feature matrix and retained for evaluation.
  int label_column = -1;
};

struct CsvData {
  DataMatrix features;
  /// Contiguous label ids in first-occurrence order; empty if no label
  /// column was requested.
  std::vector<int> labels;
  /// Original label tokens, indexed by label id.
  std::vector<std::string> label_names;
};

/// Reads a comma- or whitespace-delimited numeric table. The delimiter is
/// detected from the first data row. Parse failures, ragged rows and
/// non-finite values are reported as DataError with file:line:field
/// locations (1-based).
CsvData read_csv(const std::string& path, const CsvReadOptions& opts = {});
CsvData read_csv(std::istream& in, const CsvReadOptions& opts,
                 const std::string& stream_name);

}  // namespace tango
