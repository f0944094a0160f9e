#include "tango/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace tango {
namespace {

std::string location(const std::string& name, std::size_t line,
                     std::size_t field) {
  return name + ":" + std::to_string(line) + ":" + std::to_string(field);
}

void split_fields(const std::string& line, bool comma,
                  std::vector<std::string>& out) {
  out.clear();
  if (comma) {
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find(',', start);
      std::string field = line.substr(
          start, pos == std::string::npos ? std::string::npos : pos - start);
      // trim surrounding blanks
      std::size_t b = field.find_first_not_of(" \t\r");
      std::size_t e = field.find_last_not_of(" \t\r");
      out.push_back(b == std::string::npos ? std::string()
                                           : field.substr(b, e - b + 1));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  } else {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
  }
}

bool blank(const std::string& line) {
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

double parse_value(const std::string& tok, const std::string& name,
                   std::size_t line, std::size_t field) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw DataError(location(name, line, field) + ": cannot parse '" + tok +
                    "' as a number");
  }
  if (!std::isfinite(v)) {
    throw DataError(location(name, line, field) + ": non-finite value '" +
                    tok + "'");
  }
  return v;
}

}  // namespace

CsvData read_csv(std::istream& in, const CsvReadOptions& opts,
                 const std::string& name) {
  CsvData out;
  std::unordered_map<std::string, int> label_ids;
  std::vector<std::string> fields;
  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_fields = 0;
  bool comma = false;
  bool saw_data = false;
  bool skipped_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    if (opts.header && !skipped_header) {
      skipped_header = true;
      continue;
    }
    if (!saw_data) {
      comma = line.find(',') != std::string::npos;
    }
    split_fields(line, comma, fields);
    if (!saw_data) {
      expected_fields = fields.size();
      if (opts.label_column >= 0 &&
          static_cast<std::size_t>(opts.label_column) >= expected_fields) {
        throw DataError(name + ": label column " +
                        std::to_string(opts.label_column) +
                        " out of range for " +
                        std::to_string(expected_fields) + " columns");
      }
      out.features.cols =
          expected_fields - (opts.label_column >= 0 ? 1 : 0);
      if (out.features.cols == 0) {
        throw DataError(name + ": no feature columns");
      }
      saw_data = true;
    } else if (fields.size() != expected_fields) {
      throw DataError(location(name, line_no, 1) + ": expected " +
                      std::to_string(expected_fields) + " fields, got " +
                      std::to_string(fields.size()));
    }
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (opts.label_column >= 0 &&
          f == static_cast<std::size_t>(opts.label_column)) {
        auto [it, inserted] = label_ids.try_emplace(
            fields[f], static_cast<int>(out.label_names.size()));
        if (inserted) out.label_names.push_back(fields[f]);
        out.labels.push_back(it->second);
      } else {
        out.features.values.push_back(
            parse_value(fields[f], name, line_no, f + 1));
      }
    }
    ++out.features.rows;
  }
  if (!saw_data) {
    throw DataError(name + ": no data rows");
  }
  return out;
}

CsvData read_csv(const std::string& path, const CsvReadOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open input file: " + path);
  }
  return read_csv(in, opts, path);
}

}  // namespace tango
