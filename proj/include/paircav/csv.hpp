// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "paircav/errors.hpp"

namespace paircav {

/// Scientific notation with 12 significant digits, locale-independent.
/// NaN renders as "nan". This is the byte-exact contract for all CSV output.
inline std::string format_sci(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

/// Minimal CSV emitter: UTF-8, comma separators, header row, LF endings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw ConfigError("cannot open output file: " + path);
  }

  void header(const std::vector<std::string>& cols) { raw_row(cols); }

  void row(const std::vector<std::string>& cells) { raw_row(cells); }

  void close() { out_.close(); }

 private:
  void raw_row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ofstream out_;
};

}  // namespace paircav
