// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief Flat key/value run configuration with dotted section names.
 *
 * Format, one file per run:
 *   # comment
 *   physics.g_hz = 334e3
 *   state.b = grid(0, 6, 601)
 *   outputs.quantities = n_ss, n_th, eta
 *
 * Later assignments override earlier ones; CLI flags override file keys.
 */

#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "paircav/errors.hpp"

namespace paircav {

using KeyValues = std::map<std::string, std::string>;

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline double parse_double(const std::string& s, const std::string& key) {
  const std::string t = detail::trim(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    throw ConfigError("key '" + key + "': cannot parse number from '" + s + "'");
  return v;
}

inline long parse_long(const std::string& s, const std::string& key) {
  const std::string t = detail::trim(s);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    throw ConfigError("key '" + key + "': cannot parse integer from '" + s + "'");
  return v;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = detail::trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline KeyValues parse_config_text(const std::string& text) {
  KeyValues kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

inline KeyValues load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

/// A sweep axis: either a single value or a uniform grid.
struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  static AxisSpec scalar(double v) { return {v, v, 1}; }
  static AxisSpec grid(double min, double max, int count) { return {min, max, count}; }

  /// Accepts "1.25" or "grid(min, max, count)".
  static AxisSpec parse(const std::string& s, const std::string& key) {
    const std::string t = detail::trim(s);
    if (t.rfind("grid(", 0) == 0) {
      if (t.back() != ')') throw ConfigError("key '" + key + "': malformed grid spec '" + s + "'");
      const auto parts = split_list(t.substr(5, t.size() - 6));
      if (parts.size() != 3)
        throw ConfigError("key '" + key + "': grid spec needs grid(min, max, count)");
      AxisSpec a;
      a.min = parse_double(parts[0], key);
      a.max = parse_double(parts[1], key);
      a.count = int(parse_long(parts[2], key));
      if (a.count < 1) throw ConfigError("key '" + key + "': grid count must be >= 1");
      return a;
    }
    return scalar(parse_double(t, key));
  }

  bool gridded() const { return count > 1; }

  std::vector<double> values() const {
    std::vector<double> v(count);
    if (count == 1) {
      v[0] = min;
    } else {
      for (int i = 0; i < count; ++i) v[i] = min + (max - min) * double(i) / double(count - 1);
    }
    return v;
  }

  bool contains_zero() const {
    for (double v : values())
      if (v == 0.0) return true;
    return false;
  }
};

}  // namespace paircav
