#pragma once

// Summary reports and their CSV / JSON renderings.
//
// CSV: '#'-prefixed config echo lines (sorted by key, then "seed"), a header
// row, one line per cell row. LF line endings. Doubles are printed with
// "%.12g", exact rationals as "num/den" strings. The runtime is not part of
// the CSV, so reruns produce identical bytes.
//
// JSON: {"config": {...}, "cells": [{column: value, ...}, ...],
//        "runtime_ms": number, "version": string}.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "randpoly/errors.hpp"
#include "randpoly/harness/config.hpp"

#ifndef RANDPOLY_VERSION
#define RANDPOLY_VERSION "0.1.0"
#endif

namespace randpoly::harness {

inline constexpr const char* kVersion = RANDPOLY_VERSION;

using Cell = std::variant<std::int64_t, double, std::string>;

struct SummaryReport {
  std::string experiment;
  ParamMap config;  // resolved parameters; seed is echoed separately
  std::uint64_t master_seed = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  double runtime_ms = 0;
  std::string version = kVersion;

  void add_row(std::vector<Cell> row) {
    ensure(row.size() == columns.size(), "report row width does not match header");
    rows.push_back(std::move(row));
  }

  // Position of a column; throws if absent.
  std::size_t column(const std::string& label) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == label) return i;
    throw InvariantError("report has no column '" + label + "'");
  }
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string render_csv(const SummaryReport& r) {
  std::string out = "# experiment=" + r.experiment + "\n";
  for (const auto& [key, value] : r.config) out += "# " + key + "=" + value + "\n";
  out += "# seed=" + std::to_string(r.master_seed) + "\n";
  out += "# version=" + r.version + "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) out += (i ? "," : "") + csv_escape(r.columns[i]);
  out += "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(format_cell(row[i]));
    out += "\n";
  }
  return out;
}

inline nlohmann::ordered_json to_json(const SummaryReport& r) {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  config["experiment"] = r.experiment;
  config["seed"] = r.master_seed;
  for (const auto& [key, value] : r.config) config[key] = value;

  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (const auto* v = std::get_if<std::int64_t>(&c)) {
        obj[r.columns[i]] = *v;
      } else if (const auto* d = std::get_if<double>(&c)) {
        obj[r.columns[i]] = std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
      } else {
        obj[r.columns[i]] = std::get<std::string>(c);
      }
    }
    cells.push_back(std::move(obj));
  }
  return {{"config", config}, {"cells", cells}, {"runtime_ms", r.runtime_ms}, {"version", r.version}};
}

inline std::string render_json(const SummaryReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace randpoly::harness
