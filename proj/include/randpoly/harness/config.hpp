#pragma once

// Experiment configuration: a flat "key = value" text format, per-experiment
// parameter schemas with defaults, and typed accessors. Unknown keys are
// errors.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "randpoly/errors.hpp"
#include "randpoly/int_poly.hpp"
#include "randpoly/random.hpp"

namespace randpoly::harness {

struct ConfigError : UsageError {
  using UsageError::UsageError;
};

enum class Experiment {
  IrreducibilityRate,
  TvDistance,
  DistributionAudit,
  DiscStats,
  Table1Scan,
  DetSquare,
  CycleEvents,
  SmallDivisorRate,
};

inline constexpr Experiment kAllExperiments[] = {
    Experiment::IrreducibilityRate, Experiment::TvDistance, Experiment::DistributionAudit,
    Experiment::DiscStats,          Experiment::Table1Scan, Experiment::DetSquare,
    Experiment::CycleEvents,        Experiment::SmallDivisorRate,
};

inline std::string_view name(Experiment e) {
  switch (e) {
    case Experiment::IrreducibilityRate: return "irreducibility_rate";
    case Experiment::TvDistance: return "tv_distance";
    case Experiment::DistributionAudit: return "distribution_audit";
    case Experiment::DiscStats: return "disc_stats";
    case Experiment::Table1Scan: return "table1_scan";
    case Experiment::DetSquare: return "det_square";
    case Experiment::CycleEvents: return "cycle_events";
    case Experiment::SmallDivisorRate: return "small_divisor_rate";
  }
  return "?";
}

inline std::optional<Experiment> parse_experiment(std::string_view s) {
  for (auto e : kAllExperiments)
    if (name(e) == s) return e;
  return std::nullopt;
}

using ParamMap = std::map<std::string, std::string>;

// Every accepted key with its default. "auto" defers to a derived value.
inline const ParamMap& schema(Experiment e) {
  static const std::map<Experiment, ParamMap> schemas{
      {Experiment::IrreducibilityRate,
       {{"degrees", "10,20,40"}, {"model", "uniform"}, {"low", "1"}, {"high", "210"},
        {"constant_term_one", "true"}, {"primes", "2,3,5,7"}, {"trials", "10000"},
        {"fixture", ""}}},
      {Experiment::TvDistance, {{"q", "2"}, {"n", "12"}, {"r_min", "1"}, {"r_max", "auto"}}},
      {Experiment::DistributionAudit, {{"q", "2"}, {"degrees", "1..14"}}},
      {Experiment::DiscStats,
       {{"degrees", "4..31"}, {"model", "pm1"}, {"low", "1"}, {"high", "210"},
        {"constant_term_one", "true"}, {"trials", "10000"}, {"real_roots", "false"}}},
      {Experiment::Table1Scan, {{"degrees", "9,13,17,41"}, {"trials", "100000"}}},
      {Experiment::DetSquare, {{"dims", "1..10"}, {"trials", "100000"}}},
      {Experiment::CycleEvents,
       {{"n", "256"}, {"ks", "8,16,32,64"}, {"lambda", "2"}, {"trials", "10000"},
        {"double_threshold", "auto"}, {"rough_a", "0.25"}, {"rough_b", "0.75"},
        {"prime_floor", "auto"}, {"epsilon", "0.1"}}},
      {Experiment::SmallDivisorRate,
       {{"degrees", "10,20,40"}, {"bounds", "0,1,2,3"}, {"model", "uniform"}, {"low", "1"},
        {"high", "210"}, {"constant_term_one", "true"}, {"primes", "2,3,5,7"},
        {"trials", "10000"}}},
  };
  return schemas.at(e);
}

struct ExperimentConfig {
  Experiment experiment = Experiment::IrreducibilityRate;
  ParamMap params;  // overrides only; see resolved()
  std::uint64_t master_seed = kDefaultMasterSeed;
  int workers = 1;

  // Schema defaults overlaid with overrides; throws on unknown keys.
  ParamMap resolved() const {
    ParamMap out = schema(experiment);
    for (const auto& [key, value] : params) {
      auto it = out.find(key);
      if (it == out.end())
        throw ConfigError("unknown key '" + key + "' for experiment " + std::string(name(experiment)));
      it->second = value;
    }
    return out;
  }
};

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw ConfigError(key + ": value out of range '" + value + "'");
  }
}

inline long parse_long(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return out;
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) throw ConfigError(key + ": expected a number, got '" + value + "'");
  return out;
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

// "10,20,40", "4..31", or a mix such as "1..3,7".
inline std::vector<long> parse_list(const std::string& key, const std::string& value) {
  std::vector<long> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const long lo = parse_long(key, trim(item.substr(0, dots)));
      const long hi = parse_long(key, trim(item.substr(dots + 2)));
      if (lo > hi) throw ConfigError(key + ": empty range '" + item + "'");
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_long(key, item));
    }
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

// Parses "key = value" lines; '#' starts a comment. The keys "seed" and
// "workers" set the run-level fields, the rest become parameters.
inline void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (key == "seed") {
      cfg.master_seed = parse_u64(key, value);
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_long(key, value));
    } else {
      cfg.params[key] = value;
    }
  }
}

// Typed view over resolved parameters.
class Params {
 public:
  explicit Params(ParamMap values) : values_(std::move(values)) {}

  const std::string& raw(const std::string& key) const {
    auto it = values_.find(key);
    ensure(it != values_.end(), "parameter '" + key + "' missing from schema");
    return it->second;
  }
  bool is_auto(const std::string& key) const { return raw(key) == "auto"; }
  long integer(const std::string& key) const { return parse_long(key, raw(key)); }
  double number(const std::string& key) const { return parse_double(key, raw(key)); }
  bool flag(const std::string& key) const { return parse_bool(key, raw(key)); }
  std::vector<long> list(const std::string& key) const { return parse_list(key, raw(key)); }

  std::uint64_t positive(const std::string& key) const {
    const long v = integer(key);
    if (v < 1) throw ConfigError(key + " must be >= 1");
    return static_cast<std::uint64_t>(v);
  }

  std::vector<std::uint64_t> primes(const std::string& key) const {
    std::vector<std::uint64_t> out;
    for (long v : list(key)) {
      if (v < 2 || !is_prime_u64(static_cast<std::uint64_t>(v)))
        throw ConfigError(key + ": " + std::to_string(v) + " is not prime");
      for (auto seen : out)
        if (seen == static_cast<std::uint64_t>(v)) throw ConfigError(key + ": duplicate prime " + std::to_string(v));
      out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
  }

  CoefficientModel model() const {
    const auto& kind = raw("model");
    if (kind == "uniform") {
      UniformRange u{integer("low"), integer("high")};
      if (u.low > u.high) throw ConfigError("model uniform: low > high");
      return u;
    }
    if (kind == "pm1") return PlusMinusOne{};
    if (kind == "zero_one") return ZeroOne{flag("constant_term_one")};
    throw ConfigError("model: expected uniform, pm1 or zero_one, got '" + kind + "'");
  }

  const ParamMap& values() const { return values_; }

 private:
  ParamMap values_;
};

}  // namespace randpoly::harness
