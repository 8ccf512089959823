#pragma once

// The eight experiments. Each runner validates every parameter before the
// first trial, draws trial i of cell c from the stream keyed by
// ("<experiment>/<cell>", i), and reduces per-trial results in index order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "randpoly/distribution.hpp"
#include "randpoly/errors.hpp"
#include "randpoly/harness/config.hpp"
#include "randpoly/harness/report.hpp"
#include "randpoly/harness/runner.hpp"
#include "randpoly/int_matrix.hpp"
#include "randpoly/int_poly.hpp"
#include "randpoly/permutation.hpp"
#include "randpoly/root_oracle.hpp"
#include "randpoly/sieve.hpp"
#include "randpoly/stats.hpp"

namespace randpoly::harness {

namespace detail {

inline SummaryReport start_report(const ExperimentConfig& cfg, const Params& p,
                                  std::vector<std::string> columns) {
  SummaryReport r;
  r.experiment = std::string(name(cfg.experiment));
  r.config = p.values();
  r.master_seed = cfg.master_seed;
  r.columns = std::move(columns);
  return r;
}

inline std::string cell_label(const ExperimentConfig& cfg, const std::string& cell) {
  return std::string(name(cfg.experiment)) + "/" + cell;
}

inline Cell i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }
inline Cell i64(long v) { return static_cast<std::int64_t>(v); }
inline Cell i64(int v) { return static_cast<std::int64_t>(v); }

// "k:count;k:count", or "-" when empty.
template <class Map>
std::string histogram_text(const Map& h) {
  if (h.empty()) return "-";
  std::string out;
  for (const auto& [k, c] : h) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ":" + std::to_string(c);
  }
  return out;
}

inline std::vector<int> degree_list(const Params& p, const std::string& key, int min_degree) {
  std::vector<int> out;
  for (long v : p.list(key)) {
    if (v < min_degree || v > 100000)
      throw ConfigError(key + ": degree " + std::to_string(v) + " outside [" + std::to_string(min_degree) +
                        ", 100000]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

inline int checked_workers(const ExperimentConfig& cfg) {
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  return cfg.workers;
}

// A fixed polynomial replaces sampling when "fixture" is non-empty.
struct PolySource {
  CoefficientModel model;
  std::optional<IntPoly> fixture;

  IntPoly draw(int n, RandomStream& stream) const { return fixture ? *fixture : sample_int_poly(n, model, stream); }
};

inline std::optional<IntPoly> parse_fixture(const Params& p) {
  const auto& text = p.raw("fixture");
  if (text.empty()) return std::nullopt;
  IntPoly f;
  try {
    f = IntPoly::parse_text(text);
  } catch (const UsageError& e) {
    throw ConfigError(std::string("fixture: ") + e.what());
  }
  if (!f.is_monic() || f.degree() < 2) throw ConfigError("fixture: need a monic polynomial of degree >= 2");
  return f;
}

}  // namespace detail

// Columns: n, trials, certified, rate, ci_radius, unknown_witness_sizes.
// unknown_witness_sizes histograms, over Unknown verdicts, the number of
// candidate divisor degrees left in (0, n).
inline SummaryReport run_irreducibility_rate(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const auto primes = p.primes("primes");
  const detail::PolySource source{p.model(), detail::parse_fixture(p)};
  const auto degrees =
      source.fixture ? std::vector<int>{source.fixture->degree()} : detail::degree_list(p, "degrees", 2);

  auto report = detail::start_report(cfg, p, {"n", "trials", "certified", "rate", "ci_radius", "unknown_witness_sizes"});
  for (int n : degrees) {
    const auto outcomes = run_trials<int>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "n=" + std::to_string(n)),
        [&](RandomStream& s, std::uint64_t) {
          const auto v = degree_sieve_certify(source.draw(n, s), primes);
          return v.status == SieveStatus::Irreducible ? -1 : static_cast<int>(v.witness.count()) - 2;
        });
    Frequency certified{0, trials};
    std::map<int, std::uint64_t> sizes;
    for (int o : outcomes) {
      if (o < 0)
        ++certified.hits;
      else
        ++sizes[o];
    }
    report.add_row({detail::i64(n), detail::i64(trials), detail::i64(certified.hits), certified.value(),
                    certified.radius(), detail::histogram_text(sizes)});
  }
  return report;
}

// Columns: q, n, r, tv, tv_value, r_times_tv, max_r_times_tv. tv and
// r_times_tv are exact; max_r_times_tv is the maximum over the listed rows.
inline SummaryReport run_tv_distance(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  detail::checked_workers(cfg);
  const long q = p.integer("q");
  const long n = p.integer("n");
  if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q))) throw ConfigError("q must be prime");
  if (n < 1) throw ConfigError("n must be >= 1");
  if (n > kDistributionCap)
    throw CapacityError("tv_distance: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kDistributionCap));
  const long r_min = p.integer("r_min");
  const long r_max = p.is_auto("r_max") ? n + 1 : p.integer("r_max");
  if (r_min < 1 || r_max > n + 1 || r_min > r_max) throw ConfigError("need 1 <= r_min <= r_max <= n+1");

  const auto uq = static_cast<std::uint64_t>(q);
  const auto x = build_distribution(uq, static_cast<int>(n), LawKind::X);
  const auto y = build_distribution(uq, static_cast<int>(n), LawKind::Y);
  std::vector<std::pair<long, ExactRational>> tvs;
  ExactRational max_scaled = 0;
  for (long r = r_min; r <= r_max; ++r) {
    auto tv = tv_between(marginal_from(x, static_cast<int>(r)), marginal_from(y, static_cast<int>(r)));
    max_scaled = std::max(max_scaled, ExactRational(tv * r));
    tvs.emplace_back(r, std::move(tv));
  }
  auto report = detail::start_report(cfg, p, {"q", "n", "r", "tv", "tv_value", "r_times_tv", "max_r_times_tv"});
  for (const auto& [r, tv] : tvs) {
    const ExactRational scaled = tv * r;
    report.add_row({detail::i64(q), detail::i64(n), detail::i64(r), to_string(tv), tv.get_d(), to_string(scaled),
                    to_string(max_scaled)});
  }
  return report;
}

// Columns: q, n, polynomials, cells, mismatches, formula_total. A cell is a
// factor type; it mismatches when the product formula and the exhaustive
// tally disagree.
inline SummaryReport run_distribution_audit(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  detail::checked_workers(cfg);
  const long q = p.integer("q");
  if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q))) throw ConfigError("q must be prime");
  const auto uq = static_cast<std::uint64_t>(q);
  const auto degrees = detail::degree_list(p, "degrees", 1);
  for (int n : degrees)
    if (pow(BigInt(static_cast<unsigned long>(uq)), static_cast<unsigned long>(n)) > BigInt(static_cast<unsigned long>(kExhaustiveCap)))
      throw CapacityError("distribution_audit: q^n exceeds 2^24 at n=" + std::to_string(n));

  auto report = detail::start_report(cfg, p, {"q", "n", "polynomials", "cells", "mismatches", "formula_total"});
  for (int n : degrees) {
    const auto formula = build_distribution(uq, n, LawKind::X);
    const auto tally = exhaustive_distribution(uq, n);
    std::set<DegreeMultiset> keys;
    for (const auto& [ct, prob] : formula.entries) keys.insert(ct);
    for (const auto& [ct, prob] : tally.entries) keys.insert(ct);
    std::uint64_t mismatches = 0;
    for (const auto& ct : keys) {
      const auto a = formula.entries.find(ct);
      const auto b = tally.entries.find(ct);
      const ExactRational pa = a == formula.entries.end() ? ExactRational(0) : a->second;
      const ExactRational pb = b == tally.entries.end() ? ExactRational(0) : b->second;
      if (pa != pb) ++mismatches;
    }
    report.add_row({detail::i64(q), detail::i64(n),
                    pow(BigInt(static_cast<unsigned long>(uq)), static_cast<unsigned long>(n)).get_str(),
                    detail::i64(static_cast<std::uint64_t>(keys.size())), detail::i64(mismatches),
                    to_string(formula.total())});
  }
  return report;
}

// Columns: n, trials, degenerate, squares, positive, negative, v2_min,
// v2_max, v2_histogram, log_mean, log_var, sign_checked, mean_fit_residual,
// var_fit_residual, mean_slope, mean_intercept, mean_r2, var_slope,
// var_intercept, var_r2.
//
// Degenerate samples (disc = 0) are counted and excluded from every other
// statistic; squares counts nonzero square discriminants. log|disc| is
// ln(mantissa) + exponent * ln 2 from mpz_get_d_2exp, the only
// floating-point step. The fits regress log_mean and log_var on n across
// rows; residuals are observed minus fitted.
inline SummaryReport run_disc_stats(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const auto model = p.model();
  const auto degrees = detail::degree_list(p, "degrees", 2);
  const bool real_roots = p.flag("real_roots");

  struct Sample {
    bool degenerate = true;
    unsigned long v2 = 0;
    bool square = false;
    int sign = 0;
    double log_abs = 0;
  };
  struct Row {
    std::uint64_t degenerate = 0, squares = 0, positive = 0, negative = 0, checked = 0;
    std::map<unsigned long, std::uint64_t> v2;
    double mean = 0, var = 0;
  };

  std::vector<Row> rows;
  for (int n : degrees) {
    const auto samples = run_trials<Sample>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "n=" + std::to_string(n)),
        [&](RandomStream& s, std::uint64_t) {
          const auto f = sample_int_poly(n, model, s);
          Sample out;
          const auto rep = analyze_discriminant(f, false);
          if (rep.degenerate()) return out;
          // Squarefree here, so the sign identity check inside is well defined.
          if (real_roots) analyze_discriminant(f, true);
          out.degenerate = false;
          out.v2 = *rep.v2;
          out.square = rep.is_square;
          out.sign = rep.sign;
          long exp = 0;
          const double mant = mpz_get_d_2exp(&exp, rep.disc.get_mpz_t());
          out.log_abs = std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
          return out;
        });
    Row row;
    double sum = 0;
    for (const auto& s : samples) {
      if (s.degenerate) {
        ++row.degenerate;
        continue;
      }
      ++row.v2[s.v2];
      row.squares += s.square;
      (s.sign > 0 ? row.positive : row.negative) += 1;
      sum += s.log_abs;
    }
    const auto good = trials - row.degenerate;
    if (real_roots) row.checked = good;
    if (good > 0) {
      row.mean = sum / static_cast<double>(good);
      double sq = 0;
      for (const auto& s : samples)
        if (!s.degenerate) sq += (s.log_abs - row.mean) * (s.log_abs - row.mean);
      row.var = good > 1 ? sq / static_cast<double>(good - 1) : 0.0;
    }
    rows.push_back(std::move(row));
  }

  std::vector<double> xs, means, vars;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    xs.push_back(degrees[i]);
    means.push_back(rows[i].mean);
    vars.push_back(rows[i].var);
  }
  const auto mean_fit = fit_line(xs, means);
  const auto var_fit = fit_line(xs, vars);

  auto report = detail::start_report(
      cfg, p,
      {"n", "trials", "degenerate", "squares", "positive", "negative", "v2_min", "v2_max", "v2_histogram", "log_mean",
       "log_var", "sign_checked", "mean_fit_residual", "var_fit_residual", "mean_slope", "mean_intercept", "mean_r2",
       "var_slope", "var_intercept", "var_r2"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const Cell v2_min = row.v2.empty() ? Cell(std::string("-")) : detail::i64(row.v2.begin()->first);
    const Cell v2_max = row.v2.empty() ? Cell(std::string("-")) : detail::i64(row.v2.rbegin()->first);
    report.add_row({detail::i64(degrees[i]), detail::i64(trials), detail::i64(row.degenerate),
                    detail::i64(row.squares), detail::i64(row.positive), detail::i64(row.negative), v2_min, v2_max,
                    detail::histogram_text(row.v2), row.mean, row.var, detail::i64(row.checked),
                    row.mean - mean_fit.at(xs[i]), row.var - var_fit.at(xs[i]), mean_fit.slope, mean_fit.intercept,
                    mean_fit.r_squared, var_fit.slope, var_fit.intercept, var_fit.r_squared});
  }
  return report;
}

// Progression step of the allowed 2-adic valuations for the +-1 model at
// n = 1 mod 4: v2 lies in {n-1, n-1+jump, n-1+2 jump, ...}. Jump 0 marks
// degrees where only n-1 occurs. nullopt for degrees outside the table.
inline std::optional<int> table1_jump(int n) {
  static const std::map<int, int> jumps{
      {9, 4},  {13, 3}, {17, 2}, {21, 10}, {25, 12}, {29, 2}, {33, 8}, {37, 0}, {41, 1}, {45, 11},
      {49, 4}, {53, 2}, {57, 0}, {61, 5},  {65, 2},  {69, 1}, {73, 0}, {77, 2}, {81, 0}, {85, 14},
      {89, 2}, {93, 0}, {97, 3},
  };
  const auto it = jumps.find(n);
  if (it == jumps.end()) return std::nullopt;
  return it->second;
}

// True when v2 is consistent with the tabulated progression for n.
inline bool table1_allows(int n, unsigned long v2, int jump) {
  const auto base = static_cast<unsigned long>(n - 1);
  if (v2 < base) return false;
  if (jump == 0) return v2 == base;
  return (v2 - base) % static_cast<unsigned long>(jump) == 0;
}

// Longest run of consecutive integers in the set.
inline int longest_consecutive_run(const std::set<unsigned long>& values) {
  int best = 0, run = 0;
  std::optional<unsigned long> prev;
  for (auto v : values) {
    run = prev && v == *prev + 1 ? run + 1 : 1;
    best = std::max(best, run);
    prev = v;
  }
  return best;
}

// Columns: n, trials, degenerate, observed_v2, inferred_jump, table_jump,
// consecutive_run, violations. observed_v2 is "a;b;c". inferred_jump is the
// gcd of pairwise differences (0 with a single observed value). violations
// counts samples whose v2 breaks the tabulated progression.
inline SummaryReport run_table1_scan(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const auto degrees = detail::degree_list(p, "degrees", 5);
  for (int n : degrees) {
    if (n % 4 != 1) throw ConfigError("table1_scan: degree " + std::to_string(n) + " is not 1 mod 4");
    if (!table1_jump(n)) throw ConfigError("table1_scan: degree " + std::to_string(n) + " has no tabulated jump");
  }

  auto report = detail::start_report(cfg, p,
                                     {"n", "trials", "degenerate", "observed_v2", "inferred_jump", "table_jump",
                                      "consecutive_run", "violations"});
  for (int n : degrees) {
    const int jump = *table1_jump(n);
    const auto v2s = run_trials<std::optional<unsigned long>>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "n=" + std::to_string(n)),
        [&](RandomStream& s, std::uint64_t) { return analyze_discriminant(sample_int_poly(n, PlusMinusOne{}, s), false).v2; });
    std::set<unsigned long> observed;
    std::uint64_t degenerate = 0, violations = 0;
    for (const auto& v : v2s) {
      if (!v) {
        ++degenerate;
        continue;
      }
      observed.insert(*v);
      if (!table1_allows(n, *v, jump)) ++violations;
    }
    unsigned long g = 0;
    if (!observed.empty())
      for (auto v : observed) g = std::gcd(g, v - *observed.begin());
    std::string text;
    for (auto v : observed) text += (text.empty() ? "" : ";") + std::to_string(v);
    report.add_row({detail::i64(n), detail::i64(trials), detail::i64(degenerate), text.empty() ? "-" : text,
                    detail::i64(g), detail::i64(jump), detail::i64(longest_consecutive_run(observed)),
                    detail::i64(violations)});
  }
  return report;
}

// Columns: n, trials, square_count, singular_count, frequency, ci_radius.
inline SummaryReport run_det_square(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const auto dims = detail::degree_list(p, "dims", 1);

  auto report =
      detail::start_report(cfg, p, {"n", "trials", "square_count", "singular_count", "frequency", "ci_radius"});
  for (int n : dims) {
    // Bit 0: square, bit 1: singular.
    const auto flags = run_trials<unsigned char>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "n=" + std::to_string(n)),
        [&](RandomStream& s, std::uint64_t) {
          const BigInt d = det_exact(sample_matrix(n, s));
          return static_cast<unsigned char>((is_perfect_square(d) ? 1 : 0) | (d == 0 ? 2 : 0));
        });
    SquareFrequency f{n, trials, 0, 0};
    for (auto b : flags) {
      f.squares += b & 1;
      f.singular += (b >> 1) & 1;
    }
    report.add_row({detail::i64(n), detail::i64(trials), detail::i64(f.squares), detail::i64(f.singular),
                    f.frequency(), f.ci_radius()});
  }
  return report;
}

// Columns: n, k, trials, window, window_freq, window_ci, lambda_window,
// lambda_window_freq, lambda_window_ci, double_divisor_freq,
// rough_cycle_freq, many_small_cycles_freq.
//
// Each trial draws four permutations. window: some l in [k, 2k] is a
// subset sum of cycle lengths of all four. lambda_window: the same with
// each permutation allowed to hit any of l - lambda, ..., l. The remaining
// events are evaluated on the first permutation: two cycle lengths share a
// divisor above double_threshold; a cycle length in [n^a, n^b] has a prime
// factor above prime_floor; at least (1 + epsilon) ln k cycles shorter
// than k.
inline SummaryReport run_cycle_events(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const long n = p.integer("n");
  if (n < 2 || n > 1000000) throw ConfigError("cycle_events: n must be in [2, 10^6]");
  const auto ks = p.list("ks");
  for (long k : ks)
    if (k < 1 || 2 * k >= n) throw ConfigError("cycle_events: k=" + std::to_string(k) + " needs 1 <= k < n/2");
  const long lambda = p.integer("lambda");
  if (lambda < 0) throw ConfigError("lambda must be >= 0");
  const int ni = static_cast<int>(n);
  const long threshold = p.is_auto("double_threshold") ? log_cubed_floor(ni) : p.integer("double_threshold");
  if (threshold < 1) throw ConfigError("double_threshold must be >= 1");
  const double a = p.number("rough_a");
  const double b = p.number("rough_b");
  if (!(0.0 <= a && a < b && b <= 1.0)) throw ConfigError("need 0 <= rough_a < rough_b <= 1");
  const long prime_floor = p.is_auto("prime_floor") ? log_cubed_floor(ni) : p.integer("prime_floor");
  if (prime_floor < 0) throw ConfigError("prime_floor must be >= 0");
  const double epsilon = p.number("epsilon");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw ConfigError("epsilon must be in (0, 1/2)");

  auto report = detail::start_report(
      cfg, p,
      {"n", "k", "trials", "window", "window_freq", "window_ci", "lambda_window", "lambda_window_freq",
       "lambda_window_ci", "double_divisor_freq", "rough_cycle_freq", "many_small_cycles_freq"});
  for (long k : ks) {
    const int ki = static_cast<int>(k);
    const double many = (1.0 + epsilon) * std::log(static_cast<double>(k));
    const auto flags = run_trials<unsigned char>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "k=" + std::to_string(k)),
        [&](RandomStream& s, std::uint64_t) {
          std::vector<DegreeSet> sums, widened;
          DegreeMultiset first;
          for (int i = 0; i < 4; ++i) {
            const auto ct = cycle_type(sample_permutation(ni, s));
            if (i == 0) first = ct;
            sums.push_back(achievable_sums(ct));
            widened.push_back(widen(sums.back(), static_cast<int>(lambda)));
          }
          long short_cycles = 0;
          for (auto [len, m] : first.counts())
            if (len < ki) short_cycles += m;
          unsigned char out = 0;
          if (window_hit(sums, ki)) out |= 1;
          if (window_hit(widened, ki)) out |= 2;
          if (has_double_divisor(first, static_cast<int>(threshold))) out |= 4;
          if (has_rough_cycle(first, a, b, static_cast<int>(prime_floor))) out |= 8;
          if (static_cast<double>(short_cycles) >= many) out |= 16;
          return out;
        });
    std::uint64_t counts[5] = {0, 0, 0, 0, 0};
    for (auto f : flags)
      for (int bit = 0; bit < 5; ++bit) counts[bit] += (f >> bit) & 1;
    const Frequency window{counts[0], trials}, widened{counts[1], trials};
    const auto freq = [&](int bit) { return Frequency{counts[bit], trials}.value(); };
    report.add_row({detail::i64(n), detail::i64(k), detail::i64(trials), detail::i64(window.hits), window.value(),
                    window.radius(), detail::i64(widened.hits), widened.value(), widened.radius(), freq(2), freq(3),
                    freq(4)});
  }
  return report;
}

inline constexpr int kOracleRateMaxDegree = 10;

// Columns: n, d, trials, witness_hits, witness_rate, witness_ci,
// oracle_hits, oracle_rate. The witness rate counts samples whose sieve
// witness holds some degree in [1, d]; for n <= 10 the oracle columns count
// samples with a true divisor of degree <= d ("-" otherwise).
inline SummaryReport run_small_divisor_rate(const ExperimentConfig& cfg) {
  const Params p(cfg.resolved());
  const int workers = detail::checked_workers(cfg);
  const auto trials = p.positive("trials");
  const auto primes = p.primes("primes");
  const auto model = p.model();
  const auto degrees = detail::degree_list(p, "degrees", 2);
  std::vector<int> bounds;
  for (long d : p.list("bounds")) {
    if (d < 0) throw ConfigError("bounds must be >= 0");
    bounds.push_back(static_cast<int>(std::min<long>(d, 100000)));
  }

  struct Sample {
    int witness_min = 0;  // smallest witness degree in (0, n], n if none below
    int oracle_min = 0;   // smallest true divisor degree, n if irreducible
  };

  auto report = detail::start_report(
      cfg, p, {"n", "d", "trials", "witness_hits", "witness_rate", "witness_ci", "oracle_hits", "oracle_rate"});
  for (int n : degrees) {
    const bool with_oracle = n <= kOracleRateMaxDegree;
    const auto samples = run_trials<Sample>(
        trials, workers, cfg.master_seed, detail::cell_label(cfg, "n=" + std::to_string(n)),
        [&](RandomStream& s, std::uint64_t) {
          const auto f = sample_int_poly(n, model, s);
          const auto v = degree_sieve_certify(f, primes);
          Sample out{n, n};
          for (int d = 1; d < n; ++d)
            if (v.witness.test(static_cast<std::size_t>(d))) {
              out.witness_min = d;
              break;
            }
          if (with_oracle) out.oracle_min = oracle_smallest_divisor_degree(f).value_or(n);
          return out;
        });
    for (int d : bounds) {
      Frequency witness{0, trials}, oracle{0, trials};
      for (const auto& s : samples) {
        if (d >= 1 && s.witness_min <= d && s.witness_min < n) ++witness.hits;
        if (d >= 1 && s.oracle_min <= d && s.oracle_min < n) ++oracle.hits;
      }
      ensure(!with_oracle || oracle.hits <= witness.hits, "small_divisor_rate: oracle rate exceeds witness rate");
      report.add_row({detail::i64(n), detail::i64(d), detail::i64(trials), detail::i64(witness.hits), witness.value(),
                      witness.radius(), with_oracle ? detail::i64(oracle.hits) : Cell(std::string("-")),
                      with_oracle ? Cell(oracle.value()) : Cell(std::string("-"))});
    }
  }
  return report;
}

inline SummaryReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SummaryReport report;
  switch (cfg.experiment) {
    case Experiment::IrreducibilityRate: report = run_irreducibility_rate(cfg); break;
    case Experiment::TvDistance: report = run_tv_distance(cfg); break;
    case Experiment::DistributionAudit: report = run_distribution_audit(cfg); break;
    case Experiment::DiscStats: report = run_disc_stats(cfg); break;
    case Experiment::Table1Scan: report = run_table1_scan(cfg); break;
    case Experiment::DetSquare: report = run_det_square(cfg); break;
    case Experiment::CycleEvents: report = run_cycle_events(cfg); break;
    case Experiment::SmallDivisorRate: report = run_small_divisor_rate(cfg); break;
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace randpoly::harness
