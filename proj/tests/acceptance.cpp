// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned below; sampled criteria use the default
// master seed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "randpoly/distribution.hpp"
#include "randpoly/harness/experiments.hpp"
#include "randpoly/int_poly.hpp"
#include "randpoly/root_oracle.hpp"
#include "randpoly/sieve.hpp"

using namespace randpoly;
using namespace randpoly::harness;

namespace {

constexpr double kSigmaBand = 4.0;  // n = 1 determinant check

struct Outcome {
  bool pass = false;
  std::string detail;
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

ExperimentConfig config(Experiment e, ParamMap params) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  cfg.params = std::move(params);
  cfg.workers = workers();
  return cfg;
}

std::int64_t count(const SummaryReport& r, std::size_t row, const std::string& col) {
  return std::get<std::int64_t>(r.rows.at(row).at(r.column(col)));
}

double number(const SummaryReport& r, std::size_t row, const std::string& col) {
  return std::get<double>(r.rows.at(row).at(r.column(col)));
}

std::string text(const SummaryReport& r, std::size_t row, const std::string& col) {
  return format_cell(r.rows.at(row).at(r.column(col)));
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome formula_vs_exhaustive() {
  int cases = 0;
  for (auto [q, top] : {std::pair{2ULL, 14}, std::pair{3ULL, 9}}) {
    for (int n = 1; n <= top; ++n) {
      if (build_distribution(q, n, LawKind::X).entries != exhaustive_distribution(q, n).entries)
        return {false, "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n)};
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (q, n) pairs equal cell for cell"};
}

Outcome cycle_weight_identities() {
  constexpr int kN = 40;
  std::vector<ExactRational> sums(kN + 1);
  for (int x = 1; x <= kN; ++x) {
    sums[static_cast<std::size_t>(x)] = cycle_weight_sum(x);
    if (sums[static_cast<std::size_t>(x)] != 1) return {false, "weights of x=" + std::to_string(x) + " sum to " + to_string(sums[static_cast<std::size_t>(x)])};
  }
  for (int k = 1; k <= kN; ++k) {
    ExactRational total = 0;
    for (int x = k; x <= kN; ++x) total += sums[static_cast<std::size_t>(x)];
    if (total != kN - k + 1) return {false, "double sum wrong at k=" + std::to_string(k)};
  }
  return {true, "single sums = 1 for x <= 40; double sums = n-k+1 for n = 40"};
}

Outcome alpha_identities() {
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const long ql = static_cast<long>(q);
    const ExactRational a12 = alpha(q, 1, 2);
    if (a12 != make_rational(ql + 1, 2 * ql) || a12 > ExactRational(3, 4))
      return {false, "alpha(1,2) wrong at q=" + std::to_string(q)};
    for (int i = 1; i <= 20; ++i) {
      // -2 q^{-i/2} / i <= alpha(i,1) - 1/i <= 0, squared to stay exact.
      const ExactRational gap = ExactRational(1, i) - alpha(q, i, 1);
      const ExactRational scaled = gap * gap * ExactRational(pow(BigInt(static_cast<unsigned long>(q)), i));
      if (gap < 0 || scaled > make_rational(4, i * i))
        return {false, "bracket fails at q=" + std::to_string(q) + " i=" + std::to_string(i)};
    }
  }
  return {true, "q in {2,3,5,7}, i <= 20"};
}

Outcome tv_regression() {
  // Frozen from an independent exhaustive computation over all 4096 monic
  // degree-12 polynomials over F_2.
  static const char* const kGoldens[] = {
      "42384107/159667200", "42384107/159667200", "362449/2838528", "56841/788480",  "534749/14192640",
      "534749/14192640",    "237529/14192640",    "29407/2027520",  "13567/2027520", "3349/675840",
      "221/135168",         "19/12288",           "0/1",
  };
  for (int r = 1; r <= 13; ++r) {
    const auto got = to_string(tv_distance(2, 12, r));
    if (got != kGoldens[r - 1]) return {false, "r=" + std::to_string(r) + " got " + got};
  }
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL})
    for (int n = 1; n <= 30; ++n)
      if (tv_distance(q, n, n + 1) != 0) return {false, "tv(n+1) nonzero at q=" + std::to_string(q)};
  return {true, "13 goldens match; tv at r = n+1 is 0 for q <= 7, n <= 30"};
}

Outcome sieve_soundness() {
  constexpr std::uint64_t kSamples = 10000;
  const CoefficientModel model = UniformRange{1, 210};
  const auto primes = default_sieve_primes();
  // 1: certified and confirmed, 2: certified but refuted, 0: not certified.
  const auto verdicts = run_trials<int>(kSamples, workers(), kDefaultMasterSeed, "acceptance/sieve_soundness",
                                        [&](RandomStream& s, std::uint64_t i) {
                                          const int n = 2 + static_cast<int>(i % 9);
                                          const auto f = sample_int_poly(n, model, s);
                                          if (degree_sieve_certify(f, primes).status != SieveStatus::Irreducible)
                                            return 0;
                                          return oracle_irreducible_small(f) ? 1 : 2;
                                        });
  const auto certified = std::count_if(verdicts.begin(), verdicts.end(), [](int v) { return v > 0; });
  const auto refuted = std::count(verdicts.begin(), verdicts.end(), 2);
  return {refuted == 0 && certified > 0, std::to_string(certified) + " certified of " + std::to_string(kSamples) +
                                             ", " + std::to_string(refuted) + " refuted by the oracle"};
}

Outcome irreducibility_trend() {
  const auto r = run_experiment(
      config(Experiment::IrreducibilityRate, {{"degrees", "10,40"}, {"trials", "10000"}, {"primes", "2,3,5,7"}}));
  const double p10 = number(r, 0, "rate"), p40 = number(r, 1, "rate");
  const double radii = number(r, 0, "ci_radius") + number(r, 1, "ci_radius");
  return {p40 - p10 > radii, fmt("rate n=10 %.4f, n=40 %.4f, combined radii %.4f", p10, p40, radii)};
}

Outcome discriminant_laws() {
  constexpr std::uint64_t kTrials = 10000;
  struct Sample {
    std::optional<unsigned long> v2;
    bool square = false;
  };
  long violations = 0, checked = 0;
  std::string first;
  for (int n = 4; n <= 31; ++n) {
    const auto samples = run_trials<Sample>(
        kTrials, workers(), kDefaultMasterSeed, "acceptance/disc_laws/n=" + std::to_string(n),
        [&](RandomStream& s, std::uint64_t) {
          const auto rep = analyze_discriminant(sample_int_poly(n, PlusMinusOne{}, s), false);
          return Sample{rep.v2, !rep.degenerate() && rep.is_square};
        });
    for (const auto& s : samples) {
      if (!s.v2) continue;
      ++checked;
      const auto v = *s.v2;
      const auto un = static_cast<unsigned long>(n);
      std::string broken;
      if (n % 2 == 0 && v != 0) broken = "(a) even n with v2 > 0";
      if (n % 2 == 1 && v < un - 1) broken = "(b) odd n with v2 < n-1";
      if ((n % 8 == 2 || n % 8 == 4) && s.square) broken = "(c) square discriminant";
      if (n % 8 == 7 && (v == un || v == un + 2)) broken = "(d) forbidden v2 at n = 7 mod 8";
      if (n % 8 == 3 && (v == un || v == un + 4)) broken = "(d) forbidden v2 at n = 3 mod 8";
      if (!broken.empty()) {
        if (first.empty()) first = broken + " at n=" + std::to_string(n) + " v2=" + std::to_string(v);
        ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " nondegenerate samples over n = 4..31, " +
                               std::to_string(violations) + " violations" + (first.empty() ? "" : "; first " + first)};
}

Outcome table1_spot_checks() {
  const auto r = run_experiment(config(Experiment::Table1Scan, {{"degrees", "9,13,17,41"}, {"trials", "100000"}}));
  long violations = 0;
  std::string detail;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    violations += count(r, i, "violations");
    detail += "n=" + text(r, i, "n") + " v2{" + text(r, i, "observed_v2") + "} ";
  }
  const auto run41 = count(r, 3, "consecutive_run");
  detail += "; n=41 longest consecutive run " + std::to_string(run41) + (run41 >= 3 ? "" : " (reported only)");
  return {violations == 0, std::to_string(violations) + " progression violations; " + detail};
}

Outcome sign_identity() {
  constexpr std::uint64_t kSamples = 1000;
  // Each trial redraws until squarefree; 0 = identity holds, 1 = broken.
  const auto broken = run_trials<int>(kSamples, workers(), kDefaultMasterSeed, "acceptance/sign_identity",
                                      [&](RandomStream& s, std::uint64_t i) {
                                        const int n = 3 + static_cast<int>(i % 13);
                                        for (;;) {
                                          const auto f = sample_int_poly(n, PlusMinusOne{}, s);
                                          const auto rep = analyze_discriminant(f, false);
                                          if (rep.degenerate()) continue;
                                          const int nonreal = n - zpoly::real_root_count(f);
                                          const int expected = (nonreal / 2) % 2 == 0 ? 1 : -1;
                                          return rep.sign == expected ? 0 : 1;
                                        }
                                      });
  const auto bad = std::count(broken.begin(), broken.end(), 1);
  return {bad == 0, std::to_string(kSamples) + " squarefree samples over n = 3..15, " + std::to_string(bad) +
                        " sign mismatches"};
}

Outcome determinant_trend() {
  const auto r = run_experiment(config(Experiment::DetSquare, {{"dims", "1..10"}, {"trials", "100000"}}));
  std::string detail = "freqs";
  bool ok = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) detail += fmt(" %.4f", number(r, i, "frequency"));
  for (std::size_t i = 1; i + 1 < r.rows.size(); ++i) {
    const double rise = number(r, i + 1, "frequency") - number(r, i, "frequency");
    if (rise > number(r, i, "ci_radius") + number(r, i + 1, "ci_radius")) {
      ok = false;
      detail += "; significant increase at n=" + text(r, i + 1, "n");
    }
  }
  const double f1 = number(r, 0, "frequency");
  const double sigma = std::sqrt(0.75 * 0.25 / 100000.0);
  if (std::abs(f1 - 0.75) > kSigmaBand * sigma) {
    ok = false;
    detail += "; n=1 outside 4 sigma of 3/4";
  }
  return {ok, detail};
}

Outcome cycle_window_trend() {
  const auto r = run_experiment(config(Experiment::CycleEvents, {{"n", "256"}, {"ks", "8,16,32,64"}, {"trials", "10000"}}));
  std::string detail = "window freqs";
  bool ok = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) detail += fmt(" %.4f", number(r, i, "window_freq"));
  for (std::size_t i = 0; i + 1 < r.rows.size(); ++i) {
    const double rise = number(r, i + 1, "window_freq") - number(r, i, "window_freq");
    if (rise > number(r, i, "window_ci") + number(r, i + 1, "window_ci")) {
      ok = false;
      detail += "; significant increase at k=" + text(r, i + 1, "k");
    }
  }
  return {ok, detail};
}

Outcome reproducibility() {
  const std::vector<ExperimentConfig> runs{
      config(Experiment::IrreducibilityRate, {{"degrees", "10,20"}, {"trials", "2000"}}),
      config(Experiment::TvDistance, {{"n", "16"}}),
      config(Experiment::DistributionAudit, {{"degrees", "1..10"}}),
      config(Experiment::DiscStats, {{"degrees", "4..15"}, {"trials", "2000"}, {"real_roots", "true"}}),
      config(Experiment::Table1Scan, {{"degrees", "9,13,17"}, {"trials", "2000"}}),
      config(Experiment::DetSquare, {{"dims", "1..8"}, {"trials", "5000"}}),
      config(Experiment::CycleEvents, {{"trials", "2000"}}),
      config(Experiment::SmallDivisorRate, {{"degrees", "8,16"}, {"trials", "2000"}}),
  };
  for (auto cfg : runs) {
    cfg.workers = 1;
    const auto base = render_csv(run_experiment(cfg));
    for (int w : {4, 16}) {
      cfg.workers = w;
      if (render_csv(run_experiment(cfg)) != base)
        return {false, std::string(name(cfg.experiment)) + " differs at workers=" + std::to_string(w)};
    }
  }
  return {true, "all 8 experiments byte-identical at workers 1, 4, 16"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"formula_vs_exhaustive", formula_vs_exhaustive},
      {"cycle_weight_identities", cycle_weight_identities},
      {"alpha_identities", alpha_identities},
      {"tv_regression", tv_regression},
      {"sieve_soundness", sieve_soundness},
      {"irreducibility_trend", irreducibility_trend},
      {"discriminant_laws", discriminant_laws},
      {"table1_spot_checks", table1_spot_checks},
      {"sign_identity", sign_identity},
      {"determinant_trend", determinant_trend},
      {"cycle_window_trend", cycle_window_trend},
      {"reproducibility", reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
