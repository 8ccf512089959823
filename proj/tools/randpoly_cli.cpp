// Command-line front end: one subcommand per experiment plus `certify`
// for batch irreducibility checks.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 capacity error,
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randpoly/harness/experiments.hpp"
#include "randpoly/root_oracle.hpp"
#include "randpoly/sieve.hpp"

namespace {

using namespace randpoly;
using namespace randpoly::harness;

enum ExitCode { kOk = 0, kUsage = 2, kCapacity = 3, kInvariant = 4 };

struct RunOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string out_path;
  std::string format = "csv";
  std::vector<std::string> sets;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

// File first, then --set, then the dedicated flags.
ExperimentConfig build_config(Experiment e, const RunOptions& opt) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  if (!opt.config_path.empty()) apply_config_text(cfg, read_file(opt.config_path));
  std::string overrides;
  for (const auto& s : opt.sets) {
    if (s.find('=') == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    overrides += s + "\n";
  }
  apply_config_text(cfg, overrides);
  if (opt.seed) cfg.master_seed = *opt.seed;
  if (opt.workers) cfg.workers = *opt.workers;
  cfg.resolved();  // reject unknown keys up front
  return cfg;
}

int run_experiment_command(Experiment e, const RunOptions& opt) {
  if (opt.format != "csv" && opt.format != "json") throw ConfigError("--format must be csv or json");
  const auto report = run_experiment(build_config(e, opt));
  write_output(opt.out_path, opt.format == "csv" ? render_csv(report) : render_json(report));
  return kOk;
}

struct CertifyOptions {
  std::string input;
  std::string out_path;
  std::string primes = "2,3,5,7";
  bool oracle = false;
};

// One polynomial per line, constant term first. Output columns: line,
// degree, verdict, candidate_degrees, oracle.
int run_certify(const CertifyOptions& opt) {
  const Params params({{"primes", opt.primes}});
  const auto primes = params.primes("primes");
  std::unique_ptr<std::istream> owned;
  std::istream* in = &std::cin;
  if (!opt.input.empty() && opt.input != "-") {
    owned = std::make_unique<std::ifstream>(opt.input);
    if (!*owned) throw ConfigError("cannot read " + opt.input);
    in = owned.get();
  }
  std::string out = "line,degree,verdict,candidate_degrees,oracle\n";
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto f = IntPoly::parse_text(line);
    if (!f.is_monic() || f.degree() < 2)
      throw UsageError("line " + std::to_string(lineno) + ": need a monic polynomial of degree >= 2");
    const auto v = degree_sieve_certify(f, primes);
    std::string candidates;
    for (int d : v.candidate_degrees()) candidates += (candidates.empty() ? "" : ";") + std::to_string(d);
    std::string oracle = "-";
    if (opt.oracle && f.degree() <= kOracleMaxDegree)
      oracle = oracle_irreducible_small(f) ? "irreducible" : "reducible";
    out += std::to_string(lineno) + "," + std::to_string(f.degree()) + "," + to_string(v.status) + "," +
           (candidates.empty() ? "-" : candidates) + "," + oracle + "\n";
  }
  write_output(opt.out_path, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random polynomial and permutation experiments"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunOptions run;
  std::optional<Experiment> chosen;
  for (auto e : kAllExperiments) {
    auto* sub = app.add_subcommand(std::string(name(e)), "run the " + std::string(name(e)) + " experiment");
    sub->add_option("--config", run.config_path, "key = value config file");
    sub->add_option("--seed", run.seed, "master seed (u64)");
    sub->add_option("--workers", run.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", run.out_path, "output path (default stdout)");
    sub->add_option("--format", run.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--set", run.sets, "parameter override key=value (repeatable)");
    sub->callback([&chosen, e] { chosen = e; });
  }

  CertifyOptions certify;
  bool certify_chosen = false;
  auto* cert = app.add_subcommand("certify", "degree-sieve verdicts for polynomials read one per line");
  cert->add_option("--input", certify.input, "input file (default stdin)");
  cert->add_option("--out", certify.out_path, "output path (default stdout)");
  cert->add_option("--primes", certify.primes, "comma-separated prime set");
  cert->add_flag("--oracle", certify.oracle, "also run the exact small-degree oracle (degree <= 12)");
  cert->callback([&certify_chosen] { certify_chosen = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (certify_chosen) return run_certify(certify);
    return run_experiment_command(*chosen, run);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}
