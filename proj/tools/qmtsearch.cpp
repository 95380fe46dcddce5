// Command-line front end: Monte Carlo sweeps, analytic curves, count
// distributions, cross-engine validation and solution extraction.

#include <fstream>
#include <iostream>
#include <memory>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmt/harness.hpp"
#include "qmt/noise.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitCheckFailed = 2;

struct Options {
  int n = 4;
  std::string solutions;
  std::optional<std::uint64_t> num_solutions;
  std::string snr;
  std::string fidelity;
  std::uint64_t trials = 0;
  std::uint64_t seed = 20161210;
  double alpha = 0.05;
  std::string methods = "brute,subspace,grover";
  std::string out;
  unsigned workers = 1;
  bool check = false;
  int max_n = 4;
  std::uint64_t max_iters = 0;
  double corrupt = 0.0;
};

std::vector<double> resolve_grid(const Options& o, std::uint64_t N, std::vector<double> fallback) {
  if (!o.snr.empty() && !o.fidelity.empty()) {
    throw std::invalid_argument("--snr and --fidelity are mutually exclusive");
  }
  if (!o.fidelity.empty()) {
    std::vector<double> grid;
    for (const double F : qmt::parse_grid(o.fidelity)) {
      grid.push_back(qmt::snr_for_fidelity(N, F));
    }
    return grid;
  }
  if (!o.snr.empty()) {
    return qmt::parse_grid(o.snr);
  }
  return fallback;
}

qmt::ExperimentConfig make_config(const Options& o, std::uint64_t default_trials,
                                  std::vector<double> default_grid) {
  qmt::ExperimentConfig c;
  c.n = o.n;
  if (!o.solutions.empty()) {
    c.solutions = qmt::parse_index_list(o.solutions);
  }
  c.num_solutions = o.num_solutions;
  c.trials = o.trials > 0 ? o.trials : default_trials;
  c.base_seed = o.seed;
  c.alpha = o.alpha;
  c.workers = o.workers;
  c.out_path = o.out;
  c.methods.clear();
  std::stringstream ss(o.methods);
  std::string m;
  while (std::getline(ss, m, ',')) {
    if (!m.empty()) c.methods.push_back(qmt::parse_method(m));
  }
  if (o.n < 1 || o.n > 20) {
    throw std::invalid_argument("n must lie in 1..20");
  }
  c.snr_grid = resolve_grid(o, std::uint64_t{1} << o.n, std::move(default_grid));
  c.validate();
  return c;
}

// Writes to --out when given, stdout otherwise.
template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open output file " + path);
  }
  write(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal-based quantum search emulator"};
  app.set_config("--config", "", "plain-text key = value file mirroring the flags");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "input qubits");
  app.add_option("--solutions", o.solutions, "comma list of planted solutions");
  app.add_option("--num-solutions", o.num_solutions, "number of randomly placed solutions");
  app.add_option("--snr", o.snr, "SNR grid: comma list (inf allowed) or log:<lo>:<hi>:<count>");
  app.add_option("--fidelity", o.fidelity, "oracle fidelity grid, converted to SNR");
  app.add_option("--trials", o.trials, "Monte Carlo trials per point");
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--alpha", o.alpha, "confidence interval level");
  app.add_option("--methods", o.methods, "comma list of brute,subspace,grover");
  app.add_option("--out", o.out, "output CSV path (default stdout)");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_flag("--check", o.check, "exit 2 when the run's acceptance check fails");

  auto* fig1 = app.add_subcommand("fig1", "success probability vs SNR, N=16 M=3 defaults");
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep for a configured instance");
  auto* fig2 = app.add_subcommand("fig2", "analytic ratio p_G / P_S for every n <= max-n");
  fig2->add_option("--max-n", o.max_n, "largest register width");
  auto* count = app.add_subcommand("count", "distribution of the rounded count estimate");
  auto* validate = app.add_subcommand("validate-signal", "amplitude vs signal engine");
  validate->add_option("--max-n", o.max_n, "largest register width");
  validate->add_option("--corrupt", o.corrupt, "perturb one waveform sample by this much");
  auto* extract = app.add_subcommand("extract", "iterative extraction of all solutions");
  extract->add_option("--max-iters", o.max_iters, "measurement budget (default 2N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (*fig1 || *sweep) {
      qmt::ExperimentConfig config =
          make_config(o, 1000, *fig1 ? qmt::log_grid(1e-2, 1e4, 12) : std::vector<double>{});
      if (config.snr_grid.empty()) {
        throw std::invalid_argument("sweep needs --snr or --fidelity");
      }
      const qmt::SweepResult result = *fig1 ? qmt::run_fig1(config) : qmt::run_sweep(config);
      emit(o.out, [&](std::ostream& os) { qmt::write_sweep_csv(os, result); });
      std::cerr << "theory inside CI at " << result.coverage() * 100.0 << "% of points\n";
      if (o.check && result.coverage() < 0.93) {
        return kExitCheckFailed;
      }
    } else if (*fig2) {
      if (o.max_n < 1 || o.max_n > 20) {
        throw std::invalid_argument("max-n must lie in 1..20");
      }
      const auto grid = o.snr.empty() ? qmt::log_grid(1e-2, 1e6, 200) : qmt::parse_grid(o.snr);
      const auto rows = qmt::run_fig2(o.max_n, grid);
      emit(o.out, [&](std::ostream& os) { qmt::write_fig2_csv(os, rows); });
      double worst = 0.0;
      for (const auto& r : rows) worst = std::max(worst, r.ratio);
      std::cerr << "max p_G/P_S = " << qmt::format_real(worst) << '\n';
      if (o.check && worst > 1.0 + 1e-12) {
        return kExitCheckFailed;
      }
    } else if (*count) {
      qmt::ExperimentConfig config = make_config(o, 100000, {25.0, 100.0});
      const auto rows = qmt::run_count_experiment(config);
      emit(o.out, [&](std::ostream& os) { qmt::write_count_csv(os, rows); });
    } else if (*validate) {
      qmt::ValidationOptions opts;
      opts.max_n = o.max_n;
      opts.seed = o.seed;
      opts.corruption = o.corrupt;
      if (opts.max_n < 1 || opts.max_n > 8) {
        throw std::invalid_argument("max-n must lie in 1..8");
      }
      const auto report = qmt::run_validate_signal(opts);
      emit(o.out, [&](std::ostream& os) { qmt::write_validation_report(os, report); });
      return report.passed() ? kExitOk : kExitCheckFailed;
    } else if (*extract) {
      qmt::ExperimentConfig config = make_config(o, 1000, {std::numeric_limits<double>::infinity()});
      const std::uint64_t budget = o.max_iters > 0 ? o.max_iters : 2 * (std::uint64_t{1} << o.n);
      const auto rows = qmt::run_extract(config, budget);
      emit(o.out, [&](std::ostream& os) { qmt::write_extract_csv(os, rows); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return kExitOk;
}
