#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/search.hpp"

namespace qmt {

struct ExperimentConfig {
  int n = 4;
  /// Explicit solution set; when empty, num_solutions values are placed at
  /// random (without replacement) from base_seed.
  std::vector<std::uint64_t> solutions;
  std::optional<std::uint64_t> num_solutions;
  std::vector<double> snr_grid;
  std::uint64_t trials = 1000;
  std::vector<Method> methods{Method::brute, Method::subspace, Method::grover};
  std::uint64_t base_seed = 20161210;
  double alpha = 0.05;
  unsigned workers = 1;
  std::string out_path;

  /// Throws std::invalid_argument when the config violates its invariants.
  void validate() const;
  /// The problem instance this config describes.
  OracleSpec oracle() const;
};

/// Log-spaced grid of `count` points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Parses `log:<lo>:<hi>:<count>` or a comma list; `inf` is accepted.
std::vector<double> parse_grid(const std::string& text);

/// Comma-separated unsigned integers.
std::vector<std::uint64_t> parse_index_list(const std::string& text);

/// 12 significant digits; +inf as `inf`.
std::string format_real(double v);

struct SweepRow {
  Method method = Method::brute;
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double snr = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double p_theory = 0.0;
  std::uint64_t oracle_calls = 0;
  bool degenerate = false;

  bool theory_in_ci() const { return p_theory >= ci_lo && p_theory <= ci_hi; }
};

struct SweepResult {
  std::vector<SweepRow> rows;

  /// Fraction of rows whose theory value lies inside the confidence interval.
  double coverage() const;
};

inline constexpr const char* kSweepHeader =
    "method,n,N,M,snr,trials,successes,p_hat,ci_lo,ci_hi,p_theory,oracle_calls,degenerate";

/// Closed-form success probability for one method.
double theory_probability(Method method, std::uint64_t N, std::uint64_t M, double snr);

/// Monte Carlo sweep over config.snr_grid for every method in config.methods.
/// The result is independent of config.workers.
SweepResult run_sweep(const ExperimentConfig& config);

/// run_sweep with defaults filled in: N = 16, M = 3, 1000 trials and a
/// 12-point grid from 1e-2 to 1e4 unless the config sets them.
SweepResult run_fig1(ExperimentConfig config);

void write_sweep_csv(std::ostream& os, const SweepResult& result);

struct Fig2Row {
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double snr = 0.0;
  std::uint64_t R = 0;
  double p_g = 0.0;
  double p_s = 0.0;
  /// 1 - (1 - p_s)^{R+1}.
  double P_s = 0.0;
  /// p_g / P_s, with 0/0 defined as 1.
  double ratio = 1.0;
  bool degenerate = false;
};

inline constexpr const char* kFig2Header = "n,N,M,snr,R,p_g,p_s,P_s,ratio,degenerate";

/// Analytic ratio p_G / P_S for every n in [1, max_n], 0 <= M <= 2^n.
std::vector<Fig2Row> run_fig2(int max_n, const std::vector<double>& snr_grid);

void write_fig2_csv(std::ostream& os, const std::vector<Fig2Row>& rows);

struct CountRow {
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double snr = 0.0;
  std::uint64_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t count = 0;
  double p_hat = 0.0;
  double p_theory = 0.0;
  /// Total variation distance of the whole snr point, repeated per row.
  double tv_distance = 0.0;
  double mean_abs = 0.0;
  double mean_theory = 0.0;
  double var_abs = 0.0;
  double var_theory = 0.0;
  /// Standard error of the sample mean of |M~|.
  double mean_stderr = 0.0;
};

inline constexpr const char* kCountHeader =
    "n,N,M,snr,m,trials,count,p_hat,p_theory,tv_distance,mean_abs,mean_theory,var_abs,"
    "var_theory,mean_stderr";

/// Empirical distribution of the rounded count estimate next to its
/// closed form, per SNR point.
std::vector<CountRow> run_count_experiment(const ExperimentConfig& config);

void write_count_csv(std::ostream& os, const std::vector<CountRow>& rows);

struct ValidationCase {
  std::string name;
  double max_discrepancy = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCase> cases;
  double max_discrepancy = 0.0;
  double tolerance = 1e-9;
  bool passed() const { return max_discrepancy < tolerance; }
};

struct ValidationOptions {
  int max_n = 4;
  std::uint64_t seed = 7;
  /// Perturb one sample of every signal-side result by this amount (0 = off).
  double corruption = 0.0;
};

/// Runs the noiseless corpus (preparation, oracles, projection) through the
/// amplitude and signal engines and compares the resulting amplitudes.
ValidationReport run_validate_signal(const ValidationOptions& options);

void write_validation_report(std::ostream& os, const ValidationReport& report);

struct ExtractRow {
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double snr = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t exact = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double mean_iterations = 0.0;
};

inline constexpr const char* kExtractHeader =
    "n,N,M,snr,trials,exact,p_hat,ci_lo,ci_hi,mean_iterations";

/// Repeated runs of the full extraction loop; `exact` counts runs that
/// returned precisely the planted set.
std::vector<ExtractRow> run_extract(const ExperimentConfig& config, std::uint64_t max_iters);

void write_extract_csv(std::ostream& os, const std::vector<ExtractRow>& rows);

}  // namespace qmt
