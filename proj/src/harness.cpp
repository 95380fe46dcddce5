#include "qmt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmt/analytics.hpp"
#include "qmt/noise.hpp"
#include "qmt/random.hpp"
#include "qmt/signal.hpp"
#include "qmt/special.hpp"

namespace qmt {

namespace {

// Stream identifiers beyond the three search methods.
constexpr std::uint64_t kPlacementStream = 100;
constexpr std::uint64_t kCountStream = 101;
constexpr std::uint64_t kExtractStream = 102;

// Runs body(begin, end, slot) over [0, count) split into contiguous chunks,
// one per worker. Callers reduce the per-slot results in slot order, so the
// outcome does not depend on scheduling.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::uint64_t>(count, 1))));
  if (workers == 1) {
    body(std::uint64_t{0}, count, 0U);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : pool) {
    t.join();
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_real(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "Inf") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

std::string format_bool(bool b) { return b ? "1" : "0"; }

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1 || n > 20) {
    throw std::invalid_argument("n must lie in 1..20");
  }
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0,1)");
  }
  for (const double snr : snr_grid) {
    if (!(snr > 0.0)) {
      throw std::invalid_argument("SNR values must be positive or inf");
    }
  }
  const std::uint64_t N = std::uint64_t{1} << n;
  if (!solutions.empty() && num_solutions && *num_solutions != solutions.size()) {
    throw std::invalid_argument("explicit solutions disagree with num_solutions");
  }
  if (num_solutions && *num_solutions > N) {
    throw std::invalid_argument("num_solutions exceeds 2^n");
  }
  // Range and uniqueness of explicit solutions are checked by OracleSpec.
  (void)oracle();
}

OracleSpec ExperimentConfig::oracle() const {
  if (!solutions.empty() || !num_solutions) {
    return OracleSpec(n, solutions);
  }
  const std::uint64_t N = std::uint64_t{1} << n;
  if (*num_solutions > N) {
    throw std::invalid_argument("num_solutions exceeds 2^n");
  }
  std::vector<std::uint64_t> pool(N);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  RandomStream rng(derive_seed(base_seed, kPlacementStream, 0, 0));
  for (std::uint64_t i = 0; i < *num_solutions; ++i) {
    const std::uint64_t j = i + rng.uniform_index(N - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(*num_solutions);
  return OracleSpec(n, std::move(pool));
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || count == 0) {
    throw std::invalid_argument("log grid needs 0 < lo <= hi and count >= 1");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return grid;
}

std::vector<double> parse_grid(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("log:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(t.substr(4));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(trim(item));
    if (parts.size() != 3) {
      throw std::invalid_argument("grid must be log:<lo>:<hi>:<count>");
    }
    const double count = parse_real(parts[2]);
    if (!(count >= 1.0) || count != std::floor(count)) {
      throw std::invalid_argument("grid count must be a positive integer");
    }
    return log_grid(parse_real(parts[0]), parse_real(parts[1]), static_cast<std::size_t>(count));
  }
  std::vector<double> values;
  for (const auto& p : split_commas(t)) {
    const double v = parse_real(p);
    if (!(v > 0.0)) {
      throw std::invalid_argument("grid values must be positive: '" + p + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty grid");
  }
  return values;
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  for (const auto& p : split_commas(text)) {
    if (p.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a non-negative integer: '" + p + "'");
    }
    values.push_back(std::stoull(p));
  }
  return values;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double SweepResult::coverage() const {
  if (rows.empty()) return 1.0;
  const auto inside =
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.theory_in_ci(); });
  return static_cast<double>(inside) / static_cast<double>(rows.size());
}

double theory_probability(Method method, std::uint64_t N, std::uint64_t M, double snr) {
  switch (method) {
    case Method::brute:
      return p_brute(N, M, snr);
    case Method::subspace:
      return p_subspace(N, M, snr);
    case Method::grover:
      return p_grover(N, M, snr);
  }
  throw std::invalid_argument("unknown method");
}

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  const OracleSpec spec = config.oracle();
  const std::uint64_t N = spec.input_dim();
  const std::uint64_t M = spec.num_solutions();

  struct Tally {
    std::uint64_t successes = 0;
    std::uint64_t calls = 0;
    bool degenerate = false;
  };

  SweepResult result;
  for (const Method method : config.methods) {
    const auto method_id = static_cast<std::uint64_t>(method);
    for (std::size_t si = 0; si < config.snr_grid.size(); ++si) {
      const double snr = config.snr_grid[si];
      const NoiseParams params = NoiseParams::from_snr(snr);
      std::vector<Tally> tallies(std::max(1U, config.workers));
      parallel_chunks(config.trials, config.workers,
                      [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
                        Tally t;
                        for (std::uint64_t i = begin; i < end; ++i) {
                          RandomStream rng(derive_seed(config.base_seed, method_id, si, i));
                          const TrialRecord rec = run_trial(method, spec, params, rng);
                          t.successes += rec.success ? 1 : 0;
                          t.calls += rec.oracle_calls;
                          t.degenerate = t.degenerate || rec.degenerate;
                        }
                        tallies[slot] = t;
                      });
      SweepRow row;
      row.method = method;
      row.n = config.n;
      row.N = N;
      row.M = M;
      row.snr = snr;
      row.trials = config.trials;
      for (const auto& t : tallies) {
        row.successes += t.successes;
        row.oracle_calls += t.calls;
        row.degenerate = row.degenerate || t.degenerate;
      }
      row.p_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
      std::tie(row.ci_lo, row.ci_hi) = clopper_pearson(row.successes, row.trials, config.alpha);
      row.p_theory = theory_probability(method, N, M, snr);
      result.rows.push_back(row);
    }
  }
  return result;
}

SweepResult run_fig1(ExperimentConfig config) {
  if (config.solutions.empty() && !config.num_solutions) {
    config.num_solutions = 3;
  }
  if (config.snr_grid.empty()) {
    config.snr_grid = log_grid(1e-2, 1e4, 12);
  }
  return run_sweep(config);
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << kSweepHeader << '\n';
  for (const auto& r : result.rows) {
    os << method_name(r.method) << ',' << r.n << ',' << r.N << ',' << r.M << ','
       << format_real(r.snr) << ',' << r.trials << ',' << r.successes << ','
       << format_real(r.p_hat) << ',' << format_real(r.ci_lo) << ',' << format_real(r.ci_hi)
       << ',' << format_real(r.p_theory) << ',' << r.oracle_calls << ','
       << format_bool(r.degenerate) << '\n';
  }
}

std::vector<Fig2Row> run_fig2(int max_n, const std::vector<double>& snr_grid) {
  if (max_n < 1) {
    throw std::invalid_argument("max_n must be at least 1");
  }
  std::vector<Fig2Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t M = 0; M <= N; ++M) {
      for (const double snr : snr_grid) {
        const MethodCurvePoint pt = method_curve_point(N, M, snr);
        Fig2Row row;
        row.n = n;
        row.N = N;
        row.M = M;
        row.snr = snr;
        row.R = pt.plan.iterations;
        row.p_g = pt.p_g;
        row.p_s = pt.p_s;
        row.P_s = pt.P_s_grover_budget;
        if (row.P_s == 0.0 && row.p_g == 0.0) {
          row.ratio = 1.0;
          row.degenerate = true;
        } else {
          row.ratio = row.p_g / row.P_s;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_fig2_csv(std::ostream& os, const std::vector<Fig2Row>& rows) {
  os << kFig2Header << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.N << ',' << r.M << ',' << format_real(r.snr) << ',' << r.R << ','
       << format_real(r.p_g) << ',' << format_real(r.p_s) << ',' << format_real(r.P_s) << ','
       << format_real(r.ratio) << ',' << format_bool(r.degenerate) << '\n';
  }
}

std::vector<CountRow> run_count_experiment(const ExperimentConfig& config) {
  config.validate();
  const OracleSpec spec = config.oracle();
  const std::uint64_t N = spec.input_dim();
  const std::uint64_t M = spec.num_solutions();

  std::vector<CountRow> rows;
  for (std::size_t si = 0; si < config.snr_grid.size(); ++si) {
    const double snr = config.snr_grid[si];
    const NoiseParams params = NoiseParams::from_snr(snr);
    std::vector<double> magnitudes(config.trials);
    std::vector<std::uint64_t> rounded(config.trials);
    parallel_chunks(config.trials, config.workers,
                    [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                      for (std::uint64_t i = begin; i < end; ++i) {
                        RandomStream rng(derive_seed(config.base_seed, kCountStream, si, i));
                        const CountEstimate est = estimate_solution_count(spec, params, rng);
                        magnitudes[i] = std::abs(est.raw);
                        rounded[i] = est.rounded;
                      }
                    });

    const std::uint64_t max_seen = *std::max_element(rounded.begin(), rounded.end());
    // Cover every observed value and enough of the theoretical tail.
    std::uint64_t m_max = std::max(max_seen, M);
    while (params.sigma2 > 0.0 &&
           count_estimate_pmf(m_max + 1, N, M, params.s, params.sigma2, params.T) > 1e-12) {
      ++m_max;
    }
    std::vector<std::uint64_t> hist(m_max + 1, 0);
    for (const auto r : rounded) ++hist[r];

    const double trials = static_cast<double>(config.trials);
    double mean = 0.0;
    for (const double v : magnitudes) mean += v;
    mean /= trials;
    double var = 0.0;
    for (const double v : magnitudes) var += (v - mean) * (v - mean);
    var = config.trials > 1 ? var / (trials - 1.0) : 0.0;

    Moments theory{static_cast<double>(M), 0.0};
    if (params.sigma2 > 0.0) {
      theory = rician_mean_var(N, M, params.s, params.sigma2, params.T);
    }

    std::vector<CountRow> point;
    double tv = 0.0;
    double theory_mass = 0.0;
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      CountRow row;
      row.n = config.n;
      row.N = N;
      row.M = M;
      row.snr = snr;
      row.m = m;
      row.trials = config.trials;
      row.count = hist[m];
      row.p_hat = static_cast<double>(hist[m]) / trials;
      row.p_theory = count_estimate_pmf(m, N, M, params.s, params.sigma2, params.T);
      theory_mass += row.p_theory;
      tv += std::abs(row.p_hat - row.p_theory);
      row.mean_abs = mean;
      row.mean_theory = theory.mean;
      row.var_abs = var;
      row.var_theory = theory.variance;
      row.mean_stderr = std::sqrt(var / trials);
      point.push_back(row);
    }
    // Theoretical mass beyond m_max has no empirical counterpart.
    tv += std::max(0.0, 1.0 - theory_mass);
    tv *= 0.5;
    for (auto& row : point) {
      row.tv_distance = tv;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_count_csv(std::ostream& os, const std::vector<CountRow>& rows) {
  os << kCountHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.N << ',' << r.M << ',' << format_real(r.snr) << ',' << r.m << ','
       << r.trials << ',' << r.count << ',' << format_real(r.p_hat) << ','
       << format_real(r.p_theory) << ',' << format_real(r.tv_distance) << ','
       << format_real(r.mean_abs) << ',' << format_real(r.mean_theory) << ','
       << format_real(r.var_abs) << ',' << format_real(r.var_theory) << ','
       << format_real(r.mean_stderr) << '\n';
  }
}

namespace {

double max_difference(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

StateVector random_state(int n, RandomStream& rng) {
  StateVector psi(n, 1.0);
  for (auto& a : psi.amplitudes()) a = rng.complex_normal(1.0);
  return psi;
}

std::vector<std::uint64_t> random_solution_set(std::uint64_t N, RandomStream& rng) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t x = 0; x < N; ++x) {
    if (rng.uniform() < 0.5) s.push_back(x);
  }
  return s;
}

}  // namespace

ValidationReport run_validate_signal(const ValidationOptions& options) {
  ValidationReport report;
  RandomStream rng(options.seed);

  auto compare = [&](const std::string& name, const StateVector& expected,
                     SampledWaveform wave) {
    if (options.corruption != 0.0) {
      wave.samples[0] += options.corruption;
    }
    const double d = max_difference(expected, demodulate(wave));
    report.cases.push_back({name, d});
    report.max_discrepancy = std::max(report.max_discrepancy, d);
  };

  for (int n = 1; n <= options.max_n; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const std::size_t rate = default_sample_rate(n);
    const std::string tag = "n=" + std::to_string(n) + " ";

    // Preparation.
    const StateVector init = init_state(n, 1.0);
    compare(tag + "init", init, synthesize(init, rate));
    SampledWaveform wave_uniform = synthesize(init, rate);
    for (int k = 1; k <= n; ++k) wave_uniform = signal_hadamard(wave_uniform, k);
    const StateVector uniform = prepare_uniform(n, 1.0);
    compare(tag + "hadamard layer", uniform, wave_uniform);
    compare(tag + "hadamard on output qubit", hadamard(init, 0),
            signal_hadamard(synthesize(init, rate), 0));

    // Single gates on a generic state.
    const StateVector generic = random_state(n, rng);
    const SampledWaveform wave_generic = synthesize(generic, rate);
    for (int k = 0; k <= n; ++k) {
      compare(tag + "X" + std::to_string(k), x_gate(generic, k), signal_x(wave_generic, k));
      compare(tag + "H" + std::to_string(k), hadamard(generic, k),
              signal_hadamard(wave_generic, k));
    }
    compare(tag + "toffoli", n_fold_toffoli(generic), signal_toffoli(wave_generic));

    // Oracles and projection.
    std::vector<std::vector<std::uint64_t>> sets{{}, {0}, {N - 1}};
    std::vector<std::uint64_t> all(N);
    std::iota(all.begin(), all.end(), std::uint64_t{0});
    sets.push_back(all);
    sets.push_back(random_solution_set(N, rng));
    for (const auto& s : sets) {
      const OracleSpec spec(n, s);
      const std::string label = tag + "oracle M=" + std::to_string(s.size());
      const StateVector after = apply_oracle(uniform, spec);
      const SampledWaveform wave_after = signal_oracle(wave_uniform, spec);
      compare(label + " on uniform", after, wave_after);
      compare(label + " projected", project_output_one(after),
              signal_project_output_one(wave_after));
      compare(label + " on generic", apply_oracle(generic, spec),
              signal_oracle(wave_generic, spec));
    }
    compare(tag + "projection of generic", project_output_one(generic),
            signal_project_output_one(wave_generic));
  }
  return report;
}

void write_validation_report(std::ostream& os, const ValidationReport& report) {
  for (const auto& c : report.cases) {
    os << c.name << ": " << format_real(c.max_discrepancy) << '\n';
  }
  os << "max discrepancy " << format_real(report.max_discrepancy) << " (tolerance "
     << format_real(report.tolerance) << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

std::vector<ExtractRow> run_extract(const ExperimentConfig& config, std::uint64_t max_iters) {
  config.validate();
  const OracleSpec spec = config.oracle();
  std::vector<std::uint64_t> truth(spec.solutions().begin(), spec.solutions().end());
  std::sort(truth.begin(), truth.end());

  std::vector<ExtractRow> rows;
  for (std::size_t si = 0; si < config.snr_grid.size(); ++si) {
    const double snr = config.snr_grid[si];
    const NoiseParams params = NoiseParams::from_snr(snr);
    struct Tally {
      std::uint64_t exact = 0;
      std::uint64_t iterations = 0;
    };
    std::vector<Tally> tallies(std::max(1U, config.workers));
    parallel_chunks(config.trials, config.workers,
                    [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
                      Tally t;
                      for (std::uint64_t i = begin; i < end; ++i) {
                        RandomStream rng(derive_seed(config.base_seed, kExtractStream, si, i));
                        ExtractionResult res =
                            extract_all_solutions(spec, params, rng, max_iters);
                        std::sort(res.solutions.begin(), res.solutions.end());
                        t.exact += res.solutions == truth ? 1 : 0;
                        t.iterations += res.iterations;
                      }
                      tallies[slot] = t;
                    });
    ExtractRow row;
    row.n = config.n;
    row.N = spec.input_dim();
    row.M = spec.num_solutions();
    row.snr = snr;
    row.trials = config.trials;
    std::uint64_t iterations = 0;
    for (const auto& t : tallies) {
      row.exact += t.exact;
      iterations += t.iterations;
    }
    row.p_hat = static_cast<double>(row.exact) / static_cast<double>(row.trials);
    std::tie(row.ci_lo, row.ci_hi) = clopper_pearson(row.exact, row.trials, config.alpha);
    row.mean_iterations = static_cast<double>(iterations) / static_cast<double>(row.trials);
    rows.push_back(row);
  }
  return rows;
}

void write_extract_csv(std::ostream& os, const std::vector<ExtractRow>& rows) {
  os << kExtractHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.N << ',' << r.M << ',' << format_real(r.snr) << ',' << r.trials << ','
       << r.exact << ',' << format_real(r.p_hat) << ',' << format_real(r.ci_lo) << ','
       << format_real(r.ci_hi) << ',' << format_real(r.mean_iterations) << '\n';
  }
}

}  // namespace qmt
