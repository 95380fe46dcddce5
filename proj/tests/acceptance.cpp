// Acceptance run: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qmt/analytics.hpp"
#include "qmt/errors.hpp"
#include "qmt/harness.hpp"
#include "qmt/noise.hpp"
#include "qmt/search.hpp"
#include "qmt/special.hpp"
#include "test_util.hpp"

namespace {

using namespace qmt;

struct Verdict {
  bool pass = false;
  std::string detail;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

OracleSpec first_m(int n, std::uint64_t M, RandomStream& rng) {
  // M distinct solutions drawn uniformly.
  const std::uint64_t N = std::uint64_t{1} << n;
  std::vector<std::uint64_t> all(N);
  for (std::uint64_t x = 0; x < N; ++x) all[x] = x;
  std::shuffle(all.begin(), all.end(), rng.engine());
  all.resize(M);
  return OracleSpec(n, all);
}

std::uint64_t count_successes(Method method, const OracleSpec& spec, const NoiseParams& p,
                              std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    RandomStream rng(derive_seed(seed, static_cast<std::uint64_t>(method), 0, i));
    hits += run_trial(method, spec, p, rng).success ? 1 : 0;
  }
  return hits;
}

// 1. Monte Carlo sweep against closed forms.
Verdict fig1_coverage() {
  ExperimentConfig c;
  c.workers = 1;
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = run_fig1(c);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double cov = r.coverage();
  return {cov >= 0.93 && secs < 60.0 && r.rows.size() == 36,
          fmt("%zu points, theory inside 95%% CI at %.1f%%, %.2f s", r.rows.size(), cov * 100.0,
              secs)};
}

// 2. p_G / P_S bounded by one.
Verdict fig2_bound() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_fig2(4, log_grid(1e-2, 1e6, 200));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.ratio);
  return {worst <= 1.0 + 1e-12 && secs < 5.0,
          fmt("%zu rows, max ratio %.15g, %.3f s", rows.size(), worst, secs)};
}

// 3. Noiseless exactness. Each method's CIs hold jointly at 95%: every
// configuration is tested at alpha / (number of configurations).
Verdict noiseless_exactness() {
  constexpr std::uint64_t kTrials = 10000;
  struct Rate {
    std::uint64_t N, M, hits;
    double p;
  };
  RandomStream rng(300);
  const NoiseParams p;
  int configs = 0, subspace_bad = 0;
  std::vector<Rate> brute, grover;
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t M = 1; M <= N; ++M) {
      ++configs;
      const OracleSpec spec = first_m(n, M, rng);
      const std::uint64_t seed = 301 + 1000 * n + M;
      if (count_successes(Method::subspace, spec, p, kTrials, seed) != kTrials) ++subspace_bad;
      brute.push_back({N, M, count_successes(Method::brute, spec, p, kTrials, seed),
                       static_cast<double>(M) / static_cast<double>(N)});
      // The success rule for complemented oracles is not defined for M > N/2.
      if (2 * M > N) continue;
      const GroverPlan plan = grover_plan(N, M);
      grover.push_back({N, M, count_successes(Method::grover, spec, p, kTrials, seed),
                        std::pow(std::sin((plan.iterations + 0.5) * plan.theta), 2)});
    }
  }
  std::string misses;
  auto outside = [&](const std::vector<Rate>& rates, double alpha, const char* name) {
    int bad = 0;
    for (const Rate& r : rates) {
      const auto [lo, hi] = clopper_pearson(r.hits, kTrials, alpha);
      if (r.p < lo || r.p > hi) {
        ++bad;
        if (alpha < 0.05) {
          misses += fmt(" %s(N=%llu,M=%llu:%llu)", name, (unsigned long long)r.N,
                        (unsigned long long)r.M, (unsigned long long)r.hits);
        }
      }
    }
    return bad;
  };
  const int brute_nominal = outside(brute, 0.05, "brute");
  const int grover_nominal = outside(grover, 0.05, "grover");
  const int brute_bad = outside(brute, 0.05 / brute.size(), "brute");
  const int grover_bad = outside(grover, 0.05 / grover.size(), "grover");
  return {subspace_bad == 0 && brute_bad == 0 && grover_bad == 0,
          fmt("%d configs; subspace misses %d; outside joint 95%% CI: brute %d/%zu, grover %d/%zu; "
              "outside per-config 95%% CI: brute %d, grover %d",
              configs, subspace_bad, brute_bad, brute.size(), grover_bad, grover.size(),
              brute_nominal, grover_nominal) +
              misses};
}

// 4. Oracle against the direct permutation on every basis state.
Verdict oracle_truth_table() {
  RandomStream rng(400);
  int mismatches = 0, checked = 0;
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    for (int rep = 0; rep < 50; ++rep) {
      const OracleSpec spec(n, testing::random_subset(N, rng));
      for (std::uint64_t x = 0; x < N; ++x) {
        for (int y = 0; y < 2; ++y) {
          const StateVector out = apply_oracle(basis_state(n, 1.0, {x, y}), spec);
          const int fy = y ^ (spec.contains(x) ? 1 : 0);
          const StateVector want = basis_state(n, 1.0, {x, fy});
          ++checked;
          if (testing::max_abs_diff(out, want) != 0.0) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, fmt("%d basis states checked, %d mismatches", checked, mismatches)};
}

// 5. Ensemble fidelity, inverse map and domain.
Verdict fidelity_calculus() {
  constexpr int kDraws = 100000;
  double worst_rel = 0.0;
  for (int n : {2, 4}) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const OracleSpec spec(n, {1});
    const StateVector psi = prepare_uniform(n, 1.0);
    const StateVector ideal = apply_oracle(psi, spec);
    for (double snr : {0.5, 5.0, 50.0}) {
      const NoiseParams p = NoiseParams::from_snr(snr);
      double proj = 0.0, trace = 0.0;
      for (int i = 0; i < kDraws; ++i) {
        RandomStream rng(derive_seed(500, N, static_cast<std::uint64_t>(snr * 10), i));
        const StateVector noisy = noisy_oracle(psi, spec, p, rng);
        proj += std::norm(inner_product(ideal, noisy));
        trace += norm_sq(noisy);
      }
      const double f2_mc = proj / (norm_sq(ideal) * trace);
      const double f2 = std::pow(fidelity(N, p), 2);
      worst_rel = std::max(worst_rel, std::abs(f2_mc / f2 - 1.0));
    }
  }
  // F -> sigma^2 -> F over the reachable range.
  double worst_round = 0.0;
  for (std::uint64_t N : {2u, 16u, 1024u}) {
    const double floor_f = 1.0 / std::sqrt(2.0 * static_cast<double>(N));
    for (int i = 1; i <= 200; ++i) {
      const double F = std::min(1.0, floor_f + (1.0 - floor_f) * i / 200.0);
      NoiseParams p;
      p.sigma2 = sigma2_for_fidelity(N, p.s, p.T, F);
      worst_round = std::max(worst_round, std::abs(fidelity(N, p) - F));
    }
  }
  bool rejects = false;
  try {
    sigma2_for_fidelity(16, 1.0, 2.0 * M_PI, 1.0 / std::sqrt(32.0));
  } catch (const UnreachableFidelity&) {
    rejects = true;
  }
  return {worst_rel < 0.01 && worst_round < 1e-12 && rejects,
          fmt("ensemble F^2 worst rel error %.4f, round trip %.2e, F<=1/sqrt(2N) %s", worst_rel,
              worst_round, rejects ? "rejected" : "accepted")};
}

// 6. Count estimator distribution and moments.
Verdict count_distribution() {
  constexpr int kDraws = 100000;
  double worst_tv = 0.0, worst_mean_z = 0.0, worst_var_z = 0.0;
  for (std::uint64_t M : {0u, 3u}) {
    RandomStream place(600 + M);
    const OracleSpec spec = first_m(4, M, place);
    for (double snr : {25.0, 100.0}) {
      const NoiseParams p = NoiseParams::from_snr(snr);
      std::vector<double> hist(64, 0.0);
      std::vector<double> xs(kDraws);
      for (int i = 0; i < kDraws; ++i) {
        RandomStream rng(derive_seed(601, M, static_cast<std::uint64_t>(snr), i));
        const CountEstimate e = estimate_solution_count(spec, p, rng);
        xs[i] = std::abs(e.raw);
        if (e.rounded >= hist.size()) hist.resize(e.rounded + 1, 0.0);
        hist[e.rounded] += 1.0;
      }
      double tv = 0.0, mass = 0.0;
      for (std::uint64_t m = 0; m < hist.size(); ++m) {
        const double th = count_estimate_pmf(m, 16, M, p.s, p.sigma2, p.T);
        tv += std::abs(hist[m] / kDraws - th);
        mass += th;
      }
      tv = 0.5 * (tv + std::max(0.0, 1.0 - mass));
      double mean = 0.0;
      for (double x : xs) mean += x;
      mean /= kDraws;
      double var = 0.0, m4 = 0.0;
      for (double x : xs) {
        const double d = x - mean;
        var += d * d;
        m4 += d * d * d * d;
      }
      var /= kDraws - 1;
      m4 /= kDraws;
      const Moments th = rician_mean_var(16, M, p.s, p.sigma2, p.T);
      worst_tv = std::max(worst_tv, tv);
      worst_mean_z = std::max(worst_mean_z, std::abs(mean - th.mean) / std::sqrt(var / kDraws));
      worst_var_z = std::max(worst_var_z,
                             std::abs(var - th.variance) / std::sqrt((m4 - var * var) / kDraws));
    }
  }
  return {worst_tv < 0.01 && worst_mean_z < 3.0 && worst_var_z < 3.0,
          fmt("worst TV %.4f, mean %.2f SE, variance %.2f SE", worst_tv, worst_mean_z,
              worst_var_z)};
}

// 7. Crossover structure on a dense grid.
Verdict crossover_structure() {
  const auto grid = log_grid(1e-4, 1e10, 20000);
  const double cell = std::log(grid[1] / grid[0]);
  int low_cases = 0, low_bad = 0, high_cases = 0, high_bad = 0;
  std::string misses;
  for (std::uint64_t N : {8u, 16u, 32u, 64u}) {
    for (std::uint64_t M = 1; M < N; ++M) {
      if (4 * M == N) continue;
      std::vector<double> flips;
      bool ps_below = false;
      double prev = p_subspace(N, M, grid[0]) - p_grover(N, M, grid[0]);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = p_subspace(N, M, grid[i]) - p_grover(N, M, grid[i]);
        if (d < -1e-13) ps_below = true;
        if (i > 0 && (d < 0.0) != (prev < 0.0) && std::abs(d) > 1e-13) flips.push_back(grid[i]);
        if (std::abs(d) > 1e-13) prev = d;
      }
      if (4 * M < N) {
        ++low_cases;
        const Crossover c = crossover_snr(N, M);
        std::vector<double> roots;
        if (c.kind == CrossoverKind::interval) roots = {c.lower, c.upper};
        if (c.kind == CrossoverKind::linear_threshold) roots = {c.lower};
        bool ok = !roots.empty() && roots.size() == flips.size() && c.lower > 1.0;
        for (std::size_t k = 0; ok && k < roots.size(); ++k) {
          ok = std::abs(std::log(flips[k] / roots[k])) <= cell;
        }
        if (!ok) {
          ++low_bad;
          misses += fmt(" low(N=%llu,M=%llu)", (unsigned long long)N, (unsigned long long)M);
        }
      } else {
        ++high_cases;
        if (ps_below) {
          ++high_bad;
          misses += fmt(" high(N=%llu,M=%llu)", (unsigned long long)N, (unsigned long long)M);
        }
      }
    }
  }
  return {low_bad == 0 && high_bad == 0,
          fmt("M<N/4: %d/%d match roots with S_->1; N/4<M<N: %d/%d have p_S>=p_G", low_cases - low_bad,
              low_cases, high_cases - high_bad, high_cases) +
              (misses.empty() ? "" : ";" + misses)};
}

// 8. Amplitude and signal engines agree.
Verdict cross_engine() {
  ValidationOptions o;
  o.max_n = 4;
  const ValidationReport r = run_validate_signal(o);
  return {r.passed() && r.max_discrepancy < 1e-9,
          fmt("%zu cases, max discrepancy %.3e", r.cases.size(), r.max_discrepancy)};
}

// 9. Repeated-trial limits at N = 1e6.
Verdict asymptotic_constants() {
  const std::uint64_t N = 1000000;
  const double nd = static_cast<double>(N);
  const double snr = 1e-9;
  const double brute = repeated_success_probability(p_brute(N, 1, snr), nd);
  const double subspace = repeated_success_probability(p_subspace(N, 1, snr), nd);
  const double eb = std::abs(brute - (1.0 - std::exp(-0.5)));
  const double es = std::abs(subspace - (1.0 - std::exp(-1.0)));
  return {eb < 1e-3 && es < 1e-3,
          fmt("brute %.6f (1-e^-1/2 = %.6f), subspace %.6f (1-e^-1 = %.6f)", brute,
              1.0 - std::exp(-0.5), subspace, 1.0 - std::exp(-1.0))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"fig1 CI coverage", fig1_coverage},
      {"fig2 ratio bound", fig2_bound},
      {"noiseless exactness", noiseless_exactness},
      {"oracle truth table", oracle_truth_table},
      {"fidelity calculus", fidelity_calculus},
      {"count estimator distribution", count_distribution},
      {"crossover structure", crossover_structure},
      {"cross-engine validation", cross_engine},
      {"asymptotic constants", asymptotic_constants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
