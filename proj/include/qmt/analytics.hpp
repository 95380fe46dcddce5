#pragma once

#include <cstdint>

#include "qmt/gates.hpp"

namespace qmt {

// Closed-form success probabilities. Every function takes the SNR
// S^2 = s^2 T / sigma^2 directly; snr = +inf is the noiseless oracle.

/// Brute force: (M/N + M/S^2) / (1 + 2N/S^2).
double p_brute(std::uint64_t N, std::uint64_t M, double snr);

/// Subspace projection: (M/N + M/S^2) / (M/N + N/S^2) for M >= 1, else 0.
double p_subspace(std::uint64_t N, std::uint64_t M, double snr);

/// Grover: (sin^2(R theta + theta/2) + M R/S^2) / (1 + 2 N R/S^2).
double p_grover(std::uint64_t N, std::uint64_t M, double snr);

struct MethodCurvePoint {
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double snr = 0.0;
  double p_b = 0.0;
  double p_s = 0.0;
  double p_g = 0.0;
  /// 1 - (1 - p)^N for brute force and subspace.
  double P_b = 0.0;
  double P_s = 0.0;
  /// 1 - (1 - p_s)^{R+1}: subspace repeated with Grover's oracle budget.
  double P_s_grover_budget = 0.0;
  GroverPlan plan;
};

MethodCurvePoint method_curve_point(std::uint64_t N, std::uint64_t M, double snr);

enum class CrossoverKind {
  /// p_S = p_G for every SNR (M = 0 or M = N).
  equal_everywhere,
  /// p_S >= p_G for every SNR.
  always_ps_ge,
  /// p_S > p_G below threshold, p_S < p_G above it.
  linear_threshold,
  /// p_S < p_G exactly on (lower, upper).
  interval,
};

struct Crossover {
  CrossoverKind kind = CrossoverKind::always_ps_ge;
  /// Threshold S_0^2 (linear_threshold) or S_-^2 (interval).
  double lower = 0.0;
  /// S_+^2 (interval).
  double upper = 0.0;
  /// Coefficients of M cos^2 S^4 - b S^2 + M N^2 R.
  double quadratic = 0.0;
  double b = 0.0;
  double constant = 0.0;
};

/// Classifies where p_subspace and p_grover cross as functions of S^2.
Crossover crossover_snr(std::uint64_t N, std::uint64_t M);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of |M~|, which is Rician with location M and total
/// complex variance N^2 sigma2 / (s^2 T).
Moments rician_mean_var(std::uint64_t N, std::uint64_t M, double s, double sigma2, double T);

/// Pr[M^ = m] = Pr[m - 1/2 <= |M~| < m + 1/2].
double count_estimate_pmf(std::uint64_t m, std::uint64_t N, std::uint64_t M, double s,
                          double sigma2, double T);

}  // namespace qmt
