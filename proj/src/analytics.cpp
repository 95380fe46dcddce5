#include "qmt/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmt/search.hpp"
#include "qmt/special.hpp"

namespace qmt {

namespace {

void check_counts(std::uint64_t N, std::uint64_t M) {
  if (N == 0 || M > N) {
    throw std::invalid_argument("need 0 <= M <= N, N >= 1");
  }
}

double inverse_snr(double snr) {
  if (!(snr > 0.0)) {
    throw std::invalid_argument("SNR must be positive or +inf");
  }
  return 1.0 / snr;
}

// Below this cos^2(R theta + theta/2) is treated as an exact zero; it only
// arises from rounding at M = N/4 (true value 0, computed ~1e-32).
constexpr double kCosineZero = 1e-14;

}  // namespace

double p_brute(std::uint64_t N, std::uint64_t M, double snr) {
  check_counts(N, M);
  const double inv = inverse_snr(snr);
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  return (m / n + m * inv) / (1.0 + 2.0 * n * inv);
}

double p_subspace(std::uint64_t N, std::uint64_t M, double snr) {
  check_counts(N, M);
  const double inv = inverse_snr(snr);
  if (M == 0) {
    return 0.0;
  }
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  return (m / n + m * inv) / (m / n + n * inv);
}

double p_grover(std::uint64_t N, std::uint64_t M, double snr) {
  check_counts(N, M);
  const double inv = inverse_snr(snr);
  const GroverPlan plan = grover_plan(N, M);
  const double R = static_cast<double>(plan.iterations);
  const double amp = std::sin(R * plan.theta + 0.5 * plan.theta);
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  return (amp * amp + m * R * inv) / (1.0 + 2.0 * n * R * inv);
}

MethodCurvePoint method_curve_point(std::uint64_t N, std::uint64_t M, double snr) {
  MethodCurvePoint pt;
  pt.N = N;
  pt.M = M;
  pt.snr = snr;
  pt.p_b = p_brute(N, M, snr);
  pt.p_s = p_subspace(N, M, snr);
  pt.p_g = p_grover(N, M, snr);
  pt.plan = grover_plan(N, M);
  pt.P_b = repeated_success_probability(pt.p_b, static_cast<double>(N));
  pt.P_s = repeated_success_probability(pt.p_s, static_cast<double>(N));
  pt.P_s_grover_budget =
      repeated_success_probability(pt.p_s, static_cast<double>(pt.plan.iterations + 1));
  return pt;
}

Crossover crossover_snr(std::uint64_t N, std::uint64_t M) {
  check_counts(N, M);
  Crossover c;
  if (M == 0 || M == N) {
    c.kind = CrossoverKind::equal_everywhere;
    return c;
  }
  const GroverPlan plan = grover_plan(N, M);
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  const double R = static_cast<double>(plan.iterations);
  const double phase = R * plan.theta + 0.5 * plan.theta;
  const double cos2 = std::cos(phase) * std::cos(phase);
  const double sin2 = std::sin(phase) * std::sin(phase);

  // p_S > p_G  <=>  M cos^2 S^4 - b S^2 + M N^2 R > 0.
  c.b = n * n * sin2 - m * (2.0 * n * R + n - m * R);
  c.constant = m * n * n * R;
  c.quadratic = cos2 < kCosineZero ? 0.0 : m * cos2;

  if (c.quadratic == 0.0) {
    if (c.b > 0.0) {
      c.kind = CrossoverKind::linear_threshold;
      c.lower = c.constant / c.b;
    } else {
      c.kind = CrossoverKind::always_ps_ge;
    }
    return c;
  }
  const double disc = c.b * c.b - 4.0 * c.quadratic * c.constant;
  if (c.b > 0.0 && disc > 0.0) {
    const double root = std::sqrt(disc);
    c.kind = CrossoverKind::interval;
    // Larger root directly; smaller one via the product of roots to avoid
    // cancellation when 4 a c << b^2.
    c.upper = (c.b + root) / (2.0 * c.quadratic);
    c.lower = c.constant / (c.quadratic * c.upper);
    return c;
  }
  c.kind = CrossoverKind::always_ps_ge;
  return c;
}

Moments rician_mean_var(std::uint64_t N, std::uint64_t M, double s, double sigma2, double T) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("rician_mean_var requires sigma2 > 0");
  }
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  const double sigma = std::sqrt(sigma2);
  Moments out;
  out.mean = n * sigma / (2.0 * s) * std::sqrt(std::numbers::pi / T) *
             laguerre_half(-(m * m * s * s * T) / (n * n * sigma2));
  out.variance = std::max(0.0, n * n * sigma2 / (s * s * T) + m * m - out.mean * out.mean);
  return out;
}

double count_estimate_pmf(std::uint64_t m, std::uint64_t N, std::uint64_t M, double s,
                          double sigma2, double T) {
  if (sigma2 == 0.0) {
    return m == M ? 1.0 : 0.0;
  }
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("sigma2 must be non-negative");
  }
  const double n = static_cast<double>(N);
  // Per-quadrature standard deviation of M~.
  const double tau = n * std::sqrt(sigma2 / (2.0 * s * s * T));
  const double a = static_cast<double>(M) / tau;
  const double md = static_cast<double>(m);
  const double lower = m == 0 ? 0.0 : (md - 0.5) / tau;
  const double upper = (md + 0.5) / tau;
  return std::max(0.0, marcum_q1(a, lower) - marcum_q1(a, upper));
}

}  // namespace qmt
