#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qmt/analytics.hpp"
#include "qmt/harness.hpp"

namespace qmt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Probabilities, NoiselessLimits) {
  for (std::uint64_t N : {2u, 16u, 256u}) {
    for (std::uint64_t M = 1; M <= N; M += (N / 4 > 0 ? N / 4 : 1)) {
      const double m = static_cast<double>(M), n = static_cast<double>(N);
      EXPECT_NEAR(p_brute(N, M, kInf), m / n, 1e-15);
      EXPECT_DOUBLE_EQ(p_subspace(N, M, kInf), 1.0);
      const GroverPlan plan = grover_plan(N, M);
      const double expect = std::pow(std::sin((plan.iterations + 0.5) * plan.theta), 2);
      EXPECT_NEAR(p_grover(N, M, kInf), expect, 1e-14);
    }
  }
  EXPECT_DOUBLE_EQ(p_grover(4, 1, kInf), 1.0);
}

TEST(Probabilities, HighNoiseLimits) {
  const double snr = 1e-12;
  EXPECT_NEAR(p_brute(16, 3, snr), 3.0 / 32.0, 1e-9);
  EXPECT_NEAR(p_subspace(16, 3, snr), 3.0 / 16.0, 1e-9);
  // Grover tends to M R / (2 N R) = M / (2N) when R > 0.
  EXPECT_NEAR(p_grover(16, 3, snr), 3.0 / 32.0, 1e-9);
}

TEST(Probabilities, EmptyAndFullSets) {
  for (double snr : {0.1, 10.0, kInf}) {
    EXPECT_EQ(p_brute(16, 0, snr), 0.0);
    EXPECT_EQ(p_subspace(16, 0, snr), 0.0);
    EXPECT_EQ(p_grover(16, 0, snr), 0.0);
    EXPECT_NEAR(p_subspace(16, 16, snr), 1.0, 1e-15);
  }
  EXPECT_THROW(p_brute(16, 17, 1.0), std::invalid_argument);
}

TEST(Probabilities, SubspaceDominatesBruteForce) {
  for (std::uint64_t N : {2u, 8u, 64u}) {
    for (std::uint64_t M = 0; M <= N; ++M) {
      for (double snr : log_grid(1e-3, 1e5, 25)) {
        EXPECT_LE(p_brute(N, M, snr), p_subspace(N, M, snr) + 1e-15);
      }
    }
  }
}

TEST(CurvePoint, RepeatedProbabilities) {
  const MethodCurvePoint pt = method_curve_point(16, 3, 5.0);
  EXPECT_NEAR(pt.P_s, 1.0 - std::pow(1.0 - pt.p_s, 16.0), 1e-14);
  EXPECT_NEAR(pt.P_b, 1.0 - std::pow(1.0 - pt.p_b, 16.0), 1e-14);
  EXPECT_NEAR(pt.P_s_grover_budget,
              1.0 - std::pow(1.0 - pt.p_s, static_cast<double>(pt.plan.iterations + 1)), 1e-14);
}

TEST(Crossover, KnownCases) {
  EXPECT_EQ(crossover_snr(16, 0).kind, CrossoverKind::equal_everywhere);
  EXPECT_EQ(crossover_snr(16, 16).kind, CrossoverKind::equal_everywhere);

  const Crossover four = crossover_snr(16, 4);
  ASSERT_EQ(four.kind, CrossoverKind::linear_threshold);
  EXPECT_NEAR(p_subspace(16, 4, four.lower), p_grover(16, 4, four.lower), 1e-12);

  const Crossover one = crossover_snr(16, 1);
  ASSERT_EQ(one.kind, CrossoverKind::interval);
  EXPECT_GT(one.lower, 1.0);
  EXPECT_LT(one.lower, one.upper);
  EXPECT_NEAR(p_subspace(16, 1, one.lower), p_grover(16, 1, one.lower), 1e-12);
  EXPECT_NEAR(p_subspace(16, 1, one.upper), p_grover(16, 1, one.upper), 1e-12);
}

TEST(Crossover, ClassificationAgreesWithGrid) {
  const auto grid = log_grid(1e-4, 1e8, 400);
  for (std::uint64_t N : {4u, 8u, 16u, 32u, 64u}) {
    for (std::uint64_t M = 1; M < N; ++M) {
      const Crossover c = crossover_snr(N, M);
      for (double snr : grid) {
        const double diff = p_subspace(N, M, snr) - p_grover(N, M, snr);
        bool grover_ahead = false;
        switch (c.kind) {
          case CrossoverKind::linear_threshold:
            grover_ahead = snr > c.lower;
            break;
          case CrossoverKind::interval:
            grover_ahead = snr > c.lower && snr < c.upper;
            break;
          default:
            break;
        }
        // Skip points sitting on a boundary.
        if (std::abs(diff) < 1e-12) continue;
        if (c.kind == CrossoverKind::interval &&
            (std::abs(snr / c.lower - 1.0) < 1e-9 || std::abs(snr / c.upper - 1.0) < 1e-9)) {
          continue;
        }
        EXPECT_EQ(diff < 0.0, grover_ahead) << "N=" << N << " M=" << M << " snr=" << snr;
      }
    }
  }
}

TEST(CountPmf, SumsToOne) {
  for (std::uint64_t M : {0u, 1u, 3u, 16u}) {
    for (double snr : {0.5, 4.0, 25.0, 1e4}) {
      const NoiseParams p = NoiseParams::from_snr(snr);
      double total = 0.0;
      for (std::uint64_t m = 0; m < 400; ++m) {
        total += count_estimate_pmf(m, 16, M, p.s, p.sigma2, p.T);
      }
      EXPECT_NEAR(total, 1.0, 1e-9) << M << " " << snr;
    }
  }
  EXPECT_EQ(count_estimate_pmf(3, 16, 3, 1.0, 0.0, 2.0 * M_PI), 1.0);
  EXPECT_EQ(count_estimate_pmf(2, 16, 3, 1.0, 0.0, 2.0 * M_PI), 0.0);
}

TEST(RicianMoments, Limits) {
  // High SNR: mean -> M, variance -> N^2/(2 S^2).
  const NoiseParams p = NoiseParams::from_snr(1e8);
  const Moments m = rician_mean_var(16, 3, p.s, p.sigma2, p.T);
  EXPECT_NEAR(m.mean, 3.0, 1e-6);
  EXPECT_NEAR(m.variance, 256.0 / 2e8, 1e-9);
  // M = 0: Rayleigh with scale tau^2 = N^2/(2 S^2).
  const NoiseParams q = NoiseParams::from_snr(4.0);
  const Moments r = rician_mean_var(16, 0, q.s, q.sigma2, q.T);
  const double tau = std::sqrt(256.0 / 8.0);
  EXPECT_NEAR(r.mean, tau * std::sqrt(M_PI / 2.0), 1e-12);
  EXPECT_NEAR(r.variance, (4.0 - M_PI) / 2.0 * tau * tau, 1e-10);
  EXPECT_THROW(rician_mean_var(16, 3, 1.0, 0.0, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace qmt
