#include "qmt/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qmt/errors.hpp"

namespace qmt {

namespace {

// Below this argument the ascending series is summed directly; above it the
// Hankel asymptotic expansion has converged to machine precision.
constexpr double kBesselSeriesLimit = 25.0;

// e^{-z} I_nu(z), nu in {0, 1}, by the ascending series.
double scaled_bessel_series(int nu, double z) {
  const double q = 0.25 * z * z;
  double term = nu == 0 ? 1.0 : 0.5 * z;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
    sum += term;
    if (term < sum * 1e-17) {
      break;
    }
  }
  return sum * std::exp(-z);
}

// e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(nu) / z^k.
double scaled_bessel_asymptotic(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * z);
    if (std::abs(next) >= std::abs(term)) {
      break;
    }
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

double scaled_bessel(int nu, double z) {
  if (!(z >= 0.0)) {
    throw OutOfDomain("scaled Bessel I requires z >= 0");
  }
  if (std::isinf(z)) {
    return 0.0;
  }
  return z < kBesselSeriesLimit ? scaled_bessel_series(nu, z) : scaled_bessel_asymptotic(nu, z);
}

// Q_1 as a Poisson mixture of Poisson CDFs:
//   Q_1(a, b) = sum_k Pois(k; a^2/2) Pr[Pois(b^2/2) <= k].
// Both recursions start from e^{-lambda}, so this is only used while those
// stay well inside the normal double range.
double marcum_q1_series(double a, double b) {
  const double lambda = 0.5 * a * a;
  const double x = 0.5 * b * b;
  double weight = std::exp(-lambda);
  double pois_x = std::exp(-x);
  double cdf_x = pois_x;
  double sum = weight * cdf_x;
  for (int k = 1; k < 100000; ++k) {
    weight *= lambda / k;
    pois_x *= x / k;
    cdf_x = std::min(1.0, cdf_x + pois_x);
    const double contrib = weight * cdf_x;
    sum += contrib;
    if (k > lambda) {
      // Remaining Poisson weights are dominated by a geometric series.
      const double ratio = lambda / (k + 1.0);
      const double tail = weight * ratio / (1.0 - ratio);
      if (tail < 1e-17) {
        break;
      }
    }
  }
  return std::clamp(sum, 0.0, 1.0);
}

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {0.1488743389816312, 0.4333953941292472,
                                            0.6794095682990244, 0.8650633666889845,
                                            0.9739065285171717};
constexpr std::array<double, 5> kGlWeights = {0.2955242247147529, 0.2692667193099963,
                                              0.2190863625159820, 0.1494513491505806,
                                              0.0666713443086881};

template <class F>
double gauss_legendre(F&& f, double lo, double hi, double panel) {
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
  const double h = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      const double dx = 0.5 * h * kGlNodes[i];
      acc += kGlWeights[i] * (f(mid - dx) + f(mid + dx));
    }
    total += 0.5 * h * acc;
  }
  return total;
}

// Direct integration of the Rice density; the integrand
// x exp(-(x - a)^2 / 2) [e^{-ax} I_0(ax)] is a unit-width bump near x = a.
double marcum_q1_quadrature(double a, double b) {
  constexpr double kSpan = 40.0;
  const double hi = std::max(a, b) + kSpan;
  if (b < a - kSpan) {
    // The mass below b is under exp(-800); integrate the complement.
    const double lo = std::max(0.0, a - kSpan);
    auto density = [a](double x) {
      return x * std::exp(-0.5 * (x - a) * (x - a)) * bessel_i0_scaled(a * x);
    };
    const double below = b > lo ? gauss_legendre(density, lo, b, 0.25) : 0.0;
    return std::clamp(1.0 - below, 0.0, 1.0);
  }
  auto density = [a](double x) {
    return x * std::exp(-0.5 * (x - a) * (x - a)) * bessel_i0_scaled(a * x);
  };
  return std::clamp(gauss_legendre(density, b, hi, 0.25), 0.0, 1.0);
}

// log Pr[Bin(n, p) = k].
double binomial_log_pmf(std::uint64_t k, std::uint64_t n, double p) {
  const double nk = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return std::lgamma(nk + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nk - kk + 1.0) +
         kk * std::log(p) + (nk - kk) * std::log1p(-p);
}

// sum_{j=from}^{to} Pr[Bin(n, p) = j], terms generated outward from the
// largest one so that nothing significant underflows.
double binomial_range(std::uint64_t from, std::uint64_t to, std::uint64_t n, double p) {
  if (from > to) {
    return 0.0;
  }
  const double odds = p / (1.0 - p);
  const auto mode = static_cast<std::uint64_t>(std::floor((static_cast<double>(n) + 1.0) * p));
  const std::uint64_t start = std::clamp(std::min(mode, n), from, to);
  const double log_start = binomial_log_pmf(start, n, p);
  double sum = std::exp(log_start);
  double term = sum;
  for (std::uint64_t j = start; j < to; ++j) {
    term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * odds;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  term = std::exp(log_start);
  for (std::uint64_t j = start; j > from; --j) {
    term *= static_cast<double>(j) / static_cast<double>(n - j + 1) / odds;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return std::min(sum, 1.0);
}

template <class F>
double bisect(F&& f, double lo, double hi) {
  // f increasing on [lo, hi]; returns the root of f = 0.
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double bessel_i0_scaled(double z) { return scaled_bessel(0, z); }

double bessel_i1_scaled(double z) { return scaled_bessel(1, z); }

double laguerre_half(double x) {
  if (x > 0.0) {
    throw OutOfDomain("laguerre_half is only provided for x <= 0");
  }
  const double z = -0.5 * x;
  return (1.0 - x) * bessel_i0_scaled(z) - x * bessel_i1_scaled(z);
}

double marcum_q1(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw OutOfDomain("marcum_q1 requires a, b >= 0");
  }
  if (b == 0.0) {
    return 1.0;
  }
  if (std::isinf(b)) {
    return 0.0;
  }
  if (a == 0.0) {
    return std::exp(-0.5 * b * b);
  }
  constexpr double kSeriesLimit = 600.0;
  if (0.5 * a * a < kSeriesLimit && 0.5 * b * b < kSeriesLimit) {
    return marcum_q1_series(a, b);
  }
  return marcum_q1_quadrature(a, b);
}

double binomial_cdf(std::uint64_t k, std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial probability must lie in [0,1]");
  }
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  return binomial_range(0, k, n, p);
}

double binomial_sf(std::uint64_t k, std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial probability must lie in [0,1]");
  }
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return binomial_range(k, n, n, p);
}

std::pair<double, double> clopper_pearson(std::uint64_t k, std::uint64_t n, double alpha) {
  if (n == 0) {
    throw std::invalid_argument("clopper_pearson needs at least one trial");
  }
  if (k > n) {
    throw std::invalid_argument("successes exceed trials");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0,1)");
  }
  const double half = 0.5 * alpha;
  double lo = 0.0;
  double hi = 1.0;
  if (k > 0) {
    // Pr[Bin(n, p) >= k] grows with p.
    lo = bisect([&](double p) { return binomial_sf(k, n, p) - half; }, 0.0, 1.0);
  }
  if (k < n) {
    // Pr[Bin(n, p) <= k] falls with p.
    hi = bisect([&](double p) { return half - binomial_cdf(k, n, p); }, 0.0, 1.0);
  }
  return {lo, hi};
}

}  // namespace qmt
