#pragma once

#include <cstdint>
#include <utility>

namespace qmt {

/// e^{-z} I_0(z) for z >= 0.
double bessel_i0_scaled(double z);

/// e^{-z} I_1(z) for z >= 0.
double bessel_i1_scaled(double z);

/// Laguerre function of degree 1/2 for x <= 0:
/// L_{1/2}(x) = e^{x/2} [(1 - x) I_0(-x/2) - x I_1(-x/2)].
/// Throws OutOfDomain for x > 0.
double laguerre_half(double x);

/// Marcum Q-function of order one, Q_1(a, b) = Pr[Rice(a, 1) > b].
double marcum_q1(double a, double b);

/// Pr[Bin(n, p) <= k].
double binomial_cdf(std::uint64_t k, std::uint64_t n, double p);

/// Pr[Bin(n, p) >= k].
double binomial_sf(std::uint64_t k, std::uint64_t n, double p);

/// Exact (Clopper-Pearson) two-sided 1 - alpha interval for k successes in
/// n trials. Throws std::invalid_argument for n = 0.
std::pair<double, double> clopper_pearson(std::uint64_t k, std::uint64_t n, double alpha);

}  // namespace qmt
