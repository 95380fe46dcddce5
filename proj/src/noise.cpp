#include "qmt/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qmt/errors.hpp"

namespace qmt {

NoiseParams NoiseParams::from_snr(double snr, double s, double T) {
  if (!(snr > 0.0)) {
    throw std::invalid_argument("SNR must be positive or +inf");
  }
  NoiseParams p;
  p.s = s;
  p.T = T;
  p.sigma2 = std::isinf(snr) ? 0.0 : s * s * T / snr;
  p.validate();
  return p;
}

double NoiseParams::snr() const {
  if (sigma2 == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return s * s * T / sigma2;
}

void NoiseParams::validate() const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("signal magnitude s must be positive and finite");
  }
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("integration period T must be positive and finite");
  }
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("noise PSD sigma2 must be finite and non-negative");
  }
}

StateVector sample_noise_state(int n, const NoiseParams& params, RandomStream& rng) {
  params.validate();
  StateVector v(n, params.s);
  if (params.noiseless()) {
    return v;
  }
  const double var = params.component_variance();
  for (auto& a : v.amplitudes()) {
    a = rng.complex_normal(var);
  }
  return v;
}

StateVector noisy_oracle(StateVector psi, const OracleSpec& spec, const NoiseParams& params,
                         RandomStream& rng) {
  psi = apply_oracle(std::move(psi), spec);
  if (params.noiseless()) {
    return psi;
  }
  const double var = params.component_variance();
  for (auto& a : psi.amplitudes()) {
    a += rng.complex_normal(var);
  }
  return psi;
}

double fidelity(std::uint64_t N, const NoiseParams& params) {
  params.validate();
  const double s2 = params.s * params.s;
  const double v = params.component_variance();
  return std::sqrt((s2 + v) / (s2 + 2.0 * static_cast<double>(N) * v));
}

double sigma2_for_fidelity(std::uint64_t N, double s, double T, double F) {
  if (!(F <= 1.0)) {
    throw std::invalid_argument("fidelity must not exceed 1");
  }
  const double F2 = F * F;
  const double denom = 2.0 * static_cast<double>(N) * F2 - 1.0;
  if (!(denom > 0.0)) {
    throw UnreachableFidelity("fidelity must exceed 1/sqrt(2N) = " +
                              std::to_string(1.0 / std::sqrt(2.0 * static_cast<double>(N))));
  }
  return s * s * T * (1.0 - F) * (1.0 + F) / denom;
}

double snr_for_fidelity(std::uint64_t N, double F) {
  const double sigma2 = sigma2_for_fidelity(N, 1.0, 1.0, F);
  if (sigma2 == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / sigma2;
}

}  // namespace qmt
