#pragma once

#include <cstdint>
#include <numbers>

#include "qmt/gates.hpp"
#include "qmt/random.hpp"
#include "qmt/state.hpp"

namespace qmt {

/// Additive white complex Gaussian noise seen by the oracle.
///
/// sigma2 is the noise power spectral density; after filtering onto the 2N
/// tones each amplitude picks up variance sigma2 / T. The signal-to-noise
/// ratio is S^2 = s^2 T / sigma2 and is +infinity for a noiseless oracle.
struct NoiseParams {
  double s = 1.0;
  double T = 2.0 * std::numbers::pi;
  double sigma2 = 0.0;

  /// Noise level giving the requested SNR (snr = +inf gives sigma2 = 0).
  static NoiseParams from_snr(double snr, double s = 1.0,
                              double T = 2.0 * std::numbers::pi);

  double snr() const;
  double component_variance() const { return sigma2 / T; }
  bool noiseless() const { return sigma2 == 0.0; }

  /// Throws std::invalid_argument unless s > 0, T > 0 and sigma2 >= 0.
  void validate() const;
};

/// |v> with i.i.d. CN(0, sigma2/T) amplitudes.
StateVector sample_noise_state(int n, const NoiseParams& params, RandomStream& rng);

/// U_f|psi> + |v> with a fresh noise draw.
StateVector noisy_oracle(StateVector psi, const OracleSpec& spec, const NoiseParams& params,
                         RandomStream& rng);

/// F with F^2 = (s^2 + sigma2/T) / (s^2 + 2N sigma2/T).
double fidelity(std::uint64_t N, const NoiseParams& params);

/// Inverse of fidelity(): sigma2 = s^2 T (1 - F^2) / (2N F^2 - 1).
/// Throws UnreachableFidelity for F <= 1/sqrt(2N), std::invalid_argument for F > 1.
double sigma2_for_fidelity(std::uint64_t N, double s, double T, double F);

/// The SNR S^2 corresponding to fidelity F; +inf for F = 1.
double snr_for_fidelity(std::uint64_t N, double F);

}  // namespace qmt
