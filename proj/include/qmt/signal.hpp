#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/state.hpp"

namespace qmt {

/// One fundamental period T = 2 pi / omega0 of a tonal state, sampled at
/// sample_rate equally spaced instants t_j = j T / sample_rate.
///
/// With sample_rate > 2(2N - 1) the 2N tones e^{i Omega_{x,y} t} are exactly
/// orthogonal under the discrete inner product.
struct SampledWaveform {
  std::vector<Complex> samples;
  std::size_t sample_rate = 0;
  int n = 0;
  double omega0 = 1.0;
  /// Magnitude parameter carried through to demodulated states.
  double s = 1.0;

  std::uint64_t input_dim() const noexcept { return std::uint64_t{1} << n; }
};

/// 8N: four times the highest tone index, a power of two.
std::size_t default_sample_rate(int n);

/// psi(t_j) = sum_{x,y} alpha_{x,y} e^{i Omega_{x,y} t_j}.
SampledWaveform synthesize(const StateVector& psi, std::size_t sample_rate);

/// Unit-amplitude tone for basis component (x, y).
SampledWaveform tone(int n, BasisLabel label, std::size_t sample_rate, double s = 1.0);

/// (1/sample_rate) sum_j conj(phi_j) psi_j.
Complex signal_inner_product(const SampledWaveform& phi, const SampledWaveform& psi);

/// alpha_{x,y} = <tone(x,y) | wave> for every component.
StateVector demodulate(const SampledWaveform& wave);

/// Band-pass onto the y = 1 tones.
SampledWaveform signal_project_output_one(const SampledWaveform& wave);

// Gates acting on the waveform: each filters out the affected components
// and adds back corrected tones. None of them touches an amplitude vector.
SampledWaveform signal_hadamard(const SampledWaveform& wave, int k);
SampledWaveform signal_x(const SampledWaveform& wave, int k);
SampledWaveform signal_toffoli(const SampledWaveform& wave);
SampledWaveform signal_oracle(const SampledWaveform& wave, const OracleSpec& spec);

/// Text dump: one `t,re,im` line per sample.
void write_waveform(std::ostream& os, const SampledWaveform& wave);

}  // namespace qmt
