#include "qmt/signal.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qmt {

namespace {

double period(double omega0) { return 2.0 * std::numbers::pi / omega0; }

void check_rate(int n, std::size_t sample_rate) {
  const std::size_t N = std::size_t{1} << n;
  if (sample_rate <= 2 * (2 * N - 1)) {
    throw std::invalid_argument("sample rate " + std::to_string(sample_rate) +
                                " does not resolve the highest tone " +
                                std::to_string(2 * N - 1));
  }
}

// e^{i Omega t_j} for the tone of (x, y). The phase is reduced modulo the
// sample count in integer arithmetic so that large j stays exact.
Complex tone_sample(std::int64_t freq_index, std::size_t j, std::size_t rate) {
  const auto r = static_cast<std::int64_t>(rate);
  std::int64_t k = (freq_index * static_cast<std::int64_t>(j)) % r;
  if (k < 0) k += r;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t freq_index(std::uint64_t N, std::uint64_t x, int y) {
  return static_cast<std::int64_t>(2 * N) - 1 - 4 * static_cast<std::int64_t>(x) - 2 * y;
}

// Coefficient of a single tone, read through the discrete inner product.
Complex filter(const SampledWaveform& wave, std::uint64_t x, int y) {
  const std::int64_t f = freq_index(wave.input_dim(), x, y);
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < wave.samples.size(); ++j) {
    acc += std::conj(tone_sample(f, j, wave.sample_rate)) * wave.samples[j];
  }
  return acc / static_cast<double>(wave.sample_rate);
}

void add_tone(SampledWaveform& wave, std::uint64_t x, int y, Complex amount) {
  if (amount == Complex{0.0, 0.0}) {
    return;
  }
  const std::int64_t f = freq_index(wave.input_dim(), x, y);
  for (std::size_t j = 0; j < wave.samples.size(); ++j) {
    wave.samples[j] += amount * tone_sample(f, j, wave.sample_rate);
  }
}

BasisLabel label_of(std::size_t offset) { return {offset / 2, static_cast<int>(offset % 2)}; }

void check_qubit(const SampledWaveform& wave, int k) {
  if (k < 0 || k > wave.n) {
    throw std::out_of_range("qubit index " + std::to_string(k) + " out of range");
  }
}

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to every pair of tones whose
// basis offsets differ only in bit k.
SampledWaveform mix_pairs(const SampledWaveform& wave, int k, Complex m00, Complex m01,
                          Complex m10, Complex m11) {
  check_qubit(wave, k);
  SampledWaveform out = wave;
  const std::size_t bit = std::size_t{1} << k;
  const std::size_t count = 2 * wave.input_dim();
  for (std::size_t i = 0; i < count; ++i) {
    if ((i & bit) != 0) continue;
    const BasisLabel l0 = label_of(i);
    const BasisLabel l1 = label_of(i | bit);
    const Complex a0 = filter(wave, l0.x, l0.y);
    const Complex a1 = filter(wave, l1.x, l1.y);
    add_tone(out, l0.x, l0.y, m00 * a0 + m01 * a1 - a0);
    add_tone(out, l1.x, l1.y, m10 * a0 + m11 * a1 - a1);
  }
  return out;
}

}  // namespace

std::size_t default_sample_rate(int n) { return std::size_t{8} << n; }

SampledWaveform synthesize(const StateVector& psi, std::size_t sample_rate) {
  check_rate(psi.num_input_qubits(), sample_rate);
  SampledWaveform wave;
  wave.n = psi.num_input_qubits();
  wave.sample_rate = sample_rate;
  wave.s = psi.magnitude();
  wave.samples.assign(sample_rate, Complex{0.0, 0.0});
  const std::uint64_t N = psi.input_dim();
  for (std::uint64_t x = 0; x < N; ++x) {
    for (int y = 0; y < 2; ++y) {
      add_tone(wave, x, y, psi(x, y));
    }
  }
  return wave;
}

SampledWaveform tone(int n, BasisLabel label, std::size_t sample_rate, double s) {
  return synthesize(basis_state(n, s, label), sample_rate);
}

Complex signal_inner_product(const SampledWaveform& phi, const SampledWaveform& psi) {
  if (phi.sample_rate != psi.sample_rate || phi.n != psi.n ||
      phi.samples.size() != psi.samples.size()) {
    throw std::invalid_argument("waveforms differ in sample rate or register width");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < phi.samples.size(); ++j) {
    acc += std::conj(phi.samples[j]) * psi.samples[j];
  }
  return acc / static_cast<double>(phi.sample_rate);
}

StateVector demodulate(const SampledWaveform& wave) {
  StateVector psi(wave.n, wave.s);
  for (std::uint64_t x = 0; x < wave.input_dim(); ++x) {
    for (int y = 0; y < 2; ++y) {
      psi(x, y) = filter(wave, x, y);
    }
  }
  return psi;
}

SampledWaveform signal_project_output_one(const SampledWaveform& wave) {
  StateVector coeffs = demodulate(wave);
  for (std::uint64_t x = 0; x < coeffs.input_dim(); ++x) {
    coeffs(x, 0) = 0.0;
  }
  return synthesize(coeffs, wave.sample_rate);
}

SampledWaveform signal_hadamard(const SampledWaveform& wave, int k) {
  const double r = 1.0 / std::numbers::sqrt2;
  return mix_pairs(wave, k, r, r, r, -r);
}

SampledWaveform signal_x(const SampledWaveform& wave, int k) {
  return mix_pairs(wave, k, 0.0, 1.0, 1.0, 0.0);
}

SampledWaveform signal_toffoli(const SampledWaveform& wave) {
  SampledWaveform out = wave;
  const std::uint64_t top = wave.input_dim() - 1;
  const Complex a0 = filter(wave, top, 0);
  const Complex a1 = filter(wave, top, 1);
  add_tone(out, top, 0, a1 - a0);
  add_tone(out, top, 1, a0 - a1);
  return out;
}

SampledWaveform signal_oracle(const SampledWaveform& wave, const OracleSpec& spec) {
  if (spec.num_input_qubits() != wave.n) {
    throw std::invalid_argument("oracle and waveform register widths differ");
  }
  SampledWaveform out = wave;
  auto conjugate = [&](SampledWaveform w, std::uint64_t a) {
    for (int i = 0; i < wave.n; ++i) {
      if (((a >> i) & 1U) == 0) {
        w = signal_x(w, i + 1);
      }
    }
    return w;
  };
  for (const auto a : spec.solutions()) {
    out = conjugate(signal_toffoli(conjugate(std::move(out), a)), a);
  }
  return out;
}

void write_waveform(std::ostream& os, const SampledWaveform& wave) {
  const double T = period(wave.omega0);
  char buf[128];
  for (std::size_t j = 0; j < wave.samples.size(); ++j) {
    const double t = T * static_cast<double>(j) / static_cast<double>(wave.sample_rate);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, wave.samples[j].real(),
                  wave.samples[j].imag());
    os << buf;
  }
}

}  // namespace qmt
