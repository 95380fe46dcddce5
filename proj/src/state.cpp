#include "qmt/state.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qmt/errors.hpp"

namespace qmt {

namespace {

// 2^(n+1) amplitudes must stay addressable; 30 input qubits is already 16 GiB.
constexpr int kMaxInputQubits = 30;

void check_qubits(int n) {
  if (n < 1 || n > kMaxInputQubits) {
    throw std::invalid_argument("input register must have 1.." +
                                std::to_string(kMaxInputQubits) + " qubits, got " +
                                std::to_string(n));
  }
}

void check_same_shape(const StateVector& a, const StateVector& b) {
  if (a.num_input_qubits() != b.num_input_qubits()) {
    throw DimensionMismatch("states have " + std::to_string(a.num_input_qubits()) +
                            " and " + std::to_string(b.num_input_qubits()) +
                            " input qubits");
  }
}

}  // namespace

StateVector::StateVector(int n, double s) : n_(n), s_(s) {
  check_qubits(n);
  amps_.assign(std::size_t{2} << n, Complex{0.0, 0.0});
}

StateVector::StateVector(int n, double s, std::vector<Complex> amps)
    : n_(n), s_(s), amps_(std::move(amps)) {
  check_qubits(n);
  if (amps_.size() != (std::size_t{2} << n)) {
    throw DimensionMismatch("expected " + std::to_string(std::size_t{2} << n) +
                            " amplitudes, got " + std::to_string(amps_.size()));
  }
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("amplitudes must be finite");
    }
  }
}

double FrequencyMap::operator()(std::uint64_t x, int y) const {
  return component_frequency(x, y, N, omega0);
}

StateVector init_state(int n, double s) {
  if (!(s > 0.0)) {
    throw std::invalid_argument("magnitude s must be positive");
  }
  StateVector psi(n, s);
  psi(0, 0) = s;
  return psi;
}

StateVector basis_state(int n, double s, BasisLabel label, Complex amplitude) {
  StateVector psi(n, s);
  if (label.x >= psi.input_dim() || (label.y != 0 && label.y != 1)) {
    throw std::invalid_argument("basis label out of range");
  }
  psi(label.x, label.y) = amplitude;
  return psi;
}

double component_frequency(std::uint64_t x, int y, std::uint64_t N, double omega0) {
  if (x >= N || (y != 0 && y != 1)) {
    throw std::invalid_argument("component (" + std::to_string(x) + "," +
                                std::to_string(y) + ") outside register of size " +
                                std::to_string(N));
  }
  const auto k = static_cast<double>(2 * N) - 1.0 - 4.0 * static_cast<double>(x) -
                 2.0 * static_cast<double>(y);
  return k * omega0;
}

Complex inner_product(const StateVector& phi, const StateVector& psi) {
  check_same_shape(phi, psi);
  const auto a = phi.amplitudes();
  const auto b = psi.amplitudes();
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

double norm_sq(const StateVector& psi) {
  double acc = 0.0;
  for (const auto& a : psi.amplitudes()) {
    acc += std::norm(a);
  }
  return acc;
}

StateVector subtract(const StateVector& psi, const StateVector& phi) {
  check_same_shape(psi, phi);
  StateVector out = psi;
  auto dst = out.amplitudes();
  const auto src = phi.amplitudes();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] -= src[i];
  }
  return out;
}

void write_state(std::ostream& os, const StateVector& psi) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=%d s=%.17g\n", psi.num_input_qubits(), psi.magnitude());
  os << buf;
  for (std::uint64_t x = 0; x < psi.input_dim(); ++x) {
    for (int y = 0; y < 2; ++y) {
      const Complex a = psi(x, y);
      std::snprintf(buf, sizeof buf, "%llu,%d,%.17g,%.17g\n",
                    static_cast<unsigned long long>(x), y, a.real(), a.imag());
      os << buf;
    }
  }
}

}  // namespace qmt
