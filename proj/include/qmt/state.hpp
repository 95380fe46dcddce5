#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace qmt {

using Complex = std::complex<double>;

/// Computational basis label |x, y>: x indexes the n-qubit input register,
/// y is the output qubit (qubit 0).
struct BasisLabel {
  std::uint64_t x = 0;
  int y = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Dense amplitude vector of an (n+1)-qubit register.
///
/// Amplitudes are stored row-major in x with y as the fastest index, so
/// |x, y> lives at offset 2x + y. Qubit 0 is bit 0 of that offset and input
/// qubit k (1..n) is bit k, i.e. bit k-1 of x.
class StateVector {
 public:
  /// Zero state of n input qubits with nominal magnitude s.
  StateVector(int n, double s);

  /// Takes ownership of amps; throws if the length is not 2^(n+1) or any
  /// entry is not finite.
  StateVector(int n, double s, std::vector<Complex> amps);

  int num_input_qubits() const noexcept { return n_; }
  /// N = 2^n.
  std::uint64_t input_dim() const noexcept { return std::uint64_t{1} << n_; }
  std::size_t size() const noexcept { return amps_.size(); }
  double magnitude() const noexcept { return s_; }

  static constexpr std::size_t offset(std::uint64_t x, int y) noexcept {
    return static_cast<std::size_t>(2 * x + static_cast<std::uint64_t>(y));
  }

  Complex operator()(std::uint64_t x, int y) const { return amps_[offset(x, y)]; }
  Complex& operator()(std::uint64_t x, int y) { return amps_[offset(x, y)]; }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

 private:
  int n_;
  double s_;
  std::vector<Complex> amps_;
};

/// Base angular frequency and register size of the tonal encoding.
struct FrequencyMap {
  double omega0 = 1.0;
  std::uint64_t N = 2;

  /// Omega_{x,y} = (2N - 1 - 4x - 2y) * omega0.
  double operator()(std::uint64_t x, int y) const;
};

/// s|0,0>.
StateVector init_state(int n, double s);

/// |x,y> scaled by amplitude.
StateVector basis_state(int n, double s, BasisLabel label, Complex amplitude = 1.0);

double component_frequency(std::uint64_t x, int y, std::uint64_t N, double omega0);

/// <phi|psi>, conjugate-linear in phi.
Complex inner_product(const StateVector& phi, const StateVector& psi);

double norm_sq(const StateVector& psi);

/// Componentwise psi - phi; the result keeps psi's magnitude parameter.
StateVector subtract(const StateVector& psi, const StateVector& phi);

/// Text dump: header `n=<n> s=<s>` then one `x,y,re,im` line per amplitude.
void write_state(std::ostream& os, const StateVector& psi);

}  // namespace qmt
