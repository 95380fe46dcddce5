#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmt/state.hpp"

namespace qmt {

/// A planted-solution search instance: f(x) = 1 iff x is in the solution set.
class OracleSpec {
 public:
  /// Throws std::invalid_argument on duplicate or out-of-range solutions.
  OracleSpec(int n, std::vector<std::uint64_t> solutions);

  int num_input_qubits() const noexcept { return n_; }
  std::uint64_t input_dim() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t num_solutions() const noexcept { return solutions_.size(); }
  std::span<const std::uint64_t> solutions() const noexcept { return solutions_; }

  bool contains(std::uint64_t x) const;

  /// The oracle for 1 - f.
  OracleSpec complement() const;

 private:
  int n_;
  std::vector<std::uint64_t> solutions_;
  std::vector<bool> marked_;
};

/// Rotation angle and iteration count of Grover's algorithm for (N, M).
struct GroverPlan {
  double theta = 0.0;
  std::uint64_t iterations = 0;
  /// Set when M > N/2 and the iteration count was taken from the
  /// complemented oracle.
  bool complemented = false;
};

/// Single-qubit Hadamard on qubit k (0 = output qubit, 1..n = input qubits).
StateVector hadamard(StateVector psi, int k);

/// H_n ... H_1 over the input register.
StateVector hadamard_layer(StateVector psi);

/// NOT on qubit k.
StateVector x_gate(StateVector psi, int k);

/// n-fold Toffoli with controls 1..n and target 0: swaps the amplitudes of
/// |N-1,0> and |N-1,1>.
StateVector n_fold_toffoli(StateVector psi);

/// Conjugation operator mapping the solution value a onto the all-ones input:
/// X on input qubit i+1 whenever bit i of a is zero. Self-inverse.
StateVector apply_A(StateVector psi, std::uint64_t a);

/// U_f |x,y> = |x, y xor f(x)>, built as the product of A_j C A_j factors.
StateVector apply_oracle(StateVector psi, const OracleSpec& spec);

/// Inversion about the mean over the input register, identity on qubit 0.
StateVector diffusion(StateVector psi);

GroverPlan grover_plan(std::uint64_t N, std::uint64_t M);

/// (s/sqrt(N)) sum_x |x,0>.
StateVector prepare_uniform(int n, double s);

}  // namespace qmt
