#include "qmt/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmt {

namespace {

void check_qubit_index(const StateVector& psi, int k) {
  if (k < 0 || k > psi.num_input_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(k) + " outside 0.." +
                            std::to_string(psi.num_input_qubits()));
  }
}

}  // namespace

OracleSpec::OracleSpec(int n, std::vector<std::uint64_t> solutions)
    : n_(n), solutions_(std::move(solutions)) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("oracle needs 1..30 input qubits");
  }
  marked_.assign(input_dim(), false);
  for (const auto a : solutions_) {
    if (a >= input_dim()) {
      throw std::invalid_argument("solution " + std::to_string(a) + " outside 0.." +
                                  std::to_string(input_dim() - 1));
    }
    if (marked_[a]) {
      throw std::invalid_argument("duplicate solution " + std::to_string(a));
    }
    marked_[a] = true;
  }
}

bool OracleSpec::contains(std::uint64_t x) const { return x < marked_.size() && marked_[x]; }

OracleSpec OracleSpec::complement() const {
  std::vector<std::uint64_t> rest;
  rest.reserve(input_dim() - num_solutions());
  for (std::uint64_t x = 0; x < input_dim(); ++x) {
    if (!marked_[x]) {
      rest.push_back(x);
    }
  }
  return OracleSpec(n_, std::move(rest));
}

StateVector hadamard(StateVector psi, int k) {
  check_qubit_index(psi, k);
  const double r = 1.0 / std::numbers::sqrt2;
  const std::size_t bit = std::size_t{1} << k;
  auto a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & bit) == 0) {
      const Complex a0 = a[i];
      const Complex a1 = a[i | bit];
      a[i] = r * (a0 + a1);
      a[i | bit] = r * (a0 - a1);
    }
  }
  return psi;
}

StateVector hadamard_layer(StateVector psi) {
  for (int k = 1; k <= psi.num_input_qubits(); ++k) {
    psi = hadamard(std::move(psi), k);
  }
  return psi;
}

StateVector x_gate(StateVector psi, int k) {
  check_qubit_index(psi, k);
  const std::size_t bit = std::size_t{1} << k;
  auto a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & bit) == 0) {
      std::swap(a[i], a[i | bit]);
    }
  }
  return psi;
}

StateVector n_fold_toffoli(StateVector psi) {
  const std::uint64_t top = psi.input_dim() - 1;
  std::swap(psi(top, 0), psi(top, 1));
  return psi;
}

StateVector apply_A(StateVector psi, std::uint64_t a) {
  if (a >= psi.input_dim()) {
    throw std::invalid_argument("solution value " + std::to_string(a) + " out of range");
  }
  for (int i = 0; i < psi.num_input_qubits(); ++i) {
    if (((a >> i) & 1U) == 0) {
      psi = x_gate(std::move(psi), i + 1);
    }
  }
  return psi;
}

StateVector apply_oracle(StateVector psi, const OracleSpec& spec) {
  if (spec.num_input_qubits() != psi.num_input_qubits()) {
    throw std::invalid_argument("oracle and state register widths differ");
  }
  for (const auto a : spec.solutions()) {
    psi = apply_A(n_fold_toffoli(apply_A(std::move(psi), a)), a);
  }
  return psi;
}

StateVector diffusion(StateVector psi) {
  const std::uint64_t N = psi.input_dim();
  for (int y = 0; y < 2; ++y) {
    Complex mean{0.0, 0.0};
    for (std::uint64_t x = 0; x < N; ++x) {
      mean += psi(x, y);
    }
    mean /= static_cast<double>(N);
    for (std::uint64_t x = 0; x < N; ++x) {
      psi(x, y) = 2.0 * mean - psi(x, y);
    }
  }
  return psi;
}

GroverPlan grover_plan(std::uint64_t N, std::uint64_t M) {
  if (M > N || N == 0) {
    throw std::invalid_argument("grover_plan requires 0 <= M <= N");
  }
  GroverPlan plan;
  if (M == 0) {
    return plan;
  }
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  plan.theta = 2.0 * std::asin(std::sqrt(m / n));
  if (2 * M <= N) {
    plan.iterations =
        static_cast<std::uint64_t>(std::floor(std::numbers::pi * std::sqrt(n / m) / 4.0));
  } else {
    plan.complemented = true;
    plan.iterations = static_cast<std::uint64_t>(
        std::floor(std::numbers::pi * std::sqrt((n - m) / m) / 4.0));
  }
  return plan;
}

StateVector prepare_uniform(int n, double s) { return hadamard_layer(init_state(n, s)); }

}  // namespace qmt
