#include "qmt/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmt/errors.hpp"

namespace qmt {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::brute:
      return "brute";
    case Method::subspace:
      return "subspace";
    case Method::grover:
      return "grover";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "brute") return Method::brute;
  if (name == "subspace") return Method::subspace;
  if (name == "grover") return Method::grover;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

StateVector project_output_one(StateVector psi) {
  for (std::uint64_t x = 0; x < psi.input_dim(); ++x) {
    psi(x, 0) = 0.0;
  }
  return psi;
}

BasisLabel measure_full(const StateVector& psi, RandomStream& rng) {
  const double total = norm_sq(psi);
  if (!(total > 0.0)) {
    throw UnmeasurableState("cannot measure a zero-norm state");
  }
  const auto amps = psi.amplitudes();
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p > 0.0) {
      last_nonzero = i;
    }
    cumulative += p;
    if (u < cumulative) {
      return {i / 2, static_cast<int>(i % 2)};
    }
  }
  // u landed in the rounding gap above the accumulated sum.
  return {last_nonzero / 2, static_cast<int>(last_nonzero % 2)};
}

namespace {

TrialRecord measured(Method method, const OracleSpec& spec, const StateVector& psi,
                     std::uint64_t calls, RandomStream& rng) {
  TrialRecord rec;
  rec.method = method;
  rec.oracle_calls = calls;
  rec.seed = rng.seed();
  try {
    const BasisLabel out = measure_full(psi, rng);
    rec.outcome_x = out.x;
    rec.outcome_y = out.y;
    rec.success = out.y == 1 && spec.contains(out.x);
  } catch (const UnmeasurableState&) {
    rec.degenerate = true;
  }
  return rec;
}

}  // namespace

TrialRecord brute_force_trial(const OracleSpec& spec, const NoiseParams& params,
                              RandomStream& rng) {
  StateVector psi = prepare_uniform(spec.num_input_qubits(), params.s);
  psi = noisy_oracle(std::move(psi), spec, params, rng);
  return measured(Method::brute, spec, psi, 1, rng);
}

TrialRecord subspace_trial(const OracleSpec& spec, const NoiseParams& params,
                           RandomStream& rng) {
  StateVector psi = prepare_uniform(spec.num_input_qubits(), params.s);
  psi = project_output_one(noisy_oracle(std::move(psi), spec, params, rng));
  return measured(Method::subspace, spec, psi, 1, rng);
}

TrialRecord grover_trial(const OracleSpec& spec, const NoiseParams& params, RandomStream& rng) {
  const GroverPlan plan = grover_plan(spec.input_dim(), spec.num_solutions());
  const OracleSpec oracle = plan.complemented ? spec.complement() : spec;

  StateVector psi = prepare_uniform(spec.num_input_qubits(), params.s);
  psi = hadamard(x_gate(std::move(psi), 0), 0);
  for (std::uint64_t r = 0; r < plan.iterations; ++r) {
    psi = diffusion(noisy_oracle(std::move(psi), oracle, params, rng));
  }
  psi = hadamard(std::move(psi), 0);
  return measured(Method::grover, spec, psi, plan.iterations, rng);
}

TrialRecord run_trial(Method method, const OracleSpec& spec, const NoiseParams& params,
                      RandomStream& rng) {
  switch (method) {
    case Method::brute:
      return brute_force_trial(spec, params, rng);
    case Method::subspace:
      return subspace_trial(spec, params, rng);
    case Method::grover:
      return grover_trial(spec, params, rng);
  }
  throw std::invalid_argument("unknown method");
}

StateVector count_reference_state(int n, double s) {
  StateVector phi(n, s);
  const Complex a = s / std::sqrt(static_cast<double>(phi.input_dim()));
  for (std::uint64_t x = 0; x < phi.input_dim(); ++x) {
    phi(x, 1) = a;
  }
  return phi;
}

CountEstimate count_from_projection(const StateVector& projected) {
  const double s = projected.magnitude();
  const StateVector phi = count_reference_state(projected.num_input_qubits(), s);
  CountEstimate est;
  est.raw = static_cast<double>(projected.input_dim()) / (s * s) * inner_product(phi, projected);
  est.rounded = static_cast<std::uint64_t>(std::floor(std::abs(est.raw) + 0.5));
  return est;
}

CountEstimate estimate_solution_count(const OracleSpec& spec, const NoiseParams& params,
                                      RandomStream& rng) {
  StateVector psi = prepare_uniform(spec.num_input_qubits(), params.s);
  psi = project_output_one(noisy_oracle(std::move(psi), spec, params, rng));
  return count_from_projection(psi);
}

ExtractionResult extract_all_solutions(const OracleSpec& spec, const NoiseParams& params,
                                       RandomStream& rng, std::uint64_t max_iters) {
  if (max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }
  const int n = spec.num_input_qubits();
  const double s = params.s;
  const double amp = s / std::sqrt(static_cast<double>(spec.input_dim()));

  ExtractionResult result;
  StateVector psi = noisy_oracle(prepare_uniform(n, s), spec, params, rng);
  result.oracle_calls = 1;

  while (result.iterations < max_iters) {
    psi = project_output_one(std::move(psi));
    if (count_from_projection(psi).rounded == 0) {
      break;
    }
    BasisLabel found;
    try {
      found = measure_full(psi, rng);
    } catch (const UnmeasurableState&) {
      break;
    }
    ++result.iterations;
    if (std::find(result.solutions.begin(), result.solutions.end(), found.x) ==
        result.solutions.end()) {
      result.solutions.push_back(found.x);
    }
    psi = subtract(psi, basis_state(n, s, {found.x, 1}, amp));
  }
  return result;
}

double repeated_success_probability(double p, double k) {
  if (!(p >= 0.0 && p <= 1.0) || !(k >= 0.0)) {
    throw std::invalid_argument("repeated_success_probability needs p in [0,1], k >= 0");
  }
  if (k == 0.0) {
    return 0.0;
  }
  if (p == 1.0) {
    return 1.0;
  }
  return -std::expm1(k * std::log1p(-p));
}

}  // namespace qmt
