#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/noise.hpp"
#include "qmt/random.hpp"
#include "qmt/state.hpp"

namespace qmt {

enum class Method { brute, subspace, grover };

std::string_view method_name(Method m);
/// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

/// Outcome of one Monte Carlo search trial.
struct TrialRecord {
  Method method = Method::brute;
  std::optional<std::uint64_t> outcome_x;
  std::optional<int> outcome_y;
  bool success = false;
  std::uint64_t oracle_calls = 0;
  std::uint64_t seed = 0;
  /// The state handed to the measurement had zero norm.
  bool degenerate = false;
};

/// Raw complex count estimate and its rounding to an integer.
struct CountEstimate {
  Complex raw;
  std::uint64_t rounded = 0;
};

struct ExtractionResult {
  /// Distinct measured input values, in the order they were found.
  std::vector<std::uint64_t> solutions;
  std::uint64_t iterations = 0;
  std::uint64_t oracle_calls = 0;
};

/// Pi_1^(0): zero every y = 0 amplitude.
StateVector project_output_one(StateVector psi);

/// Born-rule measurement of all n+1 qubits. Throws UnmeasurableState on a
/// zero-norm state.
BasisLabel measure_full(const StateVector& psi, RandomStream& rng);

/// Uniform preparation, one noisy oracle call, full measurement.
TrialRecord brute_force_trial(const OracleSpec& spec, const NoiseParams& params,
                              RandomStream& rng);

/// As brute_force_trial with Pi_1^(0) applied before measuring. A zero-norm
/// projected state is recorded as a failed, degenerate trial.
TrialRecord subspace_trial(const OracleSpec& spec, const NoiseParams& params,
                           RandomStream& rng);

/// H_0 (W U~_f)^R H_0 X_0 |psi_0> followed by a full measurement.
TrialRecord grover_trial(const OracleSpec& spec, const NoiseParams& params, RandomStream& rng);

TrialRecord run_trial(Method method, const OracleSpec& spec, const NoiseParams& params,
                      RandomStream& rng);

/// (s/sqrt(N)) sum_x |x,1>.
StateVector count_reference_state(int n, double s);

/// M~ = (N/s^2) <phi| Pi_1^(0) U~_f |psi_0> and M^ = floor(|M~| + 1/2).
CountEstimate estimate_solution_count(const OracleSpec& spec, const NoiseParams& params,
                                      RandomStream& rng);

/// Count estimate read off an already projected state.
CountEstimate count_from_projection(const StateVector& projected);

/// One noisy oracle call, then repeated {count, measure, subtract} on the
/// projected state until the estimated remaining count is zero or max_iters
/// measurements have been made.
ExtractionResult extract_all_solutions(const OracleSpec& spec, const NoiseParams& params,
                                       RandomStream& rng, std::uint64_t max_iters);

/// 1 - (1 - p)^k.
double repeated_success_probability(double p, double k);

}  // namespace qmt
