// SPDX-License-Identifier: MIT
// Anticommuting clique covers, shot-count estimates and a shot simulator.

#pragma once

#include <csvqe/eigensolver.hpp>
#include <csvqe/pauli.hpp>
#include <csvqe/unitary_partitioning.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace csvqe {

inline constexpr std::size_t kMaxSimulationQubits = 12;

// Largest-first greedy coloring of the commutation graph. Each color class
// is a set of pairwise anticommuting words. Ties in degree go to the
// lexicographically smaller word.
std::vector<std::vector<PauliWord>> clique_cover(const PauliSum& h);

struct MeasurementClique {
  std::vector<PauliWord> words;
  std::vector<double> coeffs;
  double gamma = 0.0;                    // 2-norm of coeffs
  AnticommutingObservable observable;    // coeffs / gamma
  std::optional<LcuOperator> rotation;   // absent for single words
  int measured_sign = 1;                 // C = sign * R^dag P R

  std::size_t size() const { return words.size(); }
  const PauliWord& measured_word() const { return observable.target_word(); }
};

struct MeasurementPlan {
  std::size_t n_qubits = 0;
  std::vector<MeasurementClique> cliques;
  double epsilon = 1e-3;
};

// Throws NonHermitian on complex coefficients.
MeasurementPlan build_measurement_plan(const PauliSum& h,
                                       double epsilon = 1e-3);

struct ShotEstimate {
  double grouped = 0.0;
  double ungrouped = 0.0;
  double ratio = 1.0;
  double bound = 1.0;
};

// Missing words take variance 1. Throws InvalidVariance outside [0, 1].
ShotEstimate estimate_shots(const MeasurementPlan& plan,
                            const std::map<PauliWord, double>& variances = {});
ShotEstimate estimate_shots(const MeasurementPlan& plan,
                            const std::map<PauliWord, double>& variances,
                            double epsilon);

// Per-word Var[P] = 1 - <P>^2 on a state.
std::map<PauliWord, double> state_variances(const MeasurementPlan& plan,
                                            const StateVector& psi);

// Var[gamma C] from the sum of member variances (no cross terms).
double clique_variance_formula(const MeasurementClique& c,
                               const StateVector& psi);
// Var[gamma C] = gamma^2 - <gamma C>^2, the variance of one rotated shot.
double clique_variance_exact(const MeasurementClique& c,
                             const StateVector& psi);
double clique_expectation(const MeasurementClique& c, const StateVector& psi);

// Rotated state R|psi> whose measured word carries the clique statistics.
StateVector rotated_state(const MeasurementClique& c, const StateVector& psi);

struct SimulationResult {
  double energy = 0.0;
  std::vector<double> clique_means;      // sample mean of gamma C per clique
  std::vector<double> clique_variances;  // unbiased sample variance
  double standard_error = 0.0;           // predicted from exact variances
};

// Throws TooManyQubits above 12 qubits and ZeroShots.
SimulationResult simulate_shots(const StateVector& psi,
                                const MeasurementPlan& plan,
                                std::uint64_t shots, std::uint64_t seed);

struct PairSample {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double covariance = 0.0;
  double standard_error = 0.0;  // of the covariance estimate
};

// Measures a, then b on the collapsed state, shots times.
PairSample sample_sequential_pair(const StateVector& psi, const PauliWord& a,
                                  const PauliWord& b, std::uint64_t shots,
                                  std::uint64_t seed);

struct GateEstimate {
  std::size_t single_qubit = 0;
  std::size_t cnot = 0;
};

// N_s (|C| - 1) for both counts; size-2 cliques cost O(N_s).
GateEstimate gate_estimate(std::size_t clique_size, std::size_t n_system);

struct MeasurementReport {
  std::size_t terms_before = 0;
  std::size_t cliques_after = 0;
  double ratio = 1.0;
  double ratio_bound = 1.0;
  std::vector<std::size_t> clique_sizes;
  std::vector<GateEstimate> gate_estimates;
};

MeasurementReport measurement_report(const PauliSum& h);
nlohmann::json report_to_json(const MeasurementReport& report);

}  // namespace csvqe
