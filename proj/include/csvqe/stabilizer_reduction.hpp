// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/contextuality.hpp>
#include <csvqe/eigensolver.hpp>
#include <csvqe/noncontextual.hpp>
#include <csvqe/pauli.hpp>
#include <csvqe/unitary_partitioning.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csvqe {

enum class Method { SeqRot, Lcu };

std::string to_string(Method m);

struct StabilizerEntry {
  bool is_A = false;
  PauliWord word;  // generator word; unused for the A(r) entry
  int sign = 1;    // the state has <sign * word> = +1
};

struct StabilizerSet {
  std::vector<StabilizerEntry> entries;  // A(r) first when present, then G
  std::optional<AnticommutingObservable> A;

  std::size_t size() const { return entries.size(); }
  std::string label(std::size_t i) const;
};

// The target word for unitary partitioning defaults to the largest |r_j|.
StabilizerSet build_w_all(const NoncontextualStructure& structure,
                          const NoncontextualState& state,
                          const std::optional<PauliWord>& target = {});

struct RotationPlan {
  std::size_t n_qubits = 0;
  std::optional<SeqRotPlan> seqrot;
  std::optional<LcuOperator> lcu;
  std::vector<PauliWord> clifford;  // exp(i pi/4 P), applied in order
  std::vector<std::size_t> entries;     // indices into W_all
  std::vector<std::size_t> qubits;      // qubit each entry lands on
  std::vector<int> sign_ledger;         // fixed <Z_qubit> per entry

  bool has_up_stage() const { return seqrot.has_value() || lcu.has_value(); }
};

// Maps the selected entries of W_all to distinct single-qubit Z words.
// The unitary-partitioning stage is included iff A(r) is selected, or always
// when force_up_stage is set. Throws DependentStabilizers.
RotationPlan build_u(const StabilizerSet& w_all,
                     const std::vector<std::size_t>& subset, Method method,
                     bool force_up_stage = false);

// Conjugation by the whole plan: up stage first, then the Clifford stage.
PauliSum apply_plan(const PauliSum& h, const RotationPlan& plan);
PauliSum apply_clifford_stage(const PauliSum& h, const RotationPlan& plan);
PhasedWord apply_plan(const PhasedWord& p, const RotationPlan& plan);

struct SubspaceProjector {
  std::map<std::size_t, int> fixed;  // qubit -> bit (0 for +1, 1 for -1)
};

SubspaceProjector projector_for(const RotationPlan& plan,
                                const std::vector<std::size_t>& entries);
SubspaceProjector projector_for(const RotationPlan& plan);

// Drops terms with X/Y on fixed qubits, folds Z eigenvalues, removes columns.
PauliSum project(const PauliSum& h_rot, const SubspaceProjector& projector);

struct ReductionOptions {
  Method method = Method::Lcu;
  std::optional<PauliWord> target;
  GeneratorOptions generators;
  OptimizerConfig optimizer;
  EigenOptions eigen;
  bool legacy_full_rotation = false;
  std::size_t brute_force_limit = 4096;
};

struct ReductionLevel {
  std::vector<std::size_t> fixed;  // indices into W_all, ascending
  std::size_t qubits = 0;
  PauliSum hamiltonian;
  double energy = 0.0;
};

struct SelectionResult {
  bool brute_force = false;
  // levels[m] fixes m stabilizers; levels[0] is the untouched Hamiltonian.
  std::vector<ReductionLevel> levels;
  // Greedy chain only: W_all entries in the order they were released.
  std::vector<std::size_t> removal_order;
};

// Reduced Hamiltonian for one subset of W_all.
ReductionLevel reduce_with(const PauliSum& h, const StabilizerSet& w_all,
                           const std::vector<std::size_t>& subset,
                           const ReductionOptions& options,
                           bool compute_energy = true);

// Exhaustive over subsets when 2^|W_all|-1 <= brute_force_limit, otherwise
// greedy removal from W_all.
SelectionResult select_stabilizers(const PauliSum& h,
                                   const StabilizerSet& w_all,
                                   const ReductionOptions& options);

struct PipelineResult {
  NoncontextualSplit split;
  NoncontextualStructure structure;
  SolveResult solution;
  StabilizerSet w_all;
  SelectionResult selection;
  double full_energy = 0.0;
};

PipelineResult run_pipeline(const PauliSum& h,
                            const ReductionOptions& options = {});

struct ReductionReport {
  PauliSum reduced;
  std::size_t qubits = 0;
  double energy = 0.0;
  double noncontextual_energy = 0.0;
  double full_energy = 0.0;
  std::size_t terms_before = 0;
  std::size_t terms_after = 0;
  std::vector<std::string> fixed;
};

ReductionReport cs_vqe_reduce(const PauliSum& h, std::size_t qubits_to_keep,
                              const ReductionOptions& options = {});

}  // namespace csvqe
