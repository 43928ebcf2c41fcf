// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/pauli.hpp>

#include <map>
#include <optional>
#include <vector>

namespace csvqe {

struct ZTSplit {
  std::vector<PauliWord> Z;  // commute with every other word of S
  std::vector<PauliWord> T;
};

ZTSplit partition_commuting(const std::vector<PauliWord>& S);

// Triple scan over T for [Pi,Pj]=0, [Pi,Pk]=0, {Pj,Pk}=0.
bool is_contextual(const std::vector<PauliWord>& S);

// Commutation classes of T, ordered by first member in input order.
std::vector<std::vector<PauliWord>> decompose_cliques(
    const std::vector<PauliWord>& T);

struct NoncontextualSplit {
  PauliSum noncontextual;
  PauliSum contextual;
  std::vector<PauliWord> accepted;  // greedy insertion order
};

// Greedy by descending |coeff|, ties broken by lexicographic word order.
NoncontextualSplit extract_noncontextual(const PauliSum& H);

// word = sign * G[generators[0]] * G[generators[1]] * ... (* reps[clique]).
struct InferenceEntry {
  std::vector<std::size_t> generators;
  std::optional<std::size_t> clique;
  int sign = 1;
};

struct NoncontextualStructure {
  std::size_t n_qubits = 0;
  std::vector<PauliWord> Z;
  std::vector<std::vector<PauliWord>> cliques;  // cliques[j][0] == reps[j]
  std::vector<PauliWord> reps;
  // A_factors[j][k-1] = cliques[j][k] * reps[j] for k >= 1.
  std::vector<std::vector<PhasedWord>> A_factors;
  std::vector<PauliWord> G;
  std::map<PauliWord, InferenceEntry> inference_table;
};

struct GeneratorOptions {
  // A clique member listed here becomes that clique's representative.
  std::vector<PauliWord> preferred_reps;
};

NoncontextualStructure build_generators(
    const std::vector<PauliWord>& Z,
    const std::vector<std::vector<PauliWord>>& cliques,
    const GeneratorOptions& options = {});

// partition_commuting + decompose_cliques + build_generators on a word list
// given in insertion order.
NoncontextualStructure analyze_noncontextual(
    const std::vector<PauliWord>& words, const GeneratorOptions& options = {});

// GF(2) rank of words as symplectic vectors.
std::size_t symplectic_rank(const std::vector<PauliWord>& words);

struct PeresMerminResult {
  double quantum_value = 0.0;
  double classical_bound = 0.0;
  std::vector<int> line_signs;  // rows then columns, product = sign * I
};

std::vector<std::vector<PauliWord>> peres_mermin_square();
PeresMerminResult peres_mermin_demo();

}  // namespace csvqe
