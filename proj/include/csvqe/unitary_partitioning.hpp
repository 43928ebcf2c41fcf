// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/pauli.hpp>

#include <utility>
#include <vector>

namespace csvqe {

// sum_j r[j] * words[j] with pairwise anticommuting words and |r| = 1.
struct AnticommutingObservable {
  std::vector<PauliWord> words;
  std::vector<double> r;
  std::size_t target = 0;

  std::size_t size() const { return words.size(); }
  const PauliWord& target_word() const { return words.at(target); }
  PauliSum as_sum() const;
};

// Throws NotAnticommuting or NotNormalized.
void validate(const AnticommutingObservable& a);

// Index of the largest |r_j|, lowest index on ties.
std::size_t largest_magnitude_index(const std::vector<double>& r);

// Step = exp(i * angle / 2 * word).
struct SeqRotStep {
  PauliWord word;
  double angle = 0.0;
};

struct SeqRotPlan {
  std::size_t n_qubits = 0;
  std::vector<SeqRotStep> steps;
};

// R = identity * I + sum_k coeff_k * word_k.
struct LcuOperator {
  std::size_t n_qubits = 0;
  double identity = 1.0;
  std::vector<std::pair<PauliWord, complex>> terms;

  PauliSum as_sum() const;
};

SeqRotPlan build_seqrot(const AnticommutingObservable& a);
LcuOperator build_lcu(const AnticommutingObservable& a);

// Rotation exp(i * angle / 2 * word) applied as R H R^dagger.
PauliSum rotate(const PauliSum& h, const PauliWord& word, double angle);
// Clifford exp(i * pi/4 * word): anticommuting P maps to i * word * P.
PauliSum rotate_clifford(const PauliSum& h, const PauliWord& word);
PhasedWord rotate_clifford(const PhasedWord& p, const PauliWord& word);

// R H R^dagger.
PauliSum conjugate(const PauliSum& h, const SeqRotPlan& plan);
PauliSum conjugate(const PauliSum& h, const LcuOperator& lcu);

struct TermGrowth {
  std::size_t seqrot = 0;
  std::size_t lcu = 0;
  std::size_t lcu_bound = 0;
};

std::size_t lcu_term_bound(std::size_t h_terms, std::size_t a_size);
TermGrowth term_growth_report(const PauliSum& h,
                              const AnticommutingObservable& a);

}  // namespace csvqe
