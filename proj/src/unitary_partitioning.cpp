// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/unitary_partitioning.hpp>

#include <algorithm>
#include <cmath>

namespace csvqe {

namespace {

constexpr double kNormTolerance = 1e-10;

PauliSum chop_imaginary(const PauliSum& h) {
  PauliSum out(h.n_qubits());
  for (const auto& [w, c] : h) {
    out.add(w, std::abs(c.imag()) < kDropTolerance ? complex{c.real(), 0.0}
                                                   : c);
  }
  return out;
}

// P_k * P_j = (+-i) * word; returns the word and the sign of i.
std::pair<PauliWord, int> generator_of(const PauliWord& pk,
                                       const PauliWord& pj) {
  const PhasedWord k = multiply(pk, pj);
  if (k.phase == 1) return {k.word, 1};
  if (k.phase == 3) return {k.word, -1};
  throw NotAnticommuting();
}

}  // namespace

PauliSum AnticommutingObservable::as_sum() const {
  PauliSum out(words.empty() ? 0 : words.front().n_qubits());
  for (std::size_t j = 0; j < words.size(); ++j) out.add(words[j], r[j]);
  return out;
}

void validate(const AnticommutingObservable& a) {
  if (a.words.empty() || a.words.size() != a.r.size()) {
    throw std::invalid_argument("observable needs one amplitude per word");
  }
  if (a.target >= a.words.size()) {
    throw IndexOutOfRange("target index out of range");
  }
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    for (std::size_t j = i + 1; j < a.words.size(); ++j) {
      if (commutes(a.words[i], a.words[j])) throw NotAnticommuting();
    }
  }
  double norm = 0.0;
  for (double v : a.r) norm += v * v;
  norm = std::sqrt(norm);
  if (std::abs(norm - 1.0) > kNormTolerance) throw NotNormalized(norm);
}

std::size_t largest_magnitude_index(const std::vector<double>& r) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (std::abs(r[j]) > std::abs(r[best])) best = j;
  }
  return best;
}

PauliSum LcuOperator::as_sum() const {
  PauliSum out(n_qubits);
  out.add(PauliWord::identity(n_qubits), identity);
  for (const auto& [w, c] : terms) out.add(w, c);
  return out;
}

SeqRotPlan build_seqrot(const AnticommutingObservable& a) {
  validate(a);
  SeqRotPlan plan;
  plan.n_qubits = a.words.front().n_qubits();
  const std::size_t k = a.target;
  double running = a.r[k];
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == k) continue;
    // exp(theta/2 * P_k P_j) moves r_j onto P_k with a non-negative result.
    const double theta = std::atan2(a.r[j], running);
    const auto [word, sign] = generator_of(a.words[k], a.words[j]);
    plan.steps.push_back({word, sign * theta});
    running = std::hypot(running, a.r[j]);
  }
  return plan;
}

LcuOperator build_lcu(const AnticommutingObservable& a) {
  validate(a);
  LcuOperator lcu;
  lcu.n_qubits = a.words.front().n_qubits();
  if (a.size() == 1) return lcu;
  const std::size_t k = a.target;
  const double rk = std::clamp(a.r[k], -1.0, 1.0);
  const double phi = std::acos(rk);
  const double s = std::sin(phi);
  lcu.identity = std::cos(phi / 2.0);
  std::vector<double> delta(a.size(), 0.0);
  if (s < kNormTolerance) {
    if (rk > 0.0) return lcu;
    // A = -P_k: a half turn about any anticommuting partner flips the sign.
    delta[k == 0 ? 1 : 0] = 1.0;
  } else {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != k) delta[j] = a.r[j] / s;
    }
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == k || delta[j] == 0.0) continue;
    const auto [word, sign] = generator_of(a.words[k], a.words[j]);
    lcu.terms.emplace_back(word,
                           complex{0.0, sign * std::sin(phi / 2.0) * delta[j]});
  }
  return lcu;
}

PauliSum rotate(const PauliSum& h, const PauliWord& word, double angle) {
  PauliSum out(h.n_qubits());
  const double c = std::cos(angle), s = std::sin(angle);
  for (const auto& [p, coeff] : h) {
    if (commutes(word, p)) {
      out.add(p, coeff);
      continue;
    }
    const PhasedWord wp = multiply(word, p);
    out.add(p, coeff * c);
    out.add(wp.word, coeff * complex{0.0, s} * phase_value(wp.phase));
  }
  return chop_imaginary(out);
}

PhasedWord rotate_clifford(const PhasedWord& p, const PauliWord& word) {
  if (commutes(word, p.word)) return p;
  const PhasedWord wp = multiply(word, p.word);
  return {(p.phase + wp.phase + 1) % 4, wp.word};
}

PauliSum rotate_clifford(const PauliSum& h, const PauliWord& word) {
  PauliSum out(h.n_qubits());
  for (const auto& [p, coeff] : h) {
    const PhasedWord r = rotate_clifford(PhasedWord{0, p}, word);
    out.add(r.word, coeff * phase_value(r.phase));
  }
  return out;
}

PauliSum conjugate(const PauliSum& h, const SeqRotPlan& plan) {
  if (h.n_qubits() != plan.n_qubits && !plan.steps.empty()) {
    throw DimensionMismatch("rotation and Hamiltonian qubit counts differ");
  }
  PauliSum out = h;
  for (const auto& step : plan.steps) out = rotate(out, step.word, step.angle);
  return out;
}

PauliSum conjugate(const PauliSum& h, const LcuOperator& lcu) {
  if (h.n_qubits() != lcu.n_qubits) {
    throw DimensionMismatch("LCU and Hamiltonian qubit counts differ");
  }
  std::vector<std::pair<PauliWord, complex>> r;
  r.emplace_back(PauliWord::identity(lcu.n_qubits), lcu.identity);
  for (const auto& t : lcu.terms) r.push_back(t);
  PauliSum out(h.n_qubits());
  for (const auto& [p, coeff] : h) {
    for (const auto& [qa, ca] : r) {
      const PhasedWord left = multiply(qa, p);
      for (const auto& [qb, cb] : r) {
        const PhasedWord full = multiply(left.word, qb);
        out.add(full.word, coeff * ca * std::conj(cb) *
                               phase_value(left.phase + full.phase));
      }
    }
  }
  return chop_imaginary(out);
}

std::size_t lcu_term_bound(std::size_t h_terms, std::size_t a_size) {
  if (a_size == 0) return h_terms;
  const std::size_t m = a_size - 1;
  return h_terms * (1 + m + (m * (m > 0 ? m - 1 : 0)) / 2);
}

TermGrowth term_growth_report(const PauliSum& h,
                              const AnticommutingObservable& a) {
  TermGrowth g;
  g.seqrot = conjugate(h, build_seqrot(a)).size();
  g.lcu = conjugate(h, build_lcu(a)).size();
  g.lcu_bound = lcu_term_bound(h.size(), a.size());
  return g;
}

}  // namespace csvqe
