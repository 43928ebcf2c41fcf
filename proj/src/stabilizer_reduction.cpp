// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/stabilizer_reduction.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace csvqe {

namespace {

PhasedWord signed_word(const PauliWord& w, int sign) {
  return {sign < 0 ? 2 : 0, w};
}

int sign_of_phase(const PhasedWord& p) {
  if (p.phase % 2 != 0) throw std::logic_error("non-Hermitian stabilizer image");
  return p.phase == 0 ? 1 : -1;
}

// Image of A(r) under the up stage: +target for |A| >= 2, sign(r) * word
// when A is a single word.
PhasedWord rotated_A(const AnticommutingObservable& a) {
  if (a.size() == 1) return signed_word(a.words[0], a.r[0] < 0.0 ? -1 : 1);
  return signed_word(a.target_word(), 1);
}

PhasedWord conjugate_word(const PhasedWord& p, const RotationPlan& plan) {
  if (!plan.has_up_stage()) return p;
  PauliSum single(p.word.n_qubits());
  single.add(p.word, phase_value(p.phase));
  const PauliSum out = plan.seqrot ? conjugate(single, *plan.seqrot)
                                   : conjugate(single, *plan.lcu);
  if (out.size() != 1) return p;  // caller verifies commutation with R
  const auto& [w, c] = *out.begin();
  if (std::abs(std::abs(c) - 1.0) > 1e-9) {
    throw std::logic_error("rotation did not map a word to a word");
  }
  const int phase = std::abs(c.real() - 1.0) < 1e-9    ? 0
                    : std::abs(c.imag() - 1.0) < 1e-9  ? 1
                    : std::abs(c.real() + 1.0) < 1e-9  ? 2
                                                       : 3;
  return {phase, w};
}

}  // namespace

std::string to_string(Method m) { return m == Method::SeqRot ? "seqrot" : "lcu"; }

std::string StabilizerSet::label(std::size_t i) const {
  const auto& e = entries.at(i);
  if (e.is_A) return "+A(r)";
  return std::string(e.sign < 0 ? "-" : "+") + e.word.str();
}

StabilizerSet build_w_all(const NoncontextualStructure& structure,
                          const NoncontextualState& state,
                          const std::optional<PauliWord>& target) {
  StabilizerSet w;
  if (!structure.cliques.empty()) {
    AnticommutingObservable a;
    a.words = structure.reps;
    a.r = state.r;
    a.target = largest_magnitude_index(a.r);
    if (target) {
      auto it = std::find(a.words.begin(), a.words.end(), *target);
      if (it == a.words.end()) {
        throw UnknownWord("target " + target->str() +
                          " is not a clique representative");
      }
      a.target = static_cast<std::size_t>(it - a.words.begin());
    }
    validate(a);
    w.A = a;
    w.entries.push_back({true, a.target_word(), 1});
  }
  for (std::size_t i = 0; i < structure.G.size(); ++i) {
    w.entries.push_back({false, structure.G[i], state.q.at(i)});
  }
  return w;
}

PhasedWord apply_plan(const PhasedWord& p, const RotationPlan& plan) {
  PhasedWord out = conjugate_word(p, plan);
  for (const auto& c : plan.clifford) out = rotate_clifford(out, c);
  return out;
}

RotationPlan build_u(const StabilizerSet& w_all,
                     const std::vector<std::size_t>& subset, Method method,
                     bool force_up_stage) {
  RotationPlan plan;
  if (w_all.entries.empty()) return plan;
  const std::size_t n = w_all.entries.front().word.n_qubits();
  plan.n_qubits = n;
  std::vector<std::size_t> chosen = subset;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (chosen.size() > n) {
    throw DependentStabilizers("more stabilizers than qubits");
  }

  bool want_up = force_up_stage;
  for (std::size_t i : chosen) {
    if (i >= w_all.size()) throw IndexOutOfRange("stabilizer index");
    want_up = want_up || w_all.entries[i].is_A;
  }
  if (want_up && w_all.A && w_all.A->size() > 1) {
    if (method == Method::SeqRot) {
      plan.seqrot = build_seqrot(*w_all.A);
    } else {
      plan.lcu = build_lcu(*w_all.A);
    }
  }

  std::uint64_t assigned = 0;
  for (std::size_t i : chosen) {
    const auto& e = w_all.entries[i];
    PhasedWord p = e.is_A ? rotated_A(*w_all.A)
                          : conjugate_word(signed_word(e.word, e.sign), plan);
    for (const auto& c : plan.clifford) p = rotate_clifford(p, c);

    const std::uint64_t free_support = p.word.support() & ~assigned;
    if (free_support == 0) {
      throw DependentStabilizers("stabilizer " + w_all.label(i) +
                                 " is generated by earlier entries");
    }
    if (p.word.is_diagonal()) {
      const int l = std::countr_zero(free_support);
      if (p.word.support() == (std::uint64_t{1} << l)) {
        plan.entries.push_back(i);
        plan.qubits.push_back(l);
        plan.sign_ledger.push_back(sign_of_phase(p));
        assigned |= std::uint64_t{1} << l;
        continue;
      }
      const PauliWord d = PauliWord::single(n, l, 'Y');
      plan.clifford.push_back(d);
      p = rotate_clifford(p, d);
    }
    const std::uint64_t free_x = p.word.x_mask() & ~assigned;
    if (free_x == 0) {
      throw DependentStabilizers("stabilizer " + w_all.label(i) +
                                 " anticommutes with an earlier entry");
    }
    const int l = std::countr_zero(free_x);
    // Swap X and Y at qubit l; the result anticommutes with p only there.
    const PauliWord b(n, p.word.x_mask(),
                      p.word.z_mask() ^ (std::uint64_t{1} << l));
    plan.clifford.push_back(b);
    p = rotate_clifford(p, b);
    if (p.word != PauliWord::single(n, l, 'Z')) {
      throw std::logic_error("Clifford step did not reach a single Z");
    }
    plan.entries.push_back(i);
    plan.qubits.push_back(l);
    plan.sign_ledger.push_back(sign_of_phase(p));
    assigned |= std::uint64_t{1} << l;
  }
  return plan;
}

PauliSum apply_clifford_stage(const PauliSum& h, const RotationPlan& plan) {
  PauliSum out(h.n_qubits());
  for (const auto& [w, c] : h) {
    PhasedWord p{0, w};
    for (const auto& g : plan.clifford) p = rotate_clifford(p, g);
    out.add(p.word, c * phase_value(p.phase));
  }
  return out;
}

PauliSum apply_plan(const PauliSum& h, const RotationPlan& plan) {
  PauliSum up = h;
  if (plan.seqrot) up = conjugate(h, *plan.seqrot);
  if (plan.lcu) up = conjugate(h, *plan.lcu);
  return apply_clifford_stage(up, plan);
}

SubspaceProjector projector_for(const RotationPlan& plan,
                                const std::vector<std::size_t>& entries) {
  SubspaceProjector proj;
  for (std::size_t e : entries) {
    auto it = std::find(plan.entries.begin(), plan.entries.end(), e);
    if (it == plan.entries.end()) {
      throw IndexOutOfRange("entry is not mapped by this plan");
    }
    const std::size_t k = static_cast<std::size_t>(it - plan.entries.begin());
    proj.fixed[plan.qubits[k]] = plan.sign_ledger[k] > 0 ? 0 : 1;
  }
  return proj;
}

SubspaceProjector projector_for(const RotationPlan& plan) {
  return projector_for(plan, plan.entries);
}

PauliSum project(const PauliSum& h_rot, const SubspaceProjector& projector) {
  std::uint64_t fixed_mask = 0, minus_mask = 0;
  for (const auto& [q, bit] : projector.fixed) {
    if (q >= h_rot.n_qubits()) throw IndexOutOfRange("fixed qubit index");
    fixed_mask |= std::uint64_t{1} << q;
    if (bit) minus_mask |= std::uint64_t{1} << q;
  }
  PauliSum out(h_rot.n_qubits() - projector.fixed.size());
  for (const auto& [w, c] : h_rot) {
    if (w.x_mask() & fixed_mask) continue;
    const double s = (std::popcount(w.z_mask() & minus_mask) & 1) ? -1.0 : 1.0;
    out.add(w.remove_qubits(fixed_mask), c * s);
  }
  return out;
}

namespace {

// Caches the conjugated Hamiltonians shared by every subset.
class Reducer {
 public:
  Reducer(const PauliSum& h, const StabilizerSet& w_all,
          const ReductionOptions& options)
      : h_(h), w_all_(w_all), options_(options) {
    if (options.legacy_full_rotation && !w_all.entries.empty()) {
      std::vector<std::size_t> all(w_all.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      legacy_plan_ = build_u(w_all, all, options.method, true);
      legacy_h_ = apply_plan(h, *legacy_plan_);
    }
  }

  ReductionLevel reduce(std::vector<std::size_t> subset,
                        bool compute_energy) {
    std::sort(subset.begin(), subset.end());
    ReductionLevel level;
    level.fixed = subset;
    if (legacy_plan_) {
      level.hamiltonian = project(*legacy_h_, projector_for(*legacy_plan_, subset));
    } else {
      const RotationPlan plan = build_u(w_all_, subset, options_.method);
      const PauliSum* base = &h_;
      if (plan.has_up_stage()) {
        if (!up_h_) up_h_ = plan.seqrot ? conjugate(h_, *plan.seqrot)
                                        : conjugate(h_, *plan.lcu);
        base = &*up_h_;
      }
      level.hamiltonian =
          project(apply_clifford_stage(*base, plan), projector_for(plan));
    }
    level.qubits = level.hamiltonian.n_qubits();
    if (compute_energy) {
      level.energy = ground_energy(level.hamiltonian, options_.eigen);
    }
    return level;
  }

 private:
  const PauliSum& h_;
  const StabilizerSet& w_all_;
  const ReductionOptions& options_;
  std::optional<RotationPlan> legacy_plan_;
  std::optional<PauliSum> legacy_h_;
  std::optional<PauliSum> up_h_;
};

}  // namespace

ReductionLevel reduce_with(const PauliSum& h, const StabilizerSet& w_all,
                           const std::vector<std::size_t>& subset,
                           const ReductionOptions& options,
                           bool compute_energy) {
  Reducer r(h, w_all, options);
  return r.reduce(subset, compute_energy);
}

SelectionResult select_stabilizers(const PauliSum& h,
                                   const StabilizerSet& w_all,
                                   const ReductionOptions& options) {
  const std::size_t m = w_all.size();
  if (h.n_qubits() > kMaxEigenQubits) {
    throw TooLargeForExactEigensolve(
        std::to_string(h.n_qubits()) + " qubits exceeds the exact limit of " +
        std::to_string(kMaxEigenQubits));
  }
  if (m >= 63) throw TooLargeForExactEigensolve("too many stabilizers");
  Reducer reducer(h, w_all, options);
  SelectionResult out;
  out.levels.resize(m + 1);
  out.levels[0] = reducer.reduce({}, true);

  const std::uint64_t subsets = (std::uint64_t{1} << m) - 1;
  out.brute_force = subsets <= options.brute_force_limit;
  if (out.brute_force) {
    std::vector<bool> have(m + 1, false);
    have[0] = true;
    for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) subset.push_back(i);
      }
      ReductionLevel level = reducer.reduce(subset, true);
      const std::size_t k = subset.size();
      auto& best = out.levels[k];
      // Ties keep the lexicographically smallest index list.
      if (!have[k] || level.energy < best.energy - 1e-12 ||
          (std::abs(level.energy - best.energy) <= 1e-12 &&
           level.fixed < best.fixed)) {
        best = std::move(level);
        have[k] = true;
      }
    }
    return out;
  }

  std::vector<std::size_t> current(m);
  for (std::size_t i = 0; i < m; ++i) current[i] = i;
  out.levels[m] = reducer.reduce(current, true);
  while (current.size() > 1) {
    std::optional<ReductionLevel> best;
    std::size_t best_pos = 0;
    for (std::size_t pos = 0; pos < current.size(); ++pos) {
      std::vector<std::size_t> trial = current;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
      ReductionLevel level = reducer.reduce(trial, true);
      if (!best || level.energy < best->energy - 1e-12) {
        best = std::move(level);
        best_pos = pos;
      }
    }
    out.removal_order.push_back(current[best_pos]);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(best_pos));
    out.levels[current.size()] = std::move(*best);
  }
  if (!current.empty()) out.removal_order.push_back(current.front());
  return out;
}

PipelineResult run_pipeline(const PauliSum& h,
                            const ReductionOptions& options) {
  PipelineResult p;
  p.split = extract_noncontextual(h);
  p.structure = analyze_noncontextual(p.split.accepted, options.generators);
  p.structure.n_qubits = h.n_qubits();
  p.solution =
      solve_noncontextual(p.split.noncontextual, p.structure, options.optimizer);
  p.w_all = build_w_all(p.structure, p.solution.state, options.target);
  p.selection = select_stabilizers(h, p.w_all, options);
  p.full_energy = p.selection.levels[0].energy;
  if (!options.legacy_full_rotation) return p;
  p.full_energy = ground_energy(h, options.eigen);
  return p;
}

ReductionReport cs_vqe_reduce(const PauliSum& h, std::size_t qubits_to_keep,
                              const ReductionOptions& options) {
  const std::size_t n = h.n_qubits();
  if (qubits_to_keep > n) {
    throw IndexOutOfRange("cannot keep more qubits than the Hamiltonian has");
  }
  const PipelineResult p = run_pipeline(h, options);
  const std::size_t fix = n - qubits_to_keep;
  if (fix > p.w_all.size()) {
    throw IndexOutOfRange("only " + std::to_string(p.w_all.size()) +
                          " stabilizers are available to fix");
  }
  const ReductionLevel& level = p.selection.levels[fix];
  ReductionReport r;
  r.reduced = level.hamiltonian;
  r.qubits = level.qubits;
  r.energy = level.energy;
  r.noncontextual_energy = p.solution.energy;
  r.full_energy = p.full_energy;
  r.terms_before = h.size();
  r.terms_after = level.hamiltonian.size();
  for (std::size_t i : level.fixed) r.fixed.push_back(p.w_all.label(i));
  return r;
}

}  // namespace csvqe
