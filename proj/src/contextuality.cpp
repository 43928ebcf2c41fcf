// SPDX-License-Identifier: MIT

#include <csvqe/contextuality.hpp>
#include <csvqe/errors.hpp>

#include <algorithm>
#include <bit>
#include <cmath>

namespace csvqe {

namespace {

void require_same_lengths(const std::vector<PauliWord>& S) {
  for (const auto& w : S) {
    if (w.n_qubits() != S.front().n_qubits()) throw MixedLengths();
  }
}

using CommutationMatrix = std::vector<std::vector<char>>;

CommutationMatrix commutation_matrix(const std::vector<PauliWord>& S) {
  CommutationMatrix m(S.size(), std::vector<char>(S.size(), 1));
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      m[i][j] = m[j][i] = commutes(S[i], S[j]) ? 1 : 0;
    }
  }
  return m;
}

// Commutation is an equivalence relation on the non-central words.
bool classes_consistent(const CommutationMatrix& m) {
  const std::size_t size = m.size();
  std::vector<std::size_t> T;
  for (std::size_t i = 0; i < size; ++i) {
    if (std::find(m[i].begin(), m[i].end(), 0) != m[i].end()) T.push_back(i);
  }
  std::vector<char> seen(size, 0);
  for (std::size_t i : T) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j : T) {
      if (m[i][j]) cls.push_back(j);
    }
    for (std::size_t a : cls) {
      if (seen[a]) return false;
      seen[a] = 1;
      std::size_t count = 0;
      for (std::size_t j : T) count += m[a][j] ? 1 : 0;
      if (count != cls.size()) return false;
      for (std::size_t b : cls) {
        if (!m[a][b]) return false;
      }
    }
  }
  return true;
}

// Echelon basis over GF(2)^(2n); row k carries none of the pivots of rows < k.
class Gf2Basis {
 public:
  struct Reduced {
    std::uint64_t x, z, combo;
  };

  Reduced reduce(std::uint64_t x, std::uint64_t z) const {
    Reduced r{x, z, 0};
    for (const auto& row : rows_) {
      const bool hit = row.pivot < 64 ? ((r.x >> row.pivot) & 1U)
                                      : ((r.z >> (row.pivot - 64)) & 1U);
      if (hit) {
        r.x ^= row.x;
        r.z ^= row.z;
        r.combo ^= row.combo;
      }
    }
    return r;
  }

  // Returns true and records the vector as generator `index` if independent.
  bool insert(std::uint64_t x, std::uint64_t z, std::size_t index) {
    Reduced r = reduce(x, z);
    if (r.x == 0 && r.z == 0) return false;
    const int pivot =
        r.x != 0 ? std::countr_zero(r.x) : 64 + std::countr_zero(r.z);
    rows_.push_back({r.x, r.z, r.combo ^ (std::uint64_t{1} << index), pivot});
    return true;
  }

 private:
  struct Row {
    std::uint64_t x, z, combo;
    int pivot;
  };
  std::vector<Row> rows_;
};

// Expresses `target` as sign * G[i0] * G[i1] * ... * (tail if given).
InferenceEntry infer(const PauliWord& target, const std::vector<PauliWord>& G,
                     const Gf2Basis& basis, const PauliWord* tail,
                     std::optional<std::size_t> clique) {
  PauliWord factor = target;
  if (tail != nullptr) factor = multiply(target, *tail).word;
  const auto r = basis.reduce(factor.x_mask(), factor.z_mask());
  if (r.x != 0 || r.z != 0) {
    throw InferenceFailure("word " + target.str() +
                           " is not generated by G and the representatives");
  }
  InferenceEntry e;
  e.clique = clique;
  PhasedWord acc{0, PauliWord::identity(target.n_qubits())};
  for (std::size_t i = 0; i < G.size(); ++i) {
    if ((r.combo >> i) & 1U) {
      e.generators.push_back(i);
      const PhasedWord p = multiply(acc.word, G[i]);
      acc = {(acc.phase + p.phase) % 4, p.word};
    }
  }
  if (tail != nullptr) {
    const PhasedWord p = multiply(acc.word, *tail);
    acc = {(acc.phase + p.phase) % 4, p.word};
  }
  if (acc.word != target || acc.phase % 2 != 0) {
    throw InferenceFailure("inconsistent phase while inferring " +
                           target.str());
  }
  // acc = i^phase * target, so target = i^-phase * acc.
  e.sign = acc.phase == 0 ? 1 : -1;
  return e;
}

}  // namespace

ZTSplit partition_commuting(const std::vector<PauliWord>& S) {
  ZTSplit out;
  if (S.empty()) return out;
  require_same_lengths(S);
  const auto m = commutation_matrix(S);
  for (std::size_t i = 0; i < S.size(); ++i) {
    const bool central = std::find(m[i].begin(), m[i].end(), 0) == m[i].end();
    (central ? out.Z : out.T).push_back(S[i]);
  }
  return out;
}

bool is_contextual(const std::vector<PauliWord>& S) {
  const auto T = partition_commuting(S).T;
  const std::size_t t = T.size();
  const auto m = commutation_matrix(T);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i || !m[i][j]) continue;
      for (std::size_t k = j + 1; k < t; ++k) {
        if (k != i && m[i][k] && !m[j][k]) return true;
      }
    }
  }
  return false;
}

std::vector<std::vector<PauliWord>> decompose_cliques(
    const std::vector<PauliWord>& T) {
  std::vector<std::vector<PauliWord>> cliques;
  if (T.empty()) return cliques;
  require_same_lengths(T);
  for (const auto& w : T) {
    bool placed = false;
    for (auto& c : cliques) {
      if (commutes(c.front(), w)) {
        c.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) cliques.push_back({w});
  }
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a; b < cliques.size(); ++b) {
      for (const auto& u : cliques[a]) {
        for (const auto& v : cliques[b]) {
          if (commutes(u, v) != (a == b)) throw NotNoncontextual();
        }
      }
    }
  }
  return cliques;
}

NoncontextualSplit extract_noncontextual(const PauliSum& H) {
  std::vector<std::pair<PauliWord, complex>> order(H.begin(), H.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  NoncontextualSplit out{PauliSum(H.n_qubits()), PauliSum(H.n_qubits()), {}};
  CommutationMatrix m;
  for (const auto& [w, c] : order) {
    CommutationMatrix trial = m;
    for (std::size_t i = 0; i < out.accepted.size(); ++i) {
      trial[i].push_back(commutes(out.accepted[i], w) ? 1 : 0);
    }
    trial.emplace_back(out.accepted.size() + 1, 1);
    for (std::size_t i = 0; i < out.accepted.size(); ++i) {
      trial.back()[i] = trial[i].back();
    }
    if (classes_consistent(trial)) {
      m = std::move(trial);
      out.accepted.push_back(w);
      out.noncontextual.add(w, c);
    } else {
      out.contextual.add(w, c);
    }
  }
  return out;
}

NoncontextualStructure build_generators(
    const std::vector<PauliWord>& Z,
    const std::vector<std::vector<PauliWord>>& cliques,
    const GeneratorOptions& options) {
  NoncontextualStructure s;
  if (!Z.empty()) {
    s.n_qubits = Z.front().n_qubits();
  } else if (!cliques.empty() && !cliques.front().empty()) {
    s.n_qubits = cliques.front().front().n_qubits();
  }
  s.Z = Z;
  s.cliques = cliques;
  for (auto& c : s.cliques) {
    if (c.empty()) throw std::invalid_argument("empty clique");
    for (const auto& pref : options.preferred_reps) {
      auto it = std::find(c.begin(), c.end(), pref);
      if (it != c.end()) {
        std::rotate(c.begin(), it, it + 1);
        break;
      }
    }
    s.reps.push_back(c.front());
  }

  // Candidate generators G' = Z followed by every A_k^(j), in order.
  std::vector<PauliWord> candidates = Z;
  s.A_factors.resize(s.cliques.size());
  for (std::size_t j = 0; j < s.cliques.size(); ++j) {
    for (std::size_t k = 1; k < s.cliques[j].size(); ++k) {
      const PhasedWord a = multiply(s.cliques[j][k], s.reps[j]);
      s.A_factors[j].push_back(a);
      candidates.push_back(a.word);
    }
  }
  Gf2Basis basis;
  for (const auto& w : candidates) {
    if (s.G.size() >= 64) {
      throw InferenceFailure("more than 64 independent generators");
    }
    if (basis.insert(w.x_mask(), w.z_mask(), s.G.size())) s.G.push_back(w);
  }
  for (std::size_t a = 0; a < s.G.size(); ++a) {
    for (std::size_t b = a + 1; b < s.G.size(); ++b) {
      if (!commutes(s.G[a], s.G[b])) {
        throw InferenceFailure("generators " + s.G[a].str() + " and " +
                               s.G[b].str() + " anticommute");
      }
    }
  }

  for (const auto& w : Z) {
    s.inference_table[w] = infer(w, s.G, basis, nullptr, std::nullopt);
  }
  for (std::size_t j = 0; j < s.cliques.size(); ++j) {
    for (const auto& w : s.cliques[j]) {
      s.inference_table[w] = infer(w, s.G, basis, &s.reps[j], j);
    }
  }
  return s;
}

NoncontextualStructure analyze_noncontextual(
    const std::vector<PauliWord>& words, const GeneratorOptions& options) {
  const ZTSplit zt = partition_commuting(words);
  auto s = build_generators(zt.Z, decompose_cliques(zt.T), options);
  if (!words.empty()) s.n_qubits = words.front().n_qubits();
  return s;
}

std::size_t symplectic_rank(const std::vector<PauliWord>& words) {
  Gf2Basis basis;
  std::size_t rank = 0;
  for (const auto& w : words) {
    if (basis.insert(w.x_mask(), w.z_mask(), rank % 64)) ++rank;
  }
  return rank;
}

std::vector<std::vector<PauliWord>> peres_mermin_square() {
  const char* grid[3][3] = {
      {"IZ", "ZI", "ZZ"}, {"XI", "IX", "XX"}, {"XZ", "ZX", "YY"}};
  std::vector<std::vector<PauliWord>> out(3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[r].push_back(PauliWord::parse(grid[r][c]));
  }
  return out;
}

PeresMerminResult peres_mermin_demo() {
  const auto sq = peres_mermin_square();
  std::vector<std::vector<std::pair<int, int>>> lines;
  for (int r = 0; r < 3; ++r) lines.push_back({{r, 0}, {r, 1}, {r, 2}});
  for (int c = 0; c < 3; ++c) lines.push_back({{0, c}, {1, c}, {2, c}});

  PeresMerminResult out;
  for (const auto& line : lines) {
    PhasedWord acc{0, PauliWord::identity(2)};
    for (const auto& [r, c] : line) {
      const PhasedWord p = multiply(acc.word, sq[r][c]);
      acc = {(acc.phase + p.phase) % 4, p.word};
    }
    if (!acc.word.is_identity() || acc.phase % 2 != 0) {
      throw std::logic_error("Peres-Mermin line does not multiply to +-I");
    }
    out.line_signs.push_back(acc.phase == 0 ? 1 : -1);
  }
  // Each line enters with the sign of its operator product.
  for (int s : out.line_signs) out.quantum_value += s * s;

  double best = -1e300;
  for (unsigned a = 0; a < 512; ++a) {
    auto v = [&](int r, int c) { return ((a >> (3 * r + c)) & 1U) ? -1 : 1; };
    double total = 0.0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      int prod = 1;
      for (const auto& [r, c] : lines[l]) prod *= v(r, c);
      total += out.line_signs[l] * prod;
    }
    best = std::max(best, total);
  }
  out.classical_bound = best;
  return out;
}

}  // namespace csvqe
