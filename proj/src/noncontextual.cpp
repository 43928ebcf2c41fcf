// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/noncontextual.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace csvqe {

namespace {

int generator_product(const InferenceEntry& e, const std::vector<int>& q) {
  int p = e.sign;
  for (std::size_t i : e.generators) p *= q[i];
  return p;
}

void check_dimensions(const NoncontextualStructure& s,
                      const NoncontextualState& st) {
  if (st.q.size() != s.G.size() || st.r.size() != s.cliques.size()) {
    throw DimensionMismatch("state does not match structure: |q| = " +
                            std::to_string(st.q.size()) + ", |r| = " +
                            std::to_string(st.r.size()));
  }
}

// E(q, r) = offset + slope . r for a fixed q.
struct Branch {
  double offset = 0.0;
  std::vector<double> slope;
};

struct CompiledTerm {
  double coeff;
  InferenceEntry entry;
};

Branch branch_for(const std::vector<CompiledTerm>& terms,
                  const std::vector<int>& q, std::size_t n_cliques) {
  Branch b;
  b.slope.assign(n_cliques, 0.0);
  for (const auto& t : terms) {
    const double v = t.coeff * generator_product(t.entry, q);
    if (t.entry.clique) {
      b.slope[*t.entry.clique] += v;
    } else {
      b.offset += v;
    }
  }
  return b;
}

}  // namespace

double infer_expectation(const PauliWord& word,
                         const NoncontextualStructure& structure,
                         const NoncontextualState& state) {
  check_dimensions(structure, state);
  auto it = structure.inference_table.find(word);
  if (it == structure.inference_table.end()) {
    throw UnknownWord("word " + word.str() + " is not in the structure");
  }
  const double v = generator_product(it->second, state.q);
  return it->second.clique ? v * state.r[*it->second.clique] : v;
}

double noncontextual_energy(const PauliSum& h_noncon,
                            const NoncontextualStructure& structure,
                            const NoncontextualState& state) {
  check_dimensions(structure, state);
  double e = 0.0;
  for (const auto& [w, c] : h_noncon) {
    if (w.is_identity()) {
      e += c.real();
      continue;
    }
    e += c.real() * infer_expectation(w, structure, state);
  }
  return e;
}

std::vector<double> hypersphere_point(const std::vector<double>& angles,
                                      std::size_t dim) {
  std::vector<double> r(dim, 0.0);
  if (dim == 0) return r;
  double s = 1.0;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    r[i] = s * std::cos(angles[i]);
    s *= std::sin(angles[i]);
  }
  r[dim - 1] = s;
  return r;
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, double tolerance,
    std::size_t max_evaluations) {
  const std::size_t n = start.size();
  NelderMeadResult res;
  if (n == 0) {
    res.x = start;
    res.value = f(start);
    res.evaluations = 1;
    return res;
  }
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> idx(n + 1);
  while (true) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = idx.front(), worst = idx.back(),
                      second = idx[n - 1];
    if (vals[worst] - vals[best] < tolerance || evals >= max_evaluations) {
      res.x = pts[best];
      res.value = vals[best];
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d] / n;
    }
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d) {
        x[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
      }
      return x;
    };
    const auto xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const auto xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const auto xc = along(outside ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d) {
        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
      }
      vals[i] = eval(pts[i]);
    }
  }
  res.evaluations = evals;
  return res;
}

SolveResult solve_noncontextual(const PauliSum& h_noncon,
                                const NoncontextualStructure& structure,
                                const OptimizerConfig& config) {
  const std::size_t g = structure.G.size();
  if (g > config.max_generators) throw TooManyGenerators(g);
  const std::size_t nc = structure.cliques.size();

  std::vector<CompiledTerm> terms;
  double constant = 0.0;
  for (const auto& [w, c] : h_noncon) {
    if (w.is_identity()) {
      constant += c.real();
      continue;
    }
    auto it = structure.inference_table.find(w);
    if (it == structure.inference_table.end()) {
      throw UnknownWord("word " + w.str() + " is not in the structure");
    }
    terms.push_back({c.real(), it->second});
  }

  struct Candidate {
    std::vector<int> q;
    double bound;
  };
  std::vector<Candidate> candidates;
  const std::uint64_t count = std::uint64_t{1} << g;
  candidates.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::vector<int> q(g);
    // Bit (g-1-i) set means q_i = +1, so ascending bits is ascending q.
    for (std::size_t i = 0; i < g; ++i) {
      q[i] = ((bits >> (g - 1 - i)) & 1U) ? 1 : -1;
    }
    const Branch b = branch_for(terms, q, nc);
    double norm = 0.0;
    for (double v : b.slope) norm += v * v;
    candidates.push_back({std::move(q), constant + b.offset - std::sqrt(norm)});
  }
  // Lowest analytic bound first; candidates that cannot reach the incumbent
  // are skipped.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.bound < b.bound;
                   });

  SolveResult best;
  bool have = false;
  constexpr double kTie = 1e-9;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& cand = candidates[ci];
    if (have && cand.bound > best.energy + kTie) break;
    const Branch b = branch_for(terms, cand.q, nc);
    auto objective = [&](const std::vector<double>& angles) {
      const auto r = hypersphere_point(angles, nc);
      double e = b.offset;
      for (std::size_t j = 0; j < nc; ++j) e += b.slope[j] * r[j];
      return e;
    };

    std::vector<double> r_best;
    double e_best = 0.0;
    if (nc == 0) {
      e_best = b.offset;
    } else if (nc == 1) {
      r_best = {b.slope[0] > 0.0 ? -1.0 : 1.0};
      e_best = b.offset + b.slope[0] * r_best[0];
    } else {
      std::uint64_t bits = 0;
      for (int v : cand.q) bits = (bits << 1) | (v > 0 ? 1U : 0U);
      std::mt19937_64 rng(config.seed ^ (0x9E3779B97F4A7C15ULL * (bits + 1)));
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      bool first = true;
      for (std::size_t rs = 0; rs < std::max<std::size_t>(1, config.restarts);
           ++rs) {
        std::vector<double> start(nc - 1);
        for (auto& a : start) a = angle(rng);
        const auto nm = nelder_mead(objective, start, 0.5, config.tolerance,
                                    config.max_evaluations);
        if (first || nm.value < e_best) {
          e_best = nm.value;
          r_best = hypersphere_point(nm.x, nc);
          first = false;
        }
      }
      // The objective is linear in r, so -slope/|slope| polishes the search.
      double norm = 0.0;
      for (double v : b.slope) norm += v * v;
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        std::vector<double> r_exact(nc);
        double e_exact = b.offset;
        for (std::size_t j = 0; j < nc; ++j) {
          r_exact[j] = -b.slope[j] / norm;
          e_exact += b.slope[j] * r_exact[j];
        }
        if (e_exact <= e_best) {
          e_best = e_exact;
          r_best = std::move(r_exact);
        }
      }
    }
    const double e = constant + e_best;
    best.per_q_energies[cand.q] = e;
    const bool better = !have || e < best.energy - kTie ||
                        (std::abs(e - best.energy) <= kTie &&
                         cand.q < best.state.q);
    if (better) {
      best.state = {cand.q, r_best};
      best.energy = e;
      have = true;
    }
  }
  // Report the energy exactly as evaluated at the returned state.
  best.energy = noncontextual_energy(h_noncon, structure, best.state);
  return best;
}

}  // namespace csvqe
