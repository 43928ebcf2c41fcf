// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/measurement.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace csvqe {

std::vector<std::vector<PauliWord>> clique_cover(const PauliSum& h) {
  const std::vector<PauliWord> words = h.words();  // lexicographic
  const std::size_t m = words.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (commutes(words[i], words[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return adj[a].size() > adj[b].size();
  });

  std::vector<int> color(m, -1);
  std::vector<std::vector<PauliWord>> cliques;
  std::vector<char> used;
  for (std::size_t v : order) {
    used.assign(cliques.size() + 1, 0);
    for (std::size_t u : adj[v]) {
      if (color[u] >= 0) used[static_cast<std::size_t>(color[u])] = 1;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = static_cast<int>(c);
    if (c == cliques.size()) cliques.emplace_back();
    cliques[c].push_back(words[v]);
  }
  return cliques;
}

MeasurementPlan build_measurement_plan(const PauliSum& h, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double imag = h.max_imag();
  if (imag > 1e-12) throw NonHermitian(imag);
  MeasurementPlan plan;
  plan.n_qubits = h.n_qubits();
  plan.epsilon = epsilon;
  for (auto& words : clique_cover(h)) {
    MeasurementClique c;
    c.words = std::move(words);
    double sq = 0.0;
    for (const auto& w : c.words) {
      c.coeffs.push_back(h.coeff(w).real());
      sq += c.coeffs.back() * c.coeffs.back();
    }
    c.gamma = std::sqrt(sq);
    c.observable.words = c.words;
    for (double x : c.coeffs) c.observable.r.push_back(x / c.gamma);
    c.observable.target = largest_magnitude_index(c.observable.r);
    if (c.size() > 1) {
      c.rotation = build_lcu(c.observable);
    } else if (c.coeffs[0] < 0.0) {
      c.measured_sign = -1;
    }
    plan.cliques.push_back(std::move(c));
  }
  return plan;
}

ShotEstimate estimate_shots(const MeasurementPlan& plan,
                            const std::map<PauliWord, double>& variances) {
  return estimate_shots(plan, variances, plan.epsilon);
}

ShotEstimate estimate_shots(const MeasurementPlan& plan,
                            const std::map<PauliWord, double>& variances,
                            double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  for (const auto& [w, v] : variances) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidVariance("variance of " + w.str() + " is outside [0, 1]");
    }
  }
  double sum_l1 = 0.0, sum_l2 = 0.0, sum_weighted = 0.0;
  for (const auto& c : plan.cliques) {
    double l1 = 0.0, l2sq = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto it = variances.find(c.words[k]);
      const double var = it == variances.end() ? 1.0 : it->second;
      const double x = std::abs(c.coeffs[k]) * std::sqrt(var);
      l1 += x;
      l2sq += x * x;
    }
    const double l2 = std::sqrt(l2sq);
    sum_l1 += l1;
    sum_l2 += l2;
    sum_weighted += std::sqrt(static_cast<double>(c.size())) * l2;
  }
  ShotEstimate e;
  const double eps2 = epsilon * epsilon;
  e.ungrouped = sum_l1 * sum_l1 / eps2;
  e.grouped = sum_l2 * sum_l2 / eps2;
  if (sum_l2 > 0.0) {
    e.ratio = (sum_l1 / sum_l2) * (sum_l1 / sum_l2);
    e.bound = (sum_weighted / sum_l2) * (sum_weighted / sum_l2);
  }
  return e;
}

std::map<PauliWord, double> state_variances(const MeasurementPlan& plan,
                                            const StateVector& psi) {
  std::map<PauliWord, double> out;
  for (const auto& c : plan.cliques) {
    for (const auto& w : c.words) {
      const double e = pauli_expectation(w, psi);
      out[w] = std::clamp(1.0 - e * e, 0.0, 1.0);
    }
  }
  return out;
}

double clique_expectation(const MeasurementClique& c, const StateVector& psi) {
  double e = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    e += c.coeffs[k] * pauli_expectation(c.words[k], psi);
  }
  return e;
}

double clique_variance_formula(const MeasurementClique& c,
                               const StateVector& psi) {
  double v = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double e = pauli_expectation(c.words[k], psi);
    v += c.coeffs[k] * c.coeffs[k] * (1.0 - e * e);
  }
  return v;
}

double clique_variance_exact(const MeasurementClique& c,
                             const StateVector& psi) {
  const double e = clique_expectation(c, psi);
  return std::max(0.0, c.gamma * c.gamma - e * e);
}

StateVector rotated_state(const MeasurementClique& c, const StateVector& psi) {
  if (!c.rotation) return psi;
  return csvqe::apply(c.rotation->as_sum(), psi);
}

namespace {

void check_state(const StateVector& psi, std::size_t n) {
  if (n > kMaxSimulationQubits) throw TooManyQubits(n, kMaxSimulationQubits);
  if (psi.size() != (Eigen::Index{1} << n)) {
    throw DimensionMismatch("state dimension does not match the plan");
  }
}

// Independent stream per clique from the user seed.
std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double probability_plus(double expectation) {
  return std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
}

}  // namespace

SimulationResult simulate_shots(const StateVector& psi,
                                const MeasurementPlan& plan,
                                std::uint64_t shots, std::uint64_t seed) {
  check_state(psi, plan.n_qubits);
  if (shots == 0) throw ZeroShots();
  SimulationResult out;
  double predicted = 0.0;
  const double m = static_cast<double>(shots);
  for (std::size_t j = 0; j < plan.cliques.size(); ++j) {
    const auto& c = plan.cliques[j];
    const double e = c.measured_sign *
                     pauli_expectation(c.measured_word(), rotated_state(c, psi));
    auto rng = sub_rng(seed, j);
    std::binomial_distribution<std::uint64_t> dist(shots, probability_plus(e));
    const double plus = static_cast<double>(dist(rng));
    const double mean = (2.0 * plus - m) / m;  // mean of the +-1 outcomes
    const double var =
        shots > 1 ? (1.0 - mean * mean) * m / (m - 1.0) : 0.0;
    out.clique_means.push_back(c.gamma * mean);
    out.clique_variances.push_back(c.gamma * c.gamma * var);
    out.energy += c.gamma * mean;
    predicted += clique_variance_exact(c, psi);
  }
  out.standard_error = std::sqrt(predicted / m);
  return out;
}

PairSample sample_sequential_pair(const StateVector& psi, const PauliWord& a,
                                  const PauliWord& b, std::uint64_t shots,
                                  std::uint64_t seed) {
  const std::size_t n = a.n_qubits();
  check_state(psi, n);
  if (shots == 0) throw ZeroShots();
  PauliSum pa(n);
  pa.add(a, 1.0);
  const StateVector a_psi = csvqe::apply(pa, psi);
  const double ea = pauli_expectation(a, psi);
  // <b> after the first outcome s: the state is (I + s a) psi / norm.
  double eb_given[2] = {0.0, 0.0};
  for (int s : {+1, -1}) {
    const StateVector post = psi + static_cast<double>(s) * a_psi;
    const double norm = post.squaredNorm();
    if (norm > 1e-14) {
      eb_given[s > 0 ? 0 : 1] = pauli_expectation(b, post / std::sqrt(norm));
    }
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution first(probability_plus(ea));
  std::bernoulli_distribution second_plus(probability_plus(eb_given[0]));
  std::bernoulli_distribution second_minus(probability_plus(eb_given[1]));
  double sa = 0.0, sb = 0.0, sab = 0.0, sab2 = 0.0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double x = first(rng) ? 1.0 : -1.0;
    const bool y_plus = x > 0 ? second_plus(rng) : second_minus(rng);
    const double y = y_plus ? 1.0 : -1.0;
    sa += x;
    sb += y;
    sab += x * y;
    sab2 += 1.0;  // (x y)^2
  }
  const double m = static_cast<double>(shots);
  PairSample p;
  p.mean_a = sa / m;
  p.mean_b = sb / m;
  p.covariance = sab / m - p.mean_a * p.mean_b;
  // Leading-order standard error of the covariance estimator.
  const double var_ab = sab2 / m - (sab / m) * (sab / m);
  p.standard_error = std::sqrt(std::max(var_ab, 0.0) / m);
  return p;
}

GateEstimate gate_estimate(std::size_t clique_size, std::size_t n_system) {
  if (clique_size == 0) throw std::invalid_argument("clique size must be >= 1");
  const std::size_t g = n_system * (clique_size - 1);
  return {g, g};
}

MeasurementReport measurement_report(const PauliSum& h) {
  MeasurementReport r;
  r.terms_before = h.size();
  if (h.size() == 0) return r;
  const MeasurementPlan plan = build_measurement_plan(h);
  r.cliques_after = plan.cliques.size();
  const ShotEstimate e = estimate_shots(plan);
  r.ratio = e.ratio;
  r.ratio_bound = e.bound;
  for (const auto& c : plan.cliques) {
    r.clique_sizes.push_back(c.size());
    r.gate_estimates.push_back(gate_estimate(c.size(), h.n_qubits()));
  }
  return r;
}

nlohmann::json report_to_json(const MeasurementReport& report) {
  nlohmann::json gates = nlohmann::json::array();
  for (std::size_t j = 0; j < report.gate_estimates.size(); ++j) {
    gates.push_back({{"clique_size", report.clique_sizes[j]},
                     {"single_qubit", report.gate_estimates[j].single_qubit},
                     {"cnot", report.gate_estimates[j].cnot}});
  }
  return {{"terms_before", report.terms_before},
          {"cliques_after", report.cliques_after},
          {"ratio", report.ratio},
          {"ratio_bound", report.ratio_bound},
          {"gate_estimates", gates}};
}

}  // namespace csvqe
