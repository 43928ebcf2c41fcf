// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/contextuality.hpp>
#include <csvqe/pauli.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace csvqe {

struct NoncontextualState {
  std::vector<int> q;     // +-1 per generator
  std::vector<double> r;  // unit vector, one entry per clique
};

struct OptimizerConfig {
  std::size_t restarts = 16;
  double tolerance = 1e-12;  // simplex spread in objective value
  std::size_t max_evaluations = 5000;
  std::uint64_t seed = 7;
  std::size_t max_generators = 24;
};

struct SolveResult {
  NoncontextualState state;
  double energy = 0.0;
  std::map<std::vector<int>, double> per_q_energies;  // branches optimized
};

double infer_expectation(const PauliWord& word,
                         const NoncontextualStructure& structure,
                         const NoncontextualState& state);

double noncontextual_energy(const PauliSum& h_noncon,
                            const NoncontextualStructure& structure,
                            const NoncontextualState& state);

SolveResult solve_noncontextual(const PauliSum& h_noncon,
                                const NoncontextualStructure& structure,
                                const OptimizerConfig& config = {});

// Unit vector from N-1 hyperspherical angles.
std::vector<double> hypersphere_point(const std::vector<double>& angles,
                                      std::size_t dim);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, double tolerance,
    std::size_t max_evaluations);

}  // namespace csvqe
