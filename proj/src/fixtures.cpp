// SPDX-License-Identifier: MIT

#include <csvqe/contextuality.hpp>
#include <csvqe/fixtures.hpp>

#include <utility>
#include <vector>

namespace csvqe::fixtures {

namespace {

PauliSum from_list(const std::vector<std::pair<const char*, double>>& terms) {
  PauliSum h(PauliWord::parse(terms.front().first).n_qubits());
  for (const auto& [w, c] : terms) h.add(PauliWord::parse(w), c);
  return h;
}

}  // namespace

PauliSum toy_noncontextual() {
  return from_list({{"IIIZ", 0.5}, {"XYXI", 0.7}, {"XZZI", 0.6},
                    {"XZXI", 0.7}, {"ZZZI", 0.7}, {"IIYI", 0.6},
                    {"YXYI", 0.1}});
}

PauliSum toy_contextual() {
  return from_list({{"XXXI", 0.1}, {"XXYI", 0.5}, {"XXZI", 0.2},
                    {"YXXI", 0.2}, {"YYZI", 0.2}, {"YZXI", 0.1},
                    {"ZYYI", 0.1}});
}

PauliSum toy_hamiltonian() {
  PauliSum h = toy_noncontextual();
  h += toy_contextual();
  return h;
}

PauliSum peres_mermin_set() {
  PauliSum h(2);
  for (const auto& row : peres_mermin_square()) {
    for (const auto& w : row) h.add(w, 1.0);
  }
  return h;
}

}  // namespace csvqe::fixtures
