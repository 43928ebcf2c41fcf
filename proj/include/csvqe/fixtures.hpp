// SPDX-License-Identifier: MIT
// Embedded example data for demos and tests.

#pragma once

#include <csvqe/pauli.hpp>

namespace csvqe::fixtures {

// Four-qubit, fourteen-term example Hamiltonian.
PauliSum toy_hamiltonian();

// Its seven-term noncontextual part and seven-term remainder.
PauliSum toy_noncontextual();
PauliSum toy_contextual();

// The nine Peres-Mermin observables with unit weights.
PauliSum peres_mermin_set();

}  // namespace csvqe::fixtures
