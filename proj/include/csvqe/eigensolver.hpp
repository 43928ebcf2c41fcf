// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/pauli.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>

namespace csvqe {

inline constexpr std::size_t kMaxEigenQubits = 16;

using SparseMatrix = Eigen::SparseMatrix<complex, Eigen::RowMajor>;
using StateVector = Eigen::VectorXcd;

// Basis index bit (n-1-j) holds qubit j, so qubit 0 is the most significant
// tensor factor, matching the Kronecker order of the string form.
SparseMatrix to_matrix(const PauliSum& h);
Eigen::MatrixXcd to_dense(const PauliSum& h);

struct EigenOptions {
  std::size_t dense_max_qubits = 10;
  std::size_t krylov_max = 200;
  double tolerance = 1e-10;           // eigenvalue change between iterations
  double residual_tolerance = 1e-8;   // |Hv - Ev|
  std::size_t max_restarts = 20;
  std::uint64_t seed = 11;
};

struct GroundState {
  double energy = 0.0;
  StateVector vector;
  std::size_t iterations = 0;
};

// Dense solve up to dense_max_qubits, Lanczos above. Throws TooManyQubits.
GroundState ground_state(const PauliSum& h, const EigenOptions& options = {});
double ground_energy(const PauliSum& h, const EigenOptions& options = {});

GroundState dense_ground_state(const PauliSum& h);
// Lanczos with full reorthogonalization; throws NoConvergence.
GroundState lanczos_ground_state(const PauliSum& h,
                                 const EigenOptions& options = {});

// All eigenvalues, ascending (dense).
Eigen::VectorXd spectrum(const PauliSum& h);

StateVector apply(const PauliSum& h, const StateVector& psi);
complex expectation(const PauliSum& h, const StateVector& psi);
double pauli_expectation(const PauliWord& word, const StateVector& psi);

}  // namespace csvqe
