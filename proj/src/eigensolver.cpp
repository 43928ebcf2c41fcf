// SPDX-License-Identifier: MIT

#include <csvqe/eigensolver.hpp>
#include <csvqe/errors.hpp>

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <map>
#include <random>

namespace csvqe {

namespace {

std::uint64_t reverse_bits(std::uint64_t mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((mask >> j) & 1U) out |= std::uint64_t{1} << (n - 1 - j);
  }
  return out;
}

void require_size(const PauliSum& h) {
  if (h.n_qubits() > kMaxEigenQubits) {
    throw TooManyQubits(h.n_qubits(), kMaxEigenQubits);
  }
}

struct BasisTerm {
  std::uint64_t x, z;
  complex coeff;  // includes i^(number of Y factors)
};

// Terms grouped by basis-order X mask.
std::map<std::uint64_t, std::vector<BasisTerm>> basis_groups(
    const PauliSum& h) {
  std::map<std::uint64_t, std::vector<BasisTerm>> groups;
  const std::size_t n = h.n_qubits();
  for (const auto& [w, c] : h) {
    const std::uint64_t x = reverse_bits(w.x_mask(), n);
    const std::uint64_t z = reverse_bits(w.z_mask(), n);
    groups[x].push_back({x, z, c * phase_value(std::popcount(x & z))});
  }
  return groups;
}

double sign_of(std::uint64_t z, std::uint64_t b) {
  return (std::popcount(z & b) & 1) ? -1.0 : 1.0;
}

}  // namespace

SparseMatrix to_matrix(const PauliSum& h) {
  require_size(h);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const auto groups = basis_groups(h);
  SparseMatrix m(dim, dim);
  m.reserve(Eigen::VectorXi::Constant(dim, static_cast<int>(groups.size())));
  // Row r = b ^ x receives coeff * (-1)^(z.b) * psi[b].
  for (std::size_t r = 0; r < dim; ++r) {
    for (const auto& [x, terms] : groups) {
      const std::uint64_t b = r ^ x;
      complex v{0.0, 0.0};
      for (const auto& t : terms) v += t.coeff * sign_of(t.z, b);
      if (v != complex{0.0, 0.0}) m.insert(r, b) = v;
    }
  }
  m.makeCompressed();
  return m;
}

Eigen::MatrixXcd to_dense(const PauliSum& h) {
  return Eigen::MatrixXcd(to_matrix(h));
}

StateVector apply(const PauliSum& h, const StateVector& psi) {
  require_size(h);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (static_cast<std::size_t>(psi.size()) != dim) {
    throw DimensionMismatch("state vector dimension mismatch");
  }
  StateVector out = StateVector::Zero(dim);
  for (const auto& [x, terms] : basis_groups(h)) {
    for (std::size_t b = 0; b < dim; ++b) {
      complex v{0.0, 0.0};
      for (const auto& t : terms) v += t.coeff * sign_of(t.z, b);
      out[b ^ x] += v * psi[b];
    }
  }
  return out;
}

complex expectation(const PauliSum& h, const StateVector& psi) {
  return psi.dot(apply(h, psi));
}

double pauli_expectation(const PauliWord& word, const StateVector& psi) {
  PauliSum p(word.n_qubits());
  p.add(word, 1.0);
  return expectation(p, psi).real();
}

GroundState dense_ground_state(const PauliSum& h) {
  require_size(h);
  if (h.n_qubits() == 0) {
    GroundState g;
    g.energy = h.coeff(PauliWord::identity(0)).real();
    g.vector = StateVector::Ones(1);
    return g;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(h));
  GroundState g;
  g.energy = es.eigenvalues()(0);
  g.vector = es.eigenvectors().col(0);
  return g;
}

Eigen::VectorXd spectrum(const PauliSum& h) {
  require_size(h);
  if (h.n_qubits() == 0) {
    return Eigen::VectorXd::Constant(1, h.coeff(PauliWord::identity(0)).real());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(h),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

GroundState lanczos_ground_state(const PauliSum& h,
                                 const EigenOptions& options) {
  require_size(h);
  if (h.n_qubits() == 0) return dense_ground_state(h);
  const SparseMatrix m = to_matrix(h);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const std::size_t kmax = std::min<std::size_t>(options.krylov_max, dim);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  StateVector start(dim);
  for (std::size_t i = 0; i < dim; ++i) start[i] = {normal(rng), normal(rng)};
  start.normalize();

  GroundState g;
  std::size_t total = 0;
  for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
    Eigen::MatrixXcd V(dim, kmax);
    std::vector<double> alpha, beta;
    V.col(0) = start;
    double previous = 0.0;
    Eigen::VectorXd ritz;
    double theta = 0.0;
    std::size_t used = 0;
    for (std::size_t j = 0; j < kmax; ++j) {
      StateVector w = m * V.col(j);
      const double a = V.col(j).dot(w).real();
      alpha.push_back(a);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        const StateVector proj = V.leftCols(j + 1).adjoint() * w;
        w -= V.leftCols(j + 1) * proj;
      }
      ++total;
      used = j + 1;
      const Eigen::VectorXd diag =
          Eigen::Map<const Eigen::VectorXd>(alpha.data(), used);
      const Eigen::VectorXd sub =
          Eigen::Map<const Eigen::VectorXd>(beta.data(), used - 1);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
      theta = es.eigenvalues()(0);
      const double b = w.norm();
      const bool stalled = j > 0 && std::abs(theta - previous) < options.tolerance;
      previous = theta;
      if (b < 1e-12 || j + 1 == kmax) break;
      if (stalled) {
        // |beta * last Ritz component| is the residual of the Ritz pair.
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const double estimate = b * std::abs(es.eigenvectors()(used - 1, 0));
        if (estimate <= 0.5 * options.residual_tolerance) break;
      }
      beta.push_back(b);
      V.col(j + 1) = w / b;
    }
    {
      const Eigen::VectorXd diag =
          Eigen::Map<const Eigen::VectorXd>(alpha.data(), used);
      const Eigen::VectorXd sub =
          Eigen::Map<const Eigen::VectorXd>(beta.data(), used - 1);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      theta = es.eigenvalues()(0);
      ritz = es.eigenvectors().col(0);
    }
    StateVector x = V.leftCols(used) * ritz;
    x.normalize();
    const double res = (m * x - theta * x).norm();
    g.energy = theta;
    g.vector = x;
    g.iterations = total;
    if (res <= options.residual_tolerance) return g;
    start = x;
  }
  throw NoConvergence(total);
}

GroundState ground_state(const PauliSum& h, const EigenOptions& options) {
  require_size(h);
  if (h.n_qubits() <= options.dense_max_qubits) return dense_ground_state(h);
  return lanczos_ground_state(h, options);
}

double ground_energy(const PauliSum& h, const EigenOptions& options) {
  require_size(h);
  // Eigenvalues alone are several times cheaper than the full dense solve.
  if (h.n_qubits() <= options.dense_max_qubits) return spectrum(h)(0);
  return lanczos_ground_state(h, options).energy;
}

}  // namespace csvqe
