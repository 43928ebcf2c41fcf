// SPDX-License-Identifier: MIT

#include "oracle.hpp"

#include <csvqe/errors.hpp>
#include <csvqe/unitary_partitioning.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace csvqe;

namespace {

const std::complex<double> kI(0.0, 1.0);

oracle::Matrix step_matrix(const PauliWord& w, double angle) {
  const Eigen::Index d = Eigen::Index{1} << w.n_qubits();
  return std::cos(angle / 2) * oracle::Matrix::Identity(d, d) +
         kI * std::sin(angle / 2) * oracle::word(w.str());
}

oracle::Matrix seqrot_matrix(const SeqRotPlan& plan) {
  const Eigen::Index d = Eigen::Index{1} << plan.n_qubits;
  oracle::Matrix r = oracle::Matrix::Identity(d, d);
  for (const auto& s : plan.steps) r = step_matrix(s.word, s.angle) * r;
  return r;
}

// Random pairwise anticommuting set built from a Clifford-free recipe:
// products of a random word with generators of a Majorana-like chain.
AnticommutingObservable random_observable(std::size_t n, std::size_t size,
                                          std::mt19937_64& rng) {
  AnticommutingObservable a;
  std::vector<PauliWord> pool;
  for (int attempt = 0; attempt < 4000 && pool.size() < size; ++attempt) {
    const PauliWord w = PauliWord::parse(oracle::random_word(n, rng));
    if (w.is_identity()) continue;
    bool ok = true;
    for (const auto& p : pool) ok = ok && !commutes(p, w);
    if (ok) pool.push_back(w);
  }
  std::normal_distribution<double> g(0.0, 1.0);
  double norm = 0.0;
  for (const auto& w : pool) {
    a.words.push_back(w);
    a.r.push_back(g(rng));
    norm += a.r.back() * a.r.back();
  }
  for (auto& x : a.r) x /= std::sqrt(norm);
  a.target = largest_magnitude_index(a.r);
  return a;
}

AnticommutingObservable toy_observable() {
  AnticommutingObservable a;
  a.words = {PauliWord::parse("YXYI"), PauliWord::parse("XYXI"),
             PauliWord::parse("XZXI")};
  a.r = {0.25318483, -0.65828059, -0.70891756};
  double n = 0.0;
  for (double x : a.r) n += x * x;
  for (auto& x : a.r) x /= std::sqrt(n);
  a.target = 0;
  return a;
}

}  // namespace

TEST_CASE("validation") {
  AnticommutingObservable a;
  a.words = {PauliWord::parse("XI"), PauliWord::parse("IX")};
  a.r = {std::sqrt(0.5), std::sqrt(0.5)};
  CHECK_THROWS_AS(validate(a), NotAnticommuting);
  a.words[1] = PauliWord::parse("ZI");
  a.r = {0.5, 0.5};
  CHECK_THROWS_AS(validate(a), NotNormalized);
  CHECK(largest_magnitude_index({0.1, -0.7, 0.7}) == 1);
}

TEST_CASE("toy sequence of rotations") {
  const auto a = toy_observable();
  const SeqRotPlan plan = build_seqrot(a);
  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.steps[0].word.str() == "ZZZI");
  CHECK(plan.steps[0].angle == doctest::Approx(1.2036225088338255).epsilon(1e-7));
  CHECK(plan.steps[1].word.str() == "ZYZI");
  CHECK(plan.steps[1].angle == doctest::Approx(-0.7879622757719398).epsilon(1e-7));
  const PauliSum out = conjugate(a.as_sum(), plan);
  CHECK(out.size() == 1);
  CHECK(std::abs(out.coeff("YXYI") - complex(1.0)) < 1e-10);
}

TEST_CASE("toy linear combination of unitaries") {
  const auto a = toy_observable();
  const LcuOperator lcu = build_lcu(a);
  CHECK(lcu.identity == doctest::Approx(0.79157591).epsilon(1e-7));
  const PauliSum r = lcu.as_sum();
  CHECK(r.coeff("ZZZI").imag() == doctest::Approx(0.41580383).epsilon(1e-7));
  CHECK(r.coeff("ZYZI").imag() == doctest::Approx(-0.44778874).epsilon(1e-7));
  const PauliSum out = conjugate(a.as_sum(), lcu);
  CHECK(out.size() == 1);
  CHECK(std::abs(out.coeff("YXYI") - complex(1.0)) < 1e-10);
}

TEST_CASE("rotations agree with dense matrices") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const PauliSum h = oracle::random_hamiltonian(n, 8, rng);
    const PauliWord w = PauliWord::parse(oracle::random_word(n, rng));
    const double angle = 0.37 * (trial + 1);
    const oracle::Matrix u = step_matrix(w, angle);
    CHECK((oracle::sum(rotate(h, w, angle)) - u * oracle::sum(h) * u.adjoint()).norm() < 1e-10);
    const oracle::Matrix c = step_matrix(w, std::numbers::pi / 2);
    CHECK((oracle::sum(rotate_clifford(h, w)) - c * oracle::sum(h) * c.adjoint()).norm() < 1e-10);
  }
}

TEST_CASE("property: both constructions map A to its target word") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto a = random_observable(n, 2 + trial % 4, rng);
    if (a.size() < 2) continue;
    const PauliSum target(n, {{a.target_word().str(), 1.0}});
    const SeqRotPlan seq = build_seqrot(a);
    const LcuOperator lcu = build_lcu(a);
    CHECK(max_coeff_difference(conjugate(a.as_sum(), seq), target) < 1e-10);
    CHECK(max_coeff_difference(conjugate(a.as_sum(), lcu), target) < 1e-10);

    const oracle::Matrix rs = seqrot_matrix(seq);
    const oracle::Matrix rl = oracle::sum(lcu.as_sum());
    const Eigen::Index d = rl.rows();
    CHECK((rl * rl.adjoint() - oracle::Matrix::Identity(d, d)).norm() < 1e-10);
    const PauliSum h = oracle::random_hamiltonian(n, 10, rng);
    CHECK((oracle::sum(conjugate(h, seq)) - rs * oracle::sum(h) * rs.adjoint()).norm() < 1e-9);
    CHECK((oracle::sum(conjugate(h, lcu)) - rl * oracle::sum(h) * rl.adjoint()).norm() < 1e-9);
  }
}

TEST_CASE("A equal to minus its target is flipped") {
  AnticommutingObservable a;
  a.words = {PauliWord::parse("X"), PauliWord::parse("Z")};
  a.r = {-1.0, 0.0};
  a.target = 0;
  const PauliSum x(1, {{"X", 1.0}});
  CHECK(max_coeff_difference(conjugate(a.as_sum(), build_lcu(a)), x) < 1e-12);
  CHECK(max_coeff_difference(conjugate(a.as_sum(), build_seqrot(a)), x) < 1e-12);
}

TEST_CASE("term growth bound") {
  CHECK(lcu_term_bound(100, 1) == 100);
  CHECK(lcu_term_bound(100, 3) == 100 * (1 + 2 + 1));
  const auto g = term_growth_report(PauliSum(4, {{"IIYI", 1.0}}), toy_observable());
  CHECK(g.lcu <= g.lcu_bound);
}
