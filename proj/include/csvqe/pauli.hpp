// SPDX-License-Identifier: MIT

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csvqe {

using complex = std::complex<double>;

inline constexpr double kDropTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr std::size_t kMaxQubits = 64;

// Symplectic n-qubit Pauli word. Qubit j occupies bit j of both masks and is
// printed at string position j (qubit 0 leftmost). Y is stored as x=z=1 and
// means i*X*Z, so every stored word is Hermitian.
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliWord identity(std::size_t n_qubits);
  static PauliWord parse(std::string_view text);
  static PauliWord single(std::size_t n_qubits, std::size_t qubit, char op);

  std::size_t n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }

  char at(std::size_t qubit) const;
  std::string str() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_diagonal() const { return x_ == 0; }
  std::size_t weight() const;

  // Drops the qubits set in `mask` and compacts the rest, keeping order.
  PauliWord remove_qubits(std::uint64_t mask) const;

  friend bool operator==(const PauliWord& a, const PauliWord& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  friend bool operator!=(const PauliWord& a, const PauliWord& b) {
    return !(a == b);
  }
  // Lexicographic on the string form with I < X < Y < Z.
  friend bool operator<(const PauliWord& a, const PauliWord& b);

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const {
    std::uint64_t h = w.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= w.z_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ w.n_qubits());
  }
};

// i^exponent, exponent taken mod 4.
complex phase_value(int exponent);

struct PhasedWord {
  int phase = 0;  // exponent of i, in [0, 4)
  PauliWord word;
};

PhasedWord multiply(const PauliWord& a, const PauliWord& b);
bool commutes(const PauliWord& a, const PauliWord& b);

struct PauliTerm {
  PauliWord word;
  complex coeff{0.0, 0.0};
};

// Product of the two terms when they commute, std::nullopt (zero) otherwise.
std::optional<PauliTerm> jordan_product(const PauliTerm& a,
                                        const PauliTerm& b);

class PauliSum {
 public:
  using Map = std::map<PauliWord, complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
  PauliSum(std::size_t n_qubits,
           std::initializer_list<std::pair<std::string_view, complex>> terms);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  void add(const PauliWord& word, complex coeff);
  void add(std::string_view word, complex coeff) {
    add(PauliWord::parse(word), coeff);
  }
  complex coeff(const PauliWord& word) const;
  complex coeff(std::string_view word) const {
    return coeff(PauliWord::parse(word));
  }
  bool contains(const PauliWord& word) const { return terms_.count(word) > 0; }

  std::vector<PauliWord> words() const;
  double max_imag() const;
  bool is_hermitian(double tol = kHermitianTolerance) const {
    return max_imag() <= tol;
  }
  // Copy with imaginary parts removed and sub-tolerance terms dropped.
  PauliSum real_part() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(complex scalar);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, complex s) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  friend bool operator==(const PauliSum& a, const PauliSum& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str(int precision = 6) const;

 private:
  std::size_t n_ = 0;
  Map terms_;
};

// Largest coefficient difference between two sums, over the union of words.
double max_coeff_difference(const PauliSum& a, const PauliSum& b);

// Monte-Carlo estimate of the probability that two uniformly random n-qubit
// words anticommute.
double anticommutation_probability_mc(std::size_t n, std::size_t samples,
                                      std::uint64_t seed);
double anticommutation_probability_exact(std::size_t n);

}  // namespace csvqe
