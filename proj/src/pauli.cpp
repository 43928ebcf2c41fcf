// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/pauli.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace csvqe {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

int char_code(bool x, bool z) {
  if (x) return z ? 2 : 1;
  return z ? 3 : 0;
}

void require_same_length(const PauliWord& a, const PauliWord& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw LengthMismatch("Pauli words of length " +
                         std::to_string(a.n_qubits()) + " and " +
                         std::to_string(b.n_qubits()));
  }
}

}  // namespace

PauliWord::PauliWord(std::size_t n_qubits, std::uint64_t x_mask,
                     std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > kMaxQubits) throw TooManyQubits(n_qubits, kMaxQubits);
  if (((x_mask | z_mask) & ~low_mask(n_qubits)) != 0) {
    throw std::invalid_argument("Pauli masks exceed qubit count");
  }
}

PauliWord PauliWord::identity(std::size_t n_qubits) {
  return PauliWord(n_qubits, 0, 0);
}

PauliWord PauliWord::parse(std::string_view text) {
  if (text.empty()) throw EmptyString();
  if (text.size() > kMaxQubits) throw TooManyQubits(text.size(), kMaxQubits);
  std::uint64_t x = 0, z = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (text[j]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw InvalidCharacter(j);
    }
  }
  return PauliWord(text.size(), x, z);
}

PauliWord PauliWord::single(std::size_t n_qubits, std::size_t qubit, char op) {
  if (qubit >= n_qubits) throw IndexOutOfRange("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (op) {
    case 'I': return PauliWord(n_qubits, 0, 0);
    case 'X': return PauliWord(n_qubits, bit, 0);
    case 'Y': return PauliWord(n_qubits, bit, bit);
    case 'Z': return PauliWord(n_qubits, 0, bit);
    default: throw InvalidCharacter(0);
  }
}

char PauliWord::at(std::size_t qubit) const {
  if (qubit >= n_) throw IndexOutOfRange("qubit index out of range");
  return "IXYZ"[char_code((x_ >> qubit) & 1U, (z_ >> qubit) & 1U)];
}

std::string PauliWord::str() const {
  std::string out(n_, 'I');
  for (std::size_t j = 0; j < n_; ++j) out[j] = at(j);
  return out;
}

std::size_t PauliWord::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

PauliWord PauliWord::remove_qubits(std::uint64_t mask) const {
  std::uint64_t x = 0, z = 0;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if ((mask >> j) & 1U) continue;
    x |= ((x_ >> j) & 1U) << k;
    z |= ((z_ >> j) & 1U) << k;
    ++k;
  }
  return PauliWord(k, x, z);
}

bool operator<(const PauliWord& a, const PauliWord& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return false;
  const int j = std::countr_zero(diff);
  return char_code((a.x_ >> j) & 1U, (a.z_ >> j) & 1U) <
         char_code((b.x_ >> j) & 1U, (b.z_ >> j) & 1U);
}

complex phase_value(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PhasedWord multiply(const PauliWord& a, const PauliWord& b) {
  require_same_length(a, b);
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // Y = iXZ, and moving Z^za past X^xb costs (-1)^(za.xb).
  int e = std::popcount(a.x_mask() & a.z_mask()) +
          std::popcount(b.x_mask() & b.z_mask()) +
          2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
  e = ((e % 4) + 4) % 4;
  return {e, PauliWord(a.n_qubits(), x, z)};
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  require_same_length(a, b);
  const int s = std::popcount(a.x_mask() & b.z_mask()) +
                std::popcount(b.x_mask() & a.z_mask());
  return (s & 1) == 0;
}

std::optional<PauliTerm> jordan_product(const PauliTerm& a,
                                        const PauliTerm& b) {
  if (!commutes(a.word, b.word)) return std::nullopt;
  const PhasedWord p = multiply(a.word, b.word);
  return PauliTerm{p.word, a.coeff * b.coeff * phase_value(p.phase)};
}

PauliSum::PauliSum(
    std::size_t n_qubits,
    std::initializer_list<std::pair<std::string_view, complex>> terms)
    : n_(n_qubits) {
  for (const auto& [w, c] : terms) add(w, c);
}

void PauliSum::add(const PauliWord& word, complex coeff) {
  if (word.n_qubits() != n_) {
    throw LengthMismatch("term " + word.str() + " does not have " +
                         std::to_string(n_) + " qubits");
  }
  if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
    throw std::invalid_argument("non-finite coefficient for " + word.str());
  }
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kDropTolerance) terms_.emplace(word, coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

complex PauliSum::coeff(const PauliWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? complex{0.0, 0.0} : it->second;
}

std::vector<PauliWord> PauliSum::words() const {
  std::vector<PauliWord> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

PauliSum PauliSum::real_part() const {
  PauliSum out(n_);
  for (const auto& [w, c] : terms_) out.add(w, complex{c.real(), 0.0});
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw LengthMismatch("PauliSum qubit counts differ");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ != n_) throw LengthMismatch("PauliSum qubit counts differ");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(complex scalar) {
  PauliSum out(n_);
  for (const auto& [w, c] : terms_) out.add(w, c * scalar);
  terms_ = std::move(out.terms_);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw LengthMismatch("PauliSum qubit counts differ");
  PauliSum out(a.n_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      const PhasedWord p = multiply(wa, wb);
      out.add(p.word, ca * cb * phase_value(p.phase));
    }
  }
  return out;
}

std::string PauliSum::str(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ")" << (w.n_qubits() == 0 ? std::string("1") : w.str());
  }
  if (first) os << "0";
  return os.str();
}

double max_coeff_difference(const PauliSum& a, const PauliSum& b) {
  double m = 0.0;
  for (const auto& [w, c] : a) m = std::max(m, std::abs(c - b.coeff(w)));
  for (const auto& [w, c] : b) {
    if (!a.contains(w)) m = std::max(m, std::abs(c));
  }
  return m;
}

double anticommutation_probability_mc(std::size_t n, std::size_t samples,
                                      std::uint64_t seed) {
  if (n == 0 || n > kMaxQubits) throw std::invalid_argument("bad qubit count");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::mt19937_64 rng(seed);
  const std::uint64_t m = low_mask(n);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const PauliWord a(n, rng() & m, rng() & m);
    const PauliWord b(n, rng() & m, rng() & m);
    if (!commutes(a, b)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

double anticommutation_probability_exact(std::size_t n) {
  return 0.5 * (1.0 - std::pow(0.25, static_cast<double>(n)));
}

}  // namespace csvqe
