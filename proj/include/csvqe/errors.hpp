// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace csvqe {

// Computation guards map to CLI exit code 3; everything else derived from
// InputError maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCharacter : public InputError {
 public:
  explicit InvalidCharacter(std::size_t position)
      : InputError("invalid Pauli character at position " +
                   std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptyString : public InputError {
 public:
  EmptyString() : InputError("empty Pauli string") {}
};

class LengthMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonHermitian : public InputError {
 public:
  explicit NonHermitian(double max_imag)
      : InputError("Hamiltonian is not Hermitian, max |imag| = " +
                   std::to_string(max_imag)),
        max_imag_(max_imag) {}
  double max_imag() const { return max_imag_; }

 private:
  double max_imag_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MixedLengths : public InputError {
 public:
  MixedLengths() : InputError("Pauli words have different qubit counts") {}
};

class NotNoncontextual : public std::logic_error {
 public:
  NotNoncontextual()
      : std::logic_error("commutation is not an equivalence relation on T") {}
};

class InferenceFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooManyGenerators : public GuardError {
 public:
  explicit TooManyGenerators(std::size_t count)
      : GuardError("too many generators for brute force: " +
                   std::to_string(count)) {}
};

class NotAnticommuting : public std::invalid_argument {
 public:
  NotAnticommuting()
      : std::invalid_argument("observable terms do not pairwise anticommute") {}
};

class NotNormalized : public std::invalid_argument {
 public:
  explicit NotNormalized(double norm)
      : std::invalid_argument("observable amplitudes have norm " +
                              std::to_string(norm)) {}
};

class DependentStabilizers : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class TooManyQubits : public GuardError {
 public:
  TooManyQubits(std::size_t n, std::size_t limit)
      : GuardError(std::to_string(n) + " qubits exceeds limit of " +
                   std::to_string(limit)) {}
};

class TooLargeForExactEigensolve : public GuardError {
 public:
  using GuardError::GuardError;
};

class NoConvergence : public GuardError {
 public:
  explicit NoConvergence(std::size_t iterations)
      : GuardError("eigensolver did not converge after " +
                   std::to_string(iterations) + " iterations") {}
};

class InvalidVariance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroShots : public std::invalid_argument {
 public:
  ZeroShots() : std::invalid_argument("shot count must be positive") {}
};

}  // namespace csvqe
