#pragma once

#include <stdexcept>
#include <string>

namespace ubc {

/// A parameter or argument violates one of its stated invariants.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the interval on which an operation is defined.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Which side of a converse-bound precondition failed.
enum class Precondition {
  range,      // D1 outside [D1_min, D1*(D2_min))
  threshold,  // P/N1 exceeds the SNR threshold at D1
};

/// The converse machinery was asked for a point it does not cover.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(Precondition which, const std::string& what)
      : std::domain_error(what), which_(which) {}

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

/// A formula was evaluated where it has no real value (negative radicand,
/// non-positive log argument, vanishing denominator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Seeing this means a formula bug or a
/// precondition that leaked through.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ubc
