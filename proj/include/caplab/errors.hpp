#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace caplab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by validate_capacity. Carries the offending subset masks so callers
// can render the witness pair.
struct ValidationError : Error {
  enum class Kind { empty_set_nonzero, monotonicity, negative_value, bad_size };
  Kind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  ValidationError(Kind k, const std::string& msg, std::uint32_t a_ = 0, std::uint32_t b_ = 0)
      : Error(msg), kind(k), a(a_), b(b_) {}
};

// Violated operation precondition (wrong space, negative function, missing
// capacity property, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// The two algebraic routes of the Sugeno-Lorentz prenorm disagreed beyond
// tolerance. Signals a numeric or logic fault, never expected in normal use.
struct CrossCheckMismatch : Error {
  using Error::Error;
};

// Convergence verdicts that are provably equivalent came out different.
struct VerdictDisagreement : Error {
  using Error::Error;
};

// A probe landed inside both spheres of a separation certificate.
struct SoundnessViolation : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace caplab
