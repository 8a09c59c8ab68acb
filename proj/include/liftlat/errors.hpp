#pragma once

#include <stdexcept>
#include <string>

namespace liftlat {

/// Malformed input: bad dimensions, unknown names, unreadable files.
/// Distinct from an axiom failure of well-formed data.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (carrier too large,
/// non-wire passed to lift, non-prime passed to is_inert, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed data that fails the algebraic axioms it must satisfy.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check backed by a theorem failed. Either the implementation is broken
/// or the mathematical claim is wrong; never a user error.
class OracleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace liftlat
