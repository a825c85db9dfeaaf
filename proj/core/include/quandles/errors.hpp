#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quandles {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in textual input (cycle notation, group files).
/// `line` is 1-based when the input came from a file, -1 otherwise.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class MalformedCycle : public ParseError {
public:
  using ParseError::ParseError;
};

class PointOutOfRange : public ParseError {
public:
  using ParseError::ParseError;
};

class RepeatedPoint : public ParseError {
public:
  using ParseError::ParseError;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

/// An enumeration (group elements, conjugacy class, orbit closure) grew past
/// the configured cap. A first-class outcome, not a crash: callers either
/// report it or degrade to an "undecided" verdict.
class BoundExceeded : public Error {
public:
  explicit BoundExceeded(std::uint64_t bound, const std::string& what_grew)
      : Error(what_grew + " exceeds enumeration bound " + std::to_string(bound)),
        bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

private:
  std::uint64_t bound_;
};

/// Ground set is not closed under conjugation; carries the witness pair
/// (formatted canonically) for diagnostics.
class NotClosed : public Error {
public:
  NotClosed(const std::string& a, const std::string& b)
      : Error("not closed under conjugation: witness (" + a + ", " + b + ")"),
        witness_a_(a),
        witness_b_(b) {}
  const std::string& witness_a() const { return witness_a_; }
  const std::string& witness_b() const { return witness_b_; }

private:
  std::string witness_a_;
  std::string witness_b_;
};

class EmptyGround : public Error {
public:
  EmptyGround() : Error("quandle ground set must be nonempty") {}
};

class NotAMember : public Error {
public:
  using Error::Error;
};

class UnknownFamily : public Error {
public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
public:
  using Error::Error;
};

/// Internal assertion of a construction failed. Signals a defect, never a
/// legitimate negative result.
class ConstructionPostconditionFailed : public Error {
public:
  using Error::Error;
};

/// Two routes that must agree by theorem disagreed. Signals a defect in one
/// of the routes; audits surface this instead of silently picking a side.
class EquivalenceViolation : public Error {
public:
  using Error::Error;
};

class PreconditionFailed : public Error {
public:
  using Error::Error;
};

}  // namespace quandles
