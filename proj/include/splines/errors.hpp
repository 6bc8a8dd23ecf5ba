#pragma once

#include <stdexcept>
#include <string>

namespace splines {

/// Input is well-formed but outside the class of graphs/labels the
/// constructions cover (CLI exit code 2).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed re-certification. Never expected; raised
/// instead of returning an uncertified result.
class CertificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace splines
