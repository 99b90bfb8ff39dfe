#pragma once

#include <stdexcept>
#include <string>

namespace phyp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (bad index, bad length, lambda = 0 ...).
struct DomainError : Error {
  using Error::Error;
};

// exp() of the requested argument would overflow a double.
struct OverflowError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  QuadratureError(const std::string& what, double estimate)
      : Error(what), errorEstimate(estimate) {}
  double errorEstimate;
};

struct BracketError : Error {
  using Error::Error;
};

struct SpuriousRootError : Error {
  using Error::Error;
};

// Boundary data for which the constraint system loses rank, or a Cayley point.
struct DegenerateSpecError : Error {
  using Error::Error;
};

struct NearEigenvalueError : Error {
  NearEigenvalueError(const std::string& what, double absDelta)
      : Error(what), absDelta(absDelta) {}
  double absDelta;
};

}  // namespace phyp
