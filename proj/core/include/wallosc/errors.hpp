#pragma once

#include <stdexcept>
#include <string>

namespace wallosc {

/// Base class for every failure the library reports; catch this to handle
/// any wallosc error uniformly.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A truncated series hit its term budget before meeting its tolerance.
class NonConvergence : public Error {
public:
  using Error::Error;
};

/// Input lies outside the range where the requested method gives trustworthy
/// digits (e.g. the closed-form eigenvalue path beyond q0 = 4).
class UnsupportedRange : public Error {
public:
  using Error::Error;
};

/// The characteristic-equation scan failed to bracket the requested root.
class RootNotFound : public Error {
public:
  using Error::Error;
};

/// A matrix (typically the Ritz overlap) is too ill-conditioned to trust.
class IllConditioned : public Error {
public:
  using Error::Error;
};

/// Grid refinement in the finite-difference solver failed to converge.
class GridTooCoarse : public Error {
public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// hermite_zero_check was asked for a zero index H_n does not have.
class InvalidZeroIndex : public Error {
public:
  using Error::Error;
};

} // namespace wallosc
