#pragma once

#include <stdexcept>
#include <string>

namespace nck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An iterative method stopped without meeting its tolerance.
class SolverFailure : public Error {
public:
  SolverFailure(const std::string& what, double last_estimate, double est_error)
      : Error(what), last_estimate_(last_estimate), est_error_(est_error) {}

  double last_estimate() const noexcept { return last_estimate_; }
  double est_error() const noexcept { return est_error_; }

private:
  double last_estimate_;
  double est_error_;
};

enum class Moment { radial, angular };

/// The requested state is not bound for the given dipole moments.
class NoBoundState : public Error {
public:
  NoBoundState(const std::string& what, Moment exceeded)
      : Error(what), exceeded_(exceeded) {}

  /// Which moment is past its critical value (the angular one when both are).
  Moment exceeded() const noexcept { return exceeded_; }

private:
  Moment exceeded_;
};

} // namespace nck
