// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace paircav {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pure-family amplitudes all zero; the state cannot be normalized.
struct UnnormalizableStateError : Error {
  using Error::Error;
};

/// Density matrix violates Hermiticity, unit trace, or positivity beyond tolerance.
struct InvalidStateError : Error {
  using Error::Error;
};

/// Physical parameters out of range (g <= 0, tau <= 0, ...).
struct InvalidParamsError : Error {
  using Error::Error;
};

/// Effective decay gamma <= 0: no finite steady state. Carries the
/// threshold margin (p2 + kappa/2) - p1.
struct AboveThresholdError : Error {
  double margin;
  AboveThresholdError(const std::string& what, double margin_)
      : Error(what), margin(margin_) {}
};

struct InvalidDimensionError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Integration aborted: trace drifted beyond tolerance.
struct TraceDriftError : Error {
  using Error::Error;
};

/// Fock truncation too small for the state being represented.
struct TruncationError : Error {
  using Error::Error;
};

/// Iterative solver did not reach tolerance within its budget.
struct ConvergenceError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

/// Argument outside a formula's mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace paircav
