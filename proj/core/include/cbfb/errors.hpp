#pragma once

#include <stdexcept>
#include <string>

namespace cbfb {

/// Machine-readable failure reasons surfaced to callers and the CLI.
enum class ErrorCode {
  NonPositive,           // a parameter violates its positivity bound
  UpperObstacleActive,   // c >= r*K: value can touch the call price, out of scope
  NoFreeBoundary,        // c >= q*K: conversion never optimal
  NoConvergence,         // PSOR exceeded max_iter with residual above tol
  ObstacleViolation,     // solved slice left the [gamma*x, K] band (scheme bug)
  EmptyExerciseRegion,   // no slice detects an exercise set
  InsufficientResolution,
  InsufficientSamples,
  PatchOutOfDomain,
  ProbabilityOutOfRange, // lattice risk-neutral probability outside (0,1)
  ConfigError,
  InvalidGrid,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace cbfb
