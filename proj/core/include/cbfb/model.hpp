#pragma once

#include "cbfb/errors.hpp"

namespace cbfb {

/// Unvalidated model inputs as read from a config file.
struct RawModelParams {
  double sigma = 0.0;       // volatility, per sqrt(year)
  double r = 0.0;           // interest rate, per year
  double q = 0.0;           // dividend yield, per year
  double c = 0.0;           // coupon rate, cash per year
  double gamma = 0.0;       // conversion factor, shares per bond
  double face_value = 0.0;  // face value == call value, cash
  double maturity = 0.0;    // years
};

/// Validated problem ingredients. Instances come from validate(); immutable
/// after construction and freely shareable across threads.
struct ModelParams {
  double sigma;
  double r;
  double q;
  double c;
  double gamma;
  double face_value;
  double maturity;

  // q > r is financially unusual but not rejected.
  bool dividend_exceeds_rate = false;

  /// Right edge of the spatial domain, K/gamma. The call feature caps the
  /// stock range: for x >= K/gamma conversion value meets the call price.
  double x_max() const { return face_value / gamma; }
};

/// Checks positivity bounds and the standing assumptions c < r*K (upper
/// obstacle inert) and c < q*K (conversion region nonempty). Throws Error
/// with code NonPositive, UpperObstacleActive or NoFreeBoundary.
ModelParams validate(const RawModelParams& raw);

/// Value at x = 0 where the pricing equation degenerates to the ODE
/// dV/dt = r*V - c with V(0,T) = K:
///   V(0,t) = K*exp(-r*(T-t)) + (c/r)*(1 - exp(-r*(T-t))).
/// Strictly increasing in t and < K for t < T whenever c < r*K.
/// Rejects t outside [0, T].
double boundary_value_x0(const ModelParams& params, double t);

/// Lower bound c/(q*gamma) for the conversion region: conversion can only be
/// optimal where the forgone dividend q*gamma*x exceeds the coupon c.
/// Always < x_max for validated parameters.
double exercise_lower_bound(const ModelParams& params);

}  // namespace cbfb
