#include "cbfb/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cbfb {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::UpperObstacleActive: return "UpperObstacleActive";
    case ErrorCode::NoFreeBoundary: return "NoFreeBoundary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ObstacleViolation: return "ObstacleViolation";
    case ErrorCode::EmptyExerciseRegion: return "EmptyExerciseRegion";
    case ErrorCode::InsufficientResolution: return "InsufficientResolution";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::PatchOutOfDomain: return "PatchOutOfDomain";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
  }
  return "UnknownError";
}

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonPositive,
                std::string(name) + " must be finite");
  }
}

}  // namespace

ModelParams validate(const RawModelParams& raw) {
  require_finite(raw.sigma, "sigma");
  require_finite(raw.r, "r");
  require_finite(raw.q, "q");
  require_finite(raw.c, "c");
  require_finite(raw.gamma, "gamma");
  require_finite(raw.face_value, "face_value");
  require_finite(raw.maturity, "maturity");

  auto reject_nonpositive = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::NonPositive, what);
  };
  reject_nonpositive(raw.sigma > 0.0, "sigma must be > 0");
  reject_nonpositive(raw.r > 0.0, "r must be > 0");
  reject_nonpositive(raw.q >= 0.0, "q must be >= 0");
  reject_nonpositive(raw.c >= 0.0, "c must be >= 0");
  reject_nonpositive(raw.gamma > 0.0, "gamma must be > 0");
  reject_nonpositive(raw.face_value > 0.0, "face_value must be > 0");
  reject_nonpositive(raw.maturity > 0.0, "maturity must be > 0");

  const double rK = raw.r * raw.face_value;
  const double qK = raw.q * raw.face_value;
  if (raw.c >= rK) {
    std::ostringstream msg;
    msg << "UpperObstacleActive: coupon c=" << raw.c << " >= r*K=" << rK
        << "; the value can reach the call price (double-obstacle regime, "
           "not supported)";
    throw Error(ErrorCode::UpperObstacleActive, msg.str());
  }
  if (raw.c >= qK) {
    std::ostringstream msg;
    msg << "NoFreeBoundary: coupon c=" << raw.c << " >= q*K=" << qK
        << "; conversion is never optimal and no free boundary exists";
    throw Error(ErrorCode::NoFreeBoundary, msg.str());
  }

  ModelParams p{raw.sigma, raw.r,          raw.q,       raw.c,
                raw.gamma, raw.face_value, raw.maturity};
  p.dividend_exceeds_rate = raw.q > raw.r;

  // c < q*K makes the conversion bound sit strictly inside the domain.
  if (!(exercise_lower_bound(p) < p.x_max())) {
    throw Error(ErrorCode::NoFreeBoundary,
                "exercise lower bound c/(q*gamma) must be < K/gamma");
  }
  return p;
}

double boundary_value_x0(const ModelParams& params, double t) {
  if (!(t >= 0.0 && t <= params.maturity)) {
    throw std::invalid_argument("boundary_value_x0: t outside [0, T]");
  }
  const double tau = params.maturity - t;
  const double decay = std::exp(-params.r * tau);
  return params.face_value * decay + (params.c / params.r) * (1.0 - decay);
}

double exercise_lower_bound(const ModelParams& params) {
  // q > 0 is implied by c < q*K with c >= 0.
  return params.c / (params.q * params.gamma);
}

}  // namespace cbfb
