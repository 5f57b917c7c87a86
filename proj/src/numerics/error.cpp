#include "bicons/numerics/error.hpp"

#include <cstdlib>

#include "bicons/numerics/tolerances.hpp"

namespace bicons {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::OutOfImage: return "OutOfImage";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::CMCPoint: return "CMCPoint";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::InvalidC: return "InvalidC";
    case ErrorCode::InvalidCstar: return "InvalidCstar";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

namespace numerics {

namespace {

double env_or(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || !(value > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(name) + " must be a positive number");
  }
  return value;
}

}  // namespace

Tolerances Tolerances::from_env() {
  Tolerances t;
  t.root = env_or("BICONS_ROOT_TOL", t.root);
  t.quad_rel = env_or("BICONS_QUAD_RTOL", t.quad_rel);
  t.ode = env_or("BICONS_ODE_TOL", t.ode);
  return t;
}

}  // namespace numerics
}  // namespace bicons
