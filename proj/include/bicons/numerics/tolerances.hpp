#pragma once

namespace bicons::numerics {

/// Default tolerance knobs. `from_env` reads BICONS_ROOT_TOL, BICONS_QUAD_RTOL
/// and BICONS_ODE_TOL when set.
struct Tolerances {
  double root = 1e-12;
  double quad_rel = 1e-12;
  double ode = 1e-10;

  static Tolerances from_env();
};

}  // namespace bicons::numerics
