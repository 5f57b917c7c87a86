#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bicons::numerics {

struct OdeState {
  double t = 0.0;
  std::vector<double> y;
  double step = 1e-3;  // initial / last accepted step size
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

/// Embedded adaptive Dormand-Prince 5(4) from y0.t to t_end (> y0.t) with
/// absolute and relative local error tolerance `tol`. Returns every accepted
/// step, ending exactly at t_end. Throws StepUnderflow when the controller
/// shrinks the step below roundoff scale.
std::vector<OdeState> solve_ode(const OdeRhs& rhs, const OdeState& y0,
                                double t_end, double tol = 1e-10);

struct OdeEvent {
  double t;
  std::vector<double> y;
};

struct OdeEventRun {
  std::vector<OdeState> trajectory;
  std::vector<OdeEvent> events;
};

using EventFunction = std::function<double(double t, const std::vector<double>& y)>;

/// As solve_ode, but also locates sign changes of `event` on the dense output
/// and stops after `max_events` of them (0 = never stop early).
OdeEventRun solve_ode_with_events(const OdeRhs& rhs, const OdeState& y0,
                                  double t_end, double tol,
                                  const EventFunction& event,
                                  std::size_t max_events);

}  // namespace bicons::numerics
