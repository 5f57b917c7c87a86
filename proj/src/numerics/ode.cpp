#include "bicons/numerics/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/roots.hpp"

namespace bicons::numerics {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<double>;

void validate(const OdeState& y0, double t_end, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "solve_ode: tol must be positive");
  }
  if (!(t_end > y0.t)) {
    throw Error(ErrorCode::InvalidArgument, "solve_ode: t_end must exceed t0");
  }
  if (!(y0.step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "solve_ode: step must be positive");
  }
  for (double v : y0.y) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "solve_ode: y0 must be finite");
    }
  }
}

bool finite(const State& y) {
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

std::vector<OdeState> solve_ode(const OdeRhs& rhs, const OdeState& y0,
                                double t_end, double tol) {
  return solve_ode_with_events(rhs, y0, t_end, tol, nullptr, 0).trajectory;
}

OdeEventRun solve_ode_with_events(const OdeRhs& rhs, const OdeState& y0,
                                  double t_end, double tol,
                                  const EventFunction& event,
                                  std::size_t max_events) {
  validate(y0, t_end, tol);
  auto stepper =
      odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<State>());
  auto system = [&rhs](const State& y, State& dydt, double t) {
    rhs(t, y, dydt);
  };
  stepper.initialize(y0.y, y0.t, std::min(y0.step, t_end - y0.t));

  OdeEventRun run;
  run.trajectory.push_back(y0);
  State tmp(y0.y.size());
  double g_prev = event ? event(y0.t, y0.y) : 0.0;

  while (stepper.current_time() < t_end) {
    const auto [t0, t1] = stepper.do_step(system);
    const double dt = t1 - t0;
    const double floor =
        64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t1));
    if (!(dt > floor) || !finite(stepper.current_state())) {
      std::ostringstream os;
      os << "solve_ode: step underflow at t=" << t0 << " (dt=" << dt << ")";
      throw Error(ErrorCode::StepUnderflow, os.str());
    }

    if (event) {
      const double t_hi = std::min(t1, t_end);
      stepper.calc_state(t_hi, tmp);
      const double g_now = event(t_hi, tmp);
      if (g_prev != 0.0 && g_prev * g_now <= 0.0) {
        double t_event = t_hi;
        if (g_now != 0.0) {
          auto g = [&](double t) {
            stepper.calc_state(t, tmp);
            return event(t, tmp);
          };
          t_event = find_root(g, Bracket(t0, t_hi, g_prev, g_now), 1e-14 * std::max(1.0, std::abs(t_hi)));
        }
        stepper.calc_state(t_event, tmp);
        run.events.push_back({t_event, tmp});
        if (max_events != 0 && run.events.size() >= max_events) {
          run.trajectory.push_back({t_event, tmp, dt});
          return run;
        }
      }
      g_prev = g_now;
    }

    if (t1 >= t_end) {
      stepper.calc_state(t_end, tmp);
      run.trajectory.push_back({t_end, tmp, dt});
      break;
    }
    run.trajectory.push_back({t1, stepper.current_state(), dt});
  }
  return run;
}

}  // namespace bicons::numerics
