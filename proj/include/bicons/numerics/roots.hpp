#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "bicons/numerics/error.hpp"

namespace bicons::numerics {

/// A sign-changing interval [lo, hi]. Construction rejects anything else.
class Bracket {
 public:
  Bracket(double lo, double hi, double f_lo, double f_hi);

  template <class F>
  static Bracket of(F&& f, double lo, double hi) {
    return Bracket(lo, hi, f(lo), f(hi));
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }
  double width() const noexcept { return hi_ - lo_; }

 private:
  double lo_, hi_, f_lo_, f_hi_;
};

struct RootResult {
  double x;
  double lo;
  double hi;
  int iterations;
};

/// Safeguarded bracketed solve (TOMS 748: inverse cubic / secant steps with
/// bisection fallback). Terminates once the bracket is no wider than
/// max(tol, 4 eps |x|).
RootResult find_root_bracketed(const std::function<double(double)>& f,
                               const Bracket& b, double tol,
                               int max_iterations = 200);

inline double find_root(const std::function<double(double)>& f,
                        const Bracket& b, double tol = 1e-12,
                        int max_iterations = 200) {
  return find_root_bracketed(f, b, tol, max_iterations).x;
}

/// Grow `hi` geometrically (hi <- lo + factor (hi - lo)) until f changes sign
/// relative to f(lo). Throws NoSignChange after `max_growth` attempts.
Bracket expand_upward(const std::function<double(double)>& f, double lo,
                      double hi, double factor = 2.0, int max_growth = 200);

}  // namespace bicons::numerics
