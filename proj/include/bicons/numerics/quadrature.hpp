#pragma once

#include <concepts>
#include <functional>
#include <utility>

namespace bicons::numerics {

/// Integration request over [lower, upper]. A flagged end may carry an
/// integrable singularity of inverse-square-root type.
struct QuadratureSpec {
  double lower = 0.0;
  double upper = 1.0;
  bool singular_lower = false;
  bool singular_upper = false;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;

  void validate() const;
};

/// Sample handed to endpoint-aware integrands. `from_lower` and `from_upper`
/// are the distances to the ends of the requested interval, computed without
/// the cancellation that `x - lower` suffers near a singular end.
struct QuadPoint {
  double x;
  double from_lower;
  double from_upper;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

using PointIntegrand = std::function<double(const QuadPoint&)>;

QuadratureResult integrate_points(const PointIntegrand& f,
                                  const QuadratureSpec& spec);

template <class F>
QuadratureResult integrate(F&& f, const QuadratureSpec& spec) {
  if constexpr (std::is_invocable_r_v<double, F&, const QuadPoint&>) {
    return integrate_points(PointIntegrand(std::forward<F>(f)), spec);
  } else {
    static_assert(std::is_invocable_r_v<double, F&, double>,
                  "integrand must accept double or QuadPoint");
    return integrate_points(
        [g = std::forward<F>(f)](const QuadPoint& p) mutable {
          return g(p.x);
        },
        spec);
  }
}

}  // namespace bicons::numerics
