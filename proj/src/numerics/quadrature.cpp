#include "bicons/numerics/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "bicons/numerics/error.hpp"

namespace bicons::numerics {

void QuadratureSpec::validate() const {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    std::ostringstream os;
    os << "quadrature interval must be finite with lower < upper, got ["
       << lower << ", " << upper << "]";
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw Error(ErrorCode::InvalidSpec, "quadrature tolerances must be > 0");
  }
}

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr unsigned kMaxDepth = 18;

// Boost's adaptive Gauss-Kronrod reports leaf error estimates in the units of
// the reference interval [-1, 1]; integrate there and rescale ourselves so the
// estimate and the tolerance test refer to the same quantity.
template <class G>
double gk(const G& g, double a, double b, double tol, double* err,
          double* l1) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto h = [&](double t) { return g(mid + half * t); };
  const double v = GK::integrate(h, -1.0, 1.0, kMaxDepth, tol, err, l1);
  *err *= half;
  *l1 *= half;
  return v * half;
}

bool acceptable(double err, double l1, const QuadratureSpec& spec) {
  return std::isfinite(err) && err <= std::max(spec.abs_tol, spec.rel_tol * l1);
}

// Plain piece in the original variable; tanh-sinh as the fallback.
QuadratureResult plain_piece(const PointIntegrand& f, double a, double b,
                             const QuadratureSpec& spec) {
  const double len = b - a;
  auto g = [&](double x) {
    return f({x, x - spec.lower, spec.upper - x});
  };
  double err = 0.0, l1 = 0.0;
  double v = gk(g, a, b, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};

  boost::math::quadrature::tanh_sinh<double> ts;
  auto h = [&](double x, double xc) {
    const double from_a = xc < 0.0 ? -xc : len - xc;
    const double from_b = xc < 0.0 ? len + xc : xc;
    return f({x, (a - spec.lower) + from_a, (spec.upper - b) + from_b});
  };
  v = ts.integrate(h, a, b, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};
  std::ostringstream os;
  os << "quadrature did not converge on [" << a << ", " << b
     << "], error estimate " << err;
  throw Error(ErrorCode::NonIntegrable, os.str());
}

// [a, m] with an inverse-square-root singularity at a: x = a + s^2.
QuadratureResult lower_singular_piece(const PointIntegrand& f, double a,
                                      double m, const QuadratureSpec& spec) {
  const double span = m - a;
  const double smax = std::sqrt(span);
  const double far = spec.upper - a;
  auto g = [&](double s) {
    const double d = s * s;
    return 2.0 * s * f({a + d, d, far - d});
  };
  double err = 0.0, l1 = 0.0;
  double v = gk(g, 0.0, smax, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};

  boost::math::quadrature::tanh_sinh<double> ts;
  v = ts.integrate(g, 0.0, smax, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};
  std::ostringstream os;
  os << "singular quadrature did not converge near " << a
     << ", error estimate " << err;
  throw Error(ErrorCode::NonIntegrable, os.str());
}

// [m, b] with an inverse-square-root singularity at b: x = b - s^2.
QuadratureResult upper_singular_piece(const PointIntegrand& f, double m,
                                      double b, const QuadratureSpec& spec) {
  const double span = b - m;
  const double smax = std::sqrt(span);
  const double far = b - spec.lower;
  auto g = [&](double s) {
    const double d = s * s;
    return 2.0 * s * f({b - d, far - d, d});
  };
  double err = 0.0, l1 = 0.0;
  double v = gk(g, 0.0, smax, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};

  boost::math::quadrature::tanh_sinh<double> ts;
  v = ts.integrate(g, 0.0, smax, spec.rel_tol, &err, &l1);
  if (std::isfinite(v) && acceptable(err, l1, spec)) return {v, err};
  std::ostringstream os;
  os << "singular quadrature did not converge near " << b
     << ", error estimate " << err;
  throw Error(ErrorCode::NonIntegrable, os.str());
}

}  // namespace

QuadratureResult integrate_points(const PointIntegrand& f,
                                  const QuadratureSpec& spec) {
  spec.validate();
  const double a = spec.lower;
  const double b = spec.upper;
  if (spec.singular_lower && spec.singular_upper) {
    const double m = a + 0.5 * (b - a);
    const auto left = lower_singular_piece(f, a, m, spec);
    const auto right = upper_singular_piece(f, m, b, spec);
    return {left.value + right.value, left.error + right.error};
  }
  if (spec.singular_lower) return lower_singular_piece(f, a, b, spec);
  if (spec.singular_upper) return upper_singular_piece(f, a, b, spec);
  return plain_piece(f, a, b, spec);
}

}  // namespace bicons::numerics
