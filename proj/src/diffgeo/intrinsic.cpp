#include "bicons/diffgeo/intrinsic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bicons/numerics/error.hpp"

namespace bicons::diffgeo {

ProfileCurvature orthogonal_curvature(const JetProfile& E, const JetProfile& G,
                                      double s) {
  const Jet4 x = Jet4::variable(s);
  const Jet4 e = E(x);
  const Jet4 g = G(x);
  if (!(e.value() > 0.0) || !(g.value() > 0.0)) {
    throw Error(ErrorCode::DegenerateMetric,
                "orthogonal metric coefficients must be positive");
  }
  const Jet4 w = sqrt(e * g);
  // K = -(1 / (2 sqrt(EG))) d/ds (G' / sqrt(EG)).
  const Jet4 k = -(g.differentiate() / w).differentiate() / (2.0 * w);
  return {k.value(), k.derivative(1)};
}

LevelCurveCircle level_curve_circle_check_orthogonal(const JetProfile& E,
                                                     const JetProfile& G,
                                                     double c, double s) {
  const ProfileCurvature pc = orthogonal_curvature(E, G, s);
  const Jet4 x = Jet4::variable(s);
  const Jet4 e = E(x);
  const Jet4 g = G(x);
  if (std::abs(pc.dK) <=
      4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(pc.K))) {
    std::ostringstream os;
    os << "grad K vanishes at s=" << s;
    throw Error(ErrorCode::CMCPoint, os.str());
  }
  if (!(c - pc.K > 0.0)) {
    std::ostringstream os;
    os << "level-curve criterion needs c - K > 0, got c=" << c
       << " K=" << pc.K;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const double sqrtE = std::sqrt(e.value());
  LevelCurveCircle r;
  r.K = pc.K;
  r.grad_K = std::abs(pc.dK) / sqrtE;
  r.kappa_geodesic =
      std::abs(g.derivative(1)) / (2.0 * g.value() * sqrtE);
  r.kappa_formula = 3.0 * r.grad_K / (8.0 * (c - pc.K));
  return r;
}

LevelCurveCircle level_curve_circle_check(const JetProfile& phi, double c,
                                          double u) {
  const JetProfile conformal = [&phi](const Jet4& x) {
    return exp(2.0 * phi(x));
  };
  return level_curve_circle_check_orthogonal(conformal, conformal, c, u);
}

}  // namespace bicons::diffgeo
