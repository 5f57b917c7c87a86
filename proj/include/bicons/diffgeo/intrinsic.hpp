#pragma once

#include <functional>

#include "bicons/numerics/jet.hpp"

namespace bicons::diffgeo {

using Jet4 = numerics::Jet<4>;
/// A metric coefficient (or conformal exponent) as a function of the one
/// coordinate it depends on, evaluated on jets.
using JetProfile = std::function<Jet4(const Jet4&)>;

struct ProfileCurvature {
  double K;   // Gauss curvature
  double dK;  // dK/ds
};

/// Gauss curvature of E(s) ds^2 + G(s) dt^2 and its s-derivative (Brioschi
/// formula specialized to orthogonal coefficients depending on s only).
ProfileCurvature orthogonal_curvature(const JetProfile& E, const JetProfile& G,
                                      double s);

struct LevelCurveCircle {
  double kappa_geodesic;
  double kappa_formula;  // 3 |grad K| / (8 (c - K))
  double K;
  double grad_K;  // |grad K|
};

/// Level curves s = const of E(s) ds^2 + G(s) dt^2 against the circle
/// criterion in a space form of curvature c. Throws CMCPoint where K' = 0 and
/// InvalidArgument unless c - K > 0.
LevelCurveCircle level_curve_circle_check_orthogonal(const JetProfile& E,
                                                     const JetProfile& G,
                                                     double c, double s);

/// Same for the conformal metric e^(2 phi(u)) (du^2 + dv^2).
LevelCurveCircle level_curve_circle_check(const JetProfile& phi, double c,
                                          double u);

}  // namespace bicons::diffgeo
