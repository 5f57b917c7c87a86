#pragma once

#include <memory>
#include <vector>

#include "bicons/diffgeo/intrinsic.hpp"
#include "bicons/diffgeo/surface.hpp"
#include "bicons/numerics/primitive.hpp"

namespace bicons::s3 {

/// Lower end of the admissible C range, 4 / 3^(3/2).
double c_threshold();

/// The c = 1 family: C > 4/3^(3/2), C1 = 16 3^(1/4) C, branch sign and
/// integration constant of zeta.
struct FamilyParamsS3 {
  double C;
  double C1;
  double sign = 1.0;
  double c_base = 0.0;

  /// InvalidC unless C > 4/3^(3/2); InvalidArgument unless sign = +-1.
  static FamilyParamsS3 make(double C, double sign = 1.0, double c_base = 0.0);
};

/// T(xi) = -xi^(8/3) + 3 C xi^2 - 3.
double gap(double C, double xi);
/// T(root + d) for a root of T, without the cancellation of gap().
double gap_near(double C, double root, double d);
/// T at a point of (xi01, xi02) given its distances to both roots.
double gap_inside(double C, double xi01, double xi02, double x, double from01,
                  double from02);

/// L(k) = -16/9 - 16 k^2 + C1 k^(3/2).
double L_of_k(double C1, double k);
/// k = 3^(-3/2) xi^(4/3).
double k_of_xi(double xi);

struct DomainRoots {
  double xi01, xi00, xi02;
  double k01, k02;
  double T00;  // T(xi00)
};

/// Roots of T bracketing xi00 = (9C/4)^(3/2). DegenerateDomain when
/// T(xi00) is within roundoff of zero.
DomainRoots domain_roots(double C, double tol = 1e-12);

struct MetricCoeffs {
  double E;
  double G;
};

/// E = 3 / (xi^2 T), G = 1 / xi^2 on (xi01, xi02); OutOfDomain elsewhere.
MetricCoeffs metric_gC(double C, const DomainRoots& roots, double xi);
MetricCoeffs metric_gC(double C, double xi);

/// Jet versions for the intrinsic oracle.
diffgeo::JetProfile metric_E_jet(double C);
diffgeo::JetProfile metric_G_jet();

/// K = 1 - xi^(8/3) / 9 and dK/dxi.
double gauss_curvature_DC(double xi);
double gauss_curvature_DC_prime(double xi);
/// xi-component of grad K, -(8/81) xi^(11/3) T.
double grad_K_component(double C, double xi);

/// zeta0 and everything built on it for one admissible C.
class LocalFamily {
 public:
  explicit LocalFamily(const FamilyParamsS3& params, double rel_tol = 1e-12);

  const FamilyParamsS3& params() const noexcept { return params_; }
  const DomainRoots& roots() const noexcept { return roots_; }

  /// zeta0(xi) = int_{xi00}^{xi} sqrt(C) t^(4/3) / ((C t^2 - 1) sqrt(T)) dt;
  /// the ends return the limits zeta_{0,-1}, zeta_{0,1}.
  double zeta0(double xi) const;
  double zeta0_prime(double xi) const;
  double zeta_lower() const { return zeta_->lower_limit(); }
  double zeta_upper() const { return zeta_->upper_limit(); }
  const numerics::SingularPrimitive& zeta_primitive() const { return *zeta_; }

  /// Phi_C(xi, theta) in the unit sphere of R^4, and its first partials.
  diffgeo::Vec4 immersion(double xi, double theta) const;
  diffgeo::Tangents partials(double xi, double theta) const;
  diffgeo::ImmersionPatch patch(const diffgeo::Rect& domain) const;

 private:
  void require_domain(double xi) const;

  FamilyParamsS3 params_;
  DomainRoots roots_;
  std::shared_ptr<const numerics::SingularPrimitive> zeta_;
};

double zeta0(double C, double xi);
diffgeo::Vec4 immersion_PhiC(const FamilyParamsS3& params, double xi,
                             double theta);

struct KOdeReport {
  std::vector<double> t;
  std::vector<double> k;
  std::vector<double> turning_times;
  double k_min;
  double k_max;
  double max_drift;       // max |(k')^2 + (16/9) k^2 + 16 k^4 - C1 k^(7/2)|
  double relative_drift;  // max_drift over the largest term magnitude
};

/// Integrates k'' = -(16/9) k - 32 k^3 + (7/4) C1 k^(5/2) from k_start in
/// (k01, k02) with k' taken from the prime integral, until `turning_points`
/// zeros of k' have been crossed or t_end is reached.
KOdeReport curvature_ode_k(const FamilyParamsS3& params, double k_start,
                           int direction, double t_end, double tol = 1e-10,
                           std::size_t turning_points = 6);

struct BridgeResult {
  double u;
  double C;
};

/// u(phi) = int_{phi0}^{phi} dtau / sqrt((b/3) e^(-2tau/3) - e^(2tau) + a)
/// with phi0 the image of xi00, and C = a (-b)^(-3/4).
BridgeResult phi_coordinate_bridge(double a, double b, double phi);

/// Pulls e^(2 phi)(du^2 + dv^2) back through xi = (-b)^(3/8) e^(-phi),
/// theta = (-b)^(3/8) v, differencing u(phi) numerically, and returns the
/// largest relative mismatch with metric_gC over the given phi values.
double bridge_metric_check(double a, double b, const std::vector<double>& phis);

/// 3 phi''' + 2 phi' phi'' at u for phi = 3 log cosh(u/3).
double c0_ode_residual(double u);
/// 8 c e^(2 phi) phi' + 2 phi' phi'' + 3 phi''' for a jet profile phi.
double master_ode_residual(const diffgeo::JetProfile& phi, double c, double u);

struct K01Bound {
  double k01;
  double bound;      // (16 / (9 C1))^(2/3)
  double xi01;
  double xi_bound;   // C^(-1/2)
  bool holds;
};

K01Bound k01_bound_report(double C);

}  // namespace bicons::s3
