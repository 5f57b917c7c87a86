#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bicons/diffgeo/surface.hpp"

namespace bicons::r3 {

/// The c = 0 family: metric constant C and profile constant C1 = (9/C)^(1/3).
struct FamilyParamsR3 {
  double C;
  double C1;

  static FamilyParamsR3 from_C(double C);    // InvalidC unless C > 0
  static FamilyParamsR3 from_C1(double C1);  // InvalidC unless C1 > 0
};

/// Radius of the boundary circle of the half surface, C1^(-3/2).
double boundary_radius(double C1);

/// Height of the profile over radius rho > C1^(-3/2); OutOfDomain otherwise.
double profile_t(double C1, double rho);

/// Radius of the complete (even) profile at height t.
double complete_profile_x(double C1, double t);

/// Chart changes: theta = sinh^2 u = C1 rho^(2/3) - 1.
double theta_of_u(double u);
double rho_of_theta(double C1, double theta);

/// X_{C1}(theta, v) on the half surface, written in closed form.
Eigen::Vector3d immersion_theta(double C1, double theta, double v);
/// Same point assembled through the rho chart and profile_t.
Eigen::Vector3d immersion_rho(double C1, double rho, double v);

Eigen::Vector3d immersion_XC(const FamilyParamsR3& p, double u, double v);
diffgeo::Tangents partials_XC(const FamilyParamsR3& p, double u, double v);
diffgeo::ImmersionPatch patch_XC(const FamilyParamsR3& p,
                                 const diffgeo::Rect& domain);

/// Closed forms along X_C.
double conformal_factor(const FamilyParamsR3& p, double u);  // C cosh^6 u
double gauss_curvature_XC(const FamilyParamsR3& p, double u);
double mean_curvature_XC(const FamilyParamsR3& p, double u);

struct CompletenessReport {
  double min_ratio;           // min over the grid of factor / C
  double argmin_u;
  bool bounded_below;         // factor >= C everywhere
  bool minimum_only_on_axis;  // factor == C only where u == 0
};

CompletenessReport completeness_bound_check(const FamilyParamsR3& p,
                                            const std::vector<double>& u_grid,
                                            const std::vector<double>& v_grid);

/// Rigid (possibly orientation reversing) motion x -> R x + a.
struct Pose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d a = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }
  /// Reflection in the plane z = 0 holding the boundary circle.
  static Pose mirror_boundary_plane();
  static Pose translate(const Eigen::Vector3d& a);
};

/// Unit normal, mean curvature and its gradient of the half surface in the
/// rho chart.
Eigen::Vector3d normal_rho(double C1, double rho, double v);
double mean_curvature_rho(double C1, double rho);
Eigen::Vector3d grad_mean_curvature_rho(double C1, double rho, double v);

struct GluingReport {
  double position = 0.0;        // max distance between matched points
  double normal = 0.0;          // max |eta x eta'|
  double mean_curvature = 0.0;  // max |f - f'|
  double grad_f = 0.0;          // max |grad f - grad f'|
};

/// Matches the boundary circle of the C1 half surface against the boundary
/// circle of the C1p half surface moved by `pose`, at n_samples points.
GluingReport gluing_conditions_check(double C1, double C1p, const Pose& pose,
                                     int n_samples);

/// max over samples of |X_{C1}(theta, v) - C1^(-3/2) X_1(theta, v)|.
double homothety_check(double C1,
                       const std::vector<Eigen::Vector2d>& theta_v_samples);

struct SmoothnessReport {
  int order;
  double left;
  double right;
  double mismatch;  // relative
};

/// One-sided difference derivatives of x_{C1} at t = 0, orders 1..3.
std::vector<SmoothnessReport> completion_smoothness(double C1, double step);

}  // namespace bicons::r3
