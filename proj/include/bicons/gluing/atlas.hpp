#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <vector>

#include "bicons/diffgeo/surface.hpp"
#include "bicons/numerics/primitive.hpp"
#include "bicons/s3/family.hpp"

namespace bicons::gluing {

/// Open interval of admissible C* for a given C.
struct CstarRange {
  double lower = 0.0;
  double upper;

  bool contains(double cstar) const noexcept {
    return cstar > lower && cstar < upper;
  }
};

/// upper = (C - 4/3^(3/2))^(-1/2). InvalidC below the threshold.
CstarRange cstar_range(double C);

/// InvalidCstar unless cstar lies in cstar_range(C).
void require_cstar(double C, double cstar);

/// Which continuity branch fixes c_k from c_{k-1}. `Smooth` is the C^3 choice;
/// `Rejected` keeps c_k = c0 and only serves as a negative control.
enum class PhaseBranch { Smooth, Rejected };

struct GluingParams {
  double C;
  double Cstar;
  double c0 = 0.0;
};

/// Reduce an angle into (-pi, pi].
double reduce_angle(double x);
/// Signed distance of two angles modulo 2 pi, in [-pi, pi].
double angle_distance(double a, double b);

/// Atlas of the global construction. Immutable once built.
class GluingAtlas {
 public:
  GluingAtlas(const GluingParams& params, int k_max = 11,
              PhaseBranch branch = PhaseBranch::Smooth, double rel_tol = 1e-12);

  const GluingParams& params() const noexcept { return params_; }
  const s3::DomainRoots& roots() const noexcept { return family_->roots(); }
  const s3::LocalFamily& family() const noexcept { return *family_; }
  int k_max() const noexcept { return k_max_; }
  PhaseBranch branch() const noexcept { return branch_; }

  /// h_{0,-1} and h_{0,1}.
  double h_lower() const noexcept { return h0_->lower_limit(); }
  double h_upper() const noexcept { return h0_->upper_limit(); }
  /// h_{0,1} - h_{0,-1}; F has period twice this.
  double half_period() const noexcept { return h_upper() - h_lower(); }

  double zeta_lower() const { return family_->zeta_lower(); }
  double zeta_upper() const { return family_->zeta_upper(); }

  /// h0(xi) on [xi01, xi02] (ends give the limits), its derivative inside.
  double h0(double xi) const;
  double h0_prime(double xi) const;
  const numerics::SingularPrimitive& h0_primitive() const { return *h0_; }

  /// Grid point h_{0,k}, k != 0, any integer k.
  double grid_point(int k) const;
  /// Strip containing h: strip k is [h_{0,1} + (k-1) P, h_{0,1} + k P).
  int strip_of(double h) const;
  /// Ends of strip k.
  double strip_lo(int k) const;
  double strip_hi(int k) const;

  /// c_k from the closed form, before and after reduction.
  double phase_closed_raw(int k) const;
  double phase(int k) const;

  /// Tables for |k| <= k_max.
  const std::map<int, double>& grid() const noexcept { return grid_; }
  const std::map<int, double>& phases() const noexcept { return phases_; }
  /// c_k generated by the step-by-step recursion from c0, reduced.
  const std::map<int, double>& phases_recursive() const noexcept {
    return phases_rec_;
  }

 private:
  GluingParams params_;
  int k_max_;
  PhaseBranch branch_;
  std::shared_ptr<const s3::LocalFamily> family_;
  std::shared_ptr<const numerics::SingularPrimitive> h0_;
  std::map<int, double> grid_;
  std::map<int, double> phases_;
  std::map<int, double> phases_rec_;
};

/// F on strip k, valid on the closed strip (ends give the grid values).
double F_on_strip(const GluingAtlas& atlas, int k, double h);
/// F for any real h.
double F_profile(const GluingAtlas& atlas, double h);
/// dF/dh on the open strip containing h (zero at grid points).
double F_prime(const GluingAtlas& atlas, double h);

/// First two sphere components on strip k, (Phi^1, Phi^2), closed strip.
Eigen::Vector2d planar_on_strip(const GluingAtlas& atlas, int k, double h);

struct GridReport {
  double max_grid_defect;     // closed-form grid vs h_{0,1} + (k-1) P etc.
  double max_spacing_defect;  // |h_{0,k+1} - h_{0,k} - P|
  double max_phase_defect;    // recursion vs closed form, mod 2 pi
};

GridReport grid_report(const GluingAtlas& atlas);

struct OrderMismatch {
  int order;
  double left;
  double right;
  double mismatch;  // relative
};

struct ComponentSmoothness {
  std::vector<OrderMismatch> orders;  // 0..max_order
  double worst(int from_order) const;
};

struct JunctionReport {
  int k;           // grid index of the junction
  double h;
  double step;
  ComponentSmoothness F;
  ComponentSmoothness phi1;
  ComponentSmoothness phi2;
};

/// Length over which F bends near h_{0,k}: sqrt(2 (xi02 - xi01) / |F''|),
/// with |F''| = xi^2 |T'(xi)| / 6 at the junction value, capped by the half
/// period.
double junction_length(const GluingAtlas& atlas, int k);

/// One-sided differences of F, Phi^1 and Phi^2 on both sides of the grid
/// point h_{0,k}, orders 0..max_order. The step is `rel_step` times
/// junction_length, which also sets the floor of the relative mismatch.
JunctionReport junction_smoothness(const GluingAtlas& atlas, int k,
                                   int max_order = 3, double rel_step = 0.004);

/// The strip whose lower end is h_{0,k}.
int strip_above_grid(int k);

/// Psi(h, theta) = ((C*/F) cos(theta/C*), (C*/F) sin(theta/C*), h).
Eigen::Vector3d immersion_Psi(const GluingAtlas& atlas, double h, double theta);
diffgeo::Tangents partials_Psi(const GluingAtlas& atlas, double h,
                               double theta);
diffgeo::ImmersionPatch patch_Psi(const GluingAtlas& atlas,
                                  const diffgeo::Rect& domain);

/// Closed-form mean curvature of Psi at profile value xi, normalized as
/// (k1 + k2) / 2, i.e. half of the trace returned by diffgeo.
double mean_curvature_Psi(const GluingAtlas& atlas, double xi);

/// Coefficients of the metric of Psi and of the complete sphere immersion,
/// 3F^2/(3F^2 - C*^2 T(F)) dh^2 + dtheta^2 / F^2.
s3::MetricCoeffs metric_complete(const GluingAtlas& atlas, double h);

/// The complete biconservative immersion into the unit sphere.
diffgeo::Vec4 immersion_Phi_complete(const GluingAtlas& atlas, double h,
                                     double theta);
diffgeo::Tangents partials_Phi_complete(const GluingAtlas& atlas, double h,
                                        double theta);
diffgeo::ImmersionPatch patch_Phi_complete(const GluingAtlas& atlas,
                                           const diffgeo::Rect& domain);

struct PeriodicityReport {
  double period;          // 2 (h_{0,1} - h_{0,-1})
  double F_defect;        // max |F(h + period) - F(h)|
  double phi34_defect;    // max over the last two components
  double phi12_defect;    // max over the first two components
  double phase_defect;    // 2 (zeta_{0,1} - zeta_{0,-1}) reduced mod 2 pi
  bool periodic;          // phi12_defect <= tol
  int best_multiple;      // q <= max_multiple minimizing |2 q dzeta mod 2 pi|
  double best_multiple_defect;
};

PeriodicityReport periodicity_probe(const GluingAtlas& atlas, double tol,
                                    int samples = 64, int max_multiple = 1000);

/// 1 - |n_left . n_right| for the unit normals of the complete immersion
/// built from one-sided h-derivatives at h_{0,k}.
double tangent_plane_defect(const GluingAtlas& atlas, int k, double theta,
                            double rel_step = 0.004);

}  // namespace bicons::gluing
