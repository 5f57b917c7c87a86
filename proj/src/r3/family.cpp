#include "bicons/r3/family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/finite_difference.hpp"
#include "bicons/numerics/roots.hpp"

namespace bicons::r3 {

FamilyParamsR3 FamilyParamsR3::from_C(double C) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    std::ostringstream os;
    os << "C must be a positive real, got " << C;
    throw Error(ErrorCode::InvalidC, os.str());
  }
  return {C, std::cbrt(9.0 / C)};
}

FamilyParamsR3 FamilyParamsR3::from_C1(double C1) {
  if (!(C1 > 0.0) || !std::isfinite(C1)) {
    std::ostringstream os;
    os << "C1 must be a positive real, got " << C1;
    throw Error(ErrorCode::InvalidC, os.str());
  }
  return {9.0 / (C1 * C1 * C1), C1};
}

double boundary_radius(double C1) { return std::pow(C1, -1.5); }

double profile_t(double C1, double rho) {
  const double r0 = boundary_radius(C1);
  if (!(rho > r0) || !std::isfinite(rho)) {
    std::ostringstream os;
    os << "profile_t needs rho > C1^(-3/2) = " << r0 << ", got " << rho;
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  const double c13 = std::cbrt(rho);
  const double w = std::sqrt(std::max(0.0, C1 * c13 * c13 - 1.0));
  const double sc = std::sqrt(C1);
  return 1.5 / C1 * (c13 * w + std::log(sc * c13 + w) / sc);
}

double complete_profile_x(double C1, double t) {
  const double r0 = boundary_radius(C1);
  const double s = std::abs(t);
  if (s == 0.0) return r0;
  auto g = [&](double rho) {
    return rho <= r0 ? -s : profile_t(C1, rho) - s;
  };
  const auto b = numerics::expand_upward(g, r0, 2.0 * r0 + s);
  return numerics::find_root(g, b, 1e-300);
}

double theta_of_u(double u) {
  const double s = std::sinh(u);
  return s * s;
}

double rho_of_theta(double C1, double theta) {
  return boundary_radius(C1) * std::pow(theta + 1.0, 1.5);
}

Eigen::Vector3d immersion_theta(double C1, double theta, double v) {
  const double k = boundary_radius(C1);
  const double r = std::pow(theta + 1.0, 1.5);
  const double z =
      1.5 * (std::sqrt(theta * theta + theta) +
             std::log(std::sqrt(theta) + std::sqrt(theta + 1.0)));
  return k * Eigen::Vector3d(r * std::cos(v), r * std::sin(v), z);
}

Eigen::Vector3d immersion_rho(double C1, double rho, double v) {
  return {rho * std::cos(v), rho * std::sin(v), profile_t(C1, rho)};
}

Eigen::Vector3d immersion_XC(const FamilyParamsR3& p, double u, double v) {
  const double k = std::sqrt(p.C) / 3.0;
  const double c3 = std::pow(std::cosh(u), 3);
  return k * Eigen::Vector3d(c3 * std::cos(3.0 * v), c3 * std::sin(3.0 * v),
                             1.5 * (0.5 * std::sinh(2.0 * u) + u));
}

diffgeo::Tangents partials_XC(const FamilyParamsR3& p, double u, double v) {
  const double sc = std::sqrt(p.C);
  const double ch = std::cosh(u), sh = std::sinh(u);
  const double c3v = std::cos(3.0 * v), s3v = std::sin(3.0 * v);
  diffgeo::Tangents t;
  t.xu = sc * diffgeo::Vec4(ch * ch * sh * c3v, ch * ch * sh * s3v, ch * ch, 0.0);
  t.xv = sc * ch * ch * ch * diffgeo::Vec4(-s3v, c3v, 0.0, 0.0);
  return t;
}

diffgeo::ImmersionPatch patch_XC(const FamilyParamsR3& p,
                                 const diffgeo::Rect& domain) {
  diffgeo::ImmersionPatch patch;
  patch.domain = domain;
  patch.ambient = diffgeo::Ambient::Euclidean3;
  patch.position = [p](double u, double v) {
    diffgeo::Vec4 x;
    x << immersion_XC(p, u, v), 0.0;
    return x;
  };
  patch.first_partials = [p](double u, double v) {
    return partials_XC(p, u, v);
  };
  return patch;
}

double conformal_factor(const FamilyParamsR3& p, double u) {
  return p.C * std::pow(std::cosh(u), 6);
}

double gauss_curvature_XC(const FamilyParamsR3& p, double u) {
  return -3.0 / (p.C * std::pow(std::cosh(u), 8));
}

double mean_curvature_XC(const FamilyParamsR3& p, double u) {
  const double rho = std::sqrt(p.C) / 3.0 * std::pow(std::cosh(u), 3);
  return mean_curvature_rho(p.C1, rho);
}

CompletenessReport completeness_bound_check(const FamilyParamsR3& p,
                                            const std::vector<double>& u_grid,
                                            const std::vector<double>& v_grid) {
  CompletenessReport r{std::numeric_limits<double>::infinity(), 0.0, true, true};
  for (double u : u_grid) {
    for (double v : v_grid) {
      (void)v;  // the factor does not depend on v
      const double ratio = conformal_factor(p, u) / p.C;
      if (ratio < r.min_ratio) {
        r.min_ratio = ratio;
        r.argmin_u = u;
      }
      if (ratio < 1.0) r.bounded_below = false;
      if (ratio == 1.0 && u != 0.0) r.minimum_only_on_axis = false;
    }
  }
  return r;
}

Pose Pose::mirror_boundary_plane() {
  Pose p;
  p.R = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
  return p;
}

Pose Pose::translate(const Eigen::Vector3d& a) {
  Pose p;
  p.a = a;
  return p;
}

namespace {

// The same quantities in the chart theta = C1 rho^(2/3) - 1, exact at the
// boundary theta = 0.
Eigen::Vector3d normal_at_theta(double theta, double v) {
  const double radial = -1.0 / std::sqrt(1.0 + theta);
  return {radial * std::cos(v), radial * std::sin(v),
          std::sqrt(theta / (1.0 + theta))};
}

double mean_curvature_at_theta(double C1, double theta) {
  return 2.0 / 3.0 * std::pow(C1, 1.5) / ((1.0 + theta) * (1.0 + theta));
}

Eigen::Vector3d grad_mean_curvature_at_theta(double C1, double theta, double v) {
  const double k = -8.0 * C1 * C1 * C1 / (9.0 * std::pow(1.0 + theta, 4.5));
  return k * Eigen::Vector3d(theta * std::cos(v), theta * std::sin(v),
                             std::sqrt(theta));
}

double theta_of_rho(double C1, double rho) {
  const double c13 = std::cbrt(rho);
  return std::max(0.0, C1 * c13 * c13 - 1.0);
}

}  // namespace

Eigen::Vector3d normal_rho(double C1, double rho, double v) {
  return normal_at_theta(theta_of_rho(C1, rho), v);
}

double mean_curvature_rho(double C1, double rho) {
  return 2.0 / (3.0 * std::sqrt(C1) * std::pow(rho, 4.0 / 3.0));
}

Eigen::Vector3d grad_mean_curvature_rho(double C1, double rho, double v) {
  return grad_mean_curvature_at_theta(C1, theta_of_rho(C1, rho), v);
}

GluingReport gluing_conditions_check(double C1, double C1p, const Pose& pose,
                                     int n_samples) {
  if (n_samples < 3) {
    throw Error(ErrorCode::InvalidArgument, "gluing check needs >= 3 samples");
  }
  const double r0 = boundary_radius(C1);
  const double r0p = boundary_radius(C1p);
  GluingReport g;
  for (int i = 0; i < n_samples; ++i) {
    const double v = 2.0 * std::numbers::pi * i / n_samples;
    const Eigen::Vector3d p(r0 * std::cos(v), r0 * std::sin(v), 0.0);
    // Closest point on the moved boundary circle of the other piece.
    const Eigen::Vector3d q = pose.R.transpose() * (p - pose.a);
    const double w = std::atan2(q.y(), q.x());
    const Eigen::Vector3d b =
        pose.R * Eigen::Vector3d(r0p * std::cos(w), r0p * std::sin(w), 0.0) +
        pose.a;
    g.position = std::max(g.position, (p - b).norm());

    const Eigen::Vector3d n = normal_at_theta(0.0, v);
    const Eigen::Vector3d np = pose.R * normal_at_theta(0.0, w);
    g.normal = std::max(g.normal, n.cross(np).norm());

    g.mean_curvature =
        std::max(g.mean_curvature, std::abs(mean_curvature_at_theta(C1, 0.0) -
                                            mean_curvature_at_theta(C1p, 0.0)));
    const Eigen::Vector3d gf = grad_mean_curvature_at_theta(C1, 0.0, v);
    const Eigen::Vector3d gfp = pose.R * grad_mean_curvature_at_theta(C1p, 0.0, w);
    g.grad_f = std::max(g.grad_f, (gf - gfp).norm());
  }
  return g;
}

double homothety_check(double C1,
                       const std::vector<Eigen::Vector2d>& theta_v_samples) {
  const double k = boundary_radius(C1);
  double worst = 0.0;
  for (const auto& s : theta_v_samples) {
    const Eigen::Vector3d lhs = immersion_rho(C1, rho_of_theta(C1, s[0]), s[1]);
    const Eigen::Vector3d rhs = k * immersion_theta(1.0, s[0], s[1]);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

std::vector<SmoothnessReport> completion_smoothness(double C1, double step) {
  const double r0 = boundary_radius(C1);
  auto x = [C1](double t) { return complete_profile_x(C1, t); };
  std::vector<SmoothnessReport> out;
  for (int order = 1; order <= 3; ++order) {
    const double left = numerics::fd_derivative_step(
        x, 0.0, order, step, numerics::Stencil::Backward, 4);
    const double right = numerics::fd_derivative_step(
        x, 0.0, order, step, numerics::Stencil::Forward, 4);
    // x scales like r0 and t like r0, so the n-th derivative like r0^(1-n).
    const double scale =
        std::max({std::abs(left), std::abs(right), std::pow(r0, 1.0 - order)});
    out.push_back({order, left, right, std::abs(left - right) / scale});
  }
  return out;
}

}  // namespace bicons::r3
