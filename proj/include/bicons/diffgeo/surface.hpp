#pragma once

#include <Eigen/Dense>
#include <functional>

namespace bicons::diffgeo {

enum class Ambient { Euclidean3, Sphere3 };

/// Points and tangent vectors. Euclidean3 data keeps the fourth entry zero.
using Vec4 = Eigen::Vector4d;

struct Rect {
  double u_lo, u_hi, v_lo, v_hi;
  bool contains(double u, double v) const noexcept {
    return u > u_lo && u < u_hi && v > v_lo && v < v_hi;
  }
};

struct Tangents {
  Vec4 xu;
  Vec4 xv;
};

/// A parametrized surface piece. `first_partials` may be left empty, in which
/// case they are finite differences of `position`. `scale` is a characteristic
/// coordinate length used to size difference steps.
struct ImmersionPatch {
  Rect domain{};
  Ambient ambient = Ambient::Euclidean3;
  std::function<Vec4(double, double)> position;
  std::function<Tangents(double, double)> first_partials;
  double scale = 1.0;
};

/// Everything the oracle reports at one point. Only the fields filled by the
/// producing call are meaningful: fundamental_forms fills E, F, G;
/// shape_operator adds the second form, normal, shape, f and K;
/// curvatures adds grad_f and grad_K (coordinate components, index raised).
struct SurfaceData {
  double E = 0.0, F = 0.0, G = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;
  Vec4 normal = Vec4::Zero();
  Eigen::Matrix2d shape = Eigen::Matrix2d::Zero();
  double f = 0.0;
  double K = 0.0;
  Eigen::Vector2d grad_f = Eigen::Vector2d::Zero();
  Eigen::Vector2d grad_K = Eigen::Vector2d::Zero();

  Eigen::Matrix2d metric() const {
    Eigen::Matrix2d g;
    g << E, F, F, G;
    return g;
  }
  /// |w|_g for a tangent vector in coordinate components.
  double norm(const Eigen::Vector2d& w) const {
    return std::sqrt(std::max(0.0, w.dot(metric() * w)));
  }
};

Tangents partials(const ImmersionPatch& patch, double u, double v);

SurfaceData fundamental_forms(const ImmersionPatch& patch, double u, double v);

/// Adds the unit normal (orthogonal to the position as well on the sphere),
/// the second form, A = g^-1 h, f = tr A and K. The normal is flipped so that
/// f >= 0 whenever |f| > 1e-8.
SurfaceData shape_operator(const ImmersionPatch& patch, double u, double v);

SurfaceData curvatures(const ImmersionPatch& patch, double u, double v);

/// |A grad f + (f/2) grad f|_g / max(|grad f|_g |f| / 2, floor). Where grad f
/// is numerically zero (|grad f|_g <= grad_floor max(1, f^2)) the numerator is
/// returned unnormalized.
double biconservativity_residual(const SurfaceData& s, double floor = 1e-12,
                                 double grad_floor = 1e-6);
double biconservativity_residual(const ImmersionPatch& patch, double u,
                                 double v);

struct PatchCheck {
  double max_norm_defect = 0.0;       // max ||X| - 1| (Sphere3 only)
  double max_partial_mismatch = 0.0;  // supplied vs differenced partials, relative
};

/// Samples an n x n interior grid and measures the patch invariants.
PatchCheck validate_patch(const ImmersionPatch& patch, int n);

}  // namespace bicons::diffgeo
