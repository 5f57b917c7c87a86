#include "bicons/diffgeo/surface.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/finite_difference.hpp"

namespace bicons::diffgeo {

namespace {

using numerics::Stencil;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kOrientTol = 1e-8;

// Sample abscissae and weights (already divided by h^order) for a derivative
// at x inside (lo, hi), shrinking the step near the ends and switching to a
// one-sided stencil when the central one would not fit.
struct Plan {
  std::vector<double> at;
  std::vector<double> w;
};

Plan plan(double x, double lo, double hi, double h, int order) {
  const double room_lo = x - lo;
  const double room_hi = hi - x;
  const auto central = numerics::make_stencil(order, Stencil::Central, 4);
  const double reach = central.offsets.back();
  Stencil kind = Stencil::Central;
  double step = h;
  if (reach * step >= std::min(room_lo, room_hi)) {
    const double fit = 0.8 * std::min(room_lo, room_hi) / reach;
    if (fit >= h / 16.0) {
      step = fit;
    } else {
      kind = room_hi > room_lo ? Stencil::Forward : Stencil::Backward;
    }
  }
  const auto s = kind == Stencil::Central ? central
                                          : numerics::make_stencil(order, kind, 4);
  if (kind != Stencil::Central) {
    const double room = kind == Stencil::Forward ? room_hi : room_lo;
    step = std::min(h, 0.8 * room / std::abs(s.offsets.back()));
  }
  if (!(step > 0.0) || x + step == x) {
    std::ostringstream os;
    os << "no room for a difference stencil at " << x << " in (" << lo << ", "
       << hi << ")";
    throw Error(ErrorCode::DomainTooSmall, os.str());
  }
  Plan p;
  const double scale = std::pow(step, order);
  for (std::size_t j = 0; j < s.offsets.size(); ++j) {
    if (s.weights[j] == 0.0) continue;
    p.at.push_back(x + s.offsets[j] * step);
    p.w.push_back(s.weights[j] / scale);
  }
  return p;
}

void require_interior(const ImmersionPatch& patch, double u, double v) {
  if (!patch.domain.contains(u, v)) {
    std::ostringstream os;
    os << "point (" << u << ", " << v << ") is not interior to the patch";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
}

double step1(const ImmersionPatch& p) {
  return numerics::default_fd_step(1, p.scale, 4);
}

// Gradient samples sit on the f-noise floor of the nested differences, so
// they use a wider step than the partials.
double step_grad(const ImmersionPatch& p) { return 4e-3 * p.scale; }

Vec4 unit_normal(const ImmersionPatch& patch, const Vec4& x,
                 const Tangents& t) {
  Vec4 n;
  if (patch.ambient == Ambient::Euclidean3) {
    const Eigen::Vector3d c = t.xu.head<3>().cross(t.xv.head<3>());
    n << c, 0.0;
  } else {
    Eigen::Matrix4d m;
    m.col(0) = x;
    m.col(1) = t.xu;
    m.col(2) = t.xv;
    for (int i = 0; i < 4; ++i) {
      m.col(3) = Vec4::Unit(i);
      n[i] = m.determinant();
    }
  }
  const double len = n.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorCode::DegenerateMetric, "tangents are linearly dependent");
  }
  return n / len;
}

}  // namespace

Tangents partials(const ImmersionPatch& patch, double u, double v) {
  if (patch.first_partials) return patch.first_partials(u, v);
  const auto& d = patch.domain;
  const double h = step1(patch);
  Tangents t{Vec4::Zero(), Vec4::Zero()};
  const Plan pu = plan(u, d.u_lo, d.u_hi, h, 1);
  for (std::size_t j = 0; j < pu.at.size(); ++j) {
    t.xu += pu.w[j] * patch.position(pu.at[j], v);
  }
  const Plan pv = plan(v, d.v_lo, d.v_hi, h, 1);
  for (std::size_t j = 0; j < pv.at.size(); ++j) {
    t.xv += pv.w[j] * patch.position(u, pv.at[j]);
  }
  return t;
}

SurfaceData fundamental_forms(const ImmersionPatch& patch, double u,
                              double v) {
  require_interior(patch, u, v);
  const Tangents t = partials(patch, u, v);
  SurfaceData s;
  s.E = t.xu.dot(t.xu);
  s.F = t.xu.dot(t.xv);
  s.G = t.xv.dot(t.xv);
  const double det = s.E * s.G - s.F * s.F;
  if (!(det > 0.0) || !std::isfinite(det)) {
    std::ostringstream os;
    os << "degenerate metric at (" << u << ", " << v << "): EG - F^2 = " << det;
    throw Error(ErrorCode::DegenerateMetric, os.str());
  }
  return s;
}

SurfaceData shape_operator(const ImmersionPatch& patch, double u, double v) {
  SurfaceData s = fundamental_forms(patch, u, v);
  const Tangents t = partials(patch, u, v);
  const Vec4 x = patch.position(u, v);
  Vec4 n = unit_normal(patch, x, t);

  const auto& d = patch.domain;
  const double h = step1(patch);
  Vec4 xuu = Vec4::Zero(), xuv = Vec4::Zero(), xvu = Vec4::Zero(),
       xvv = Vec4::Zero();
  const Plan pu = plan(u, d.u_lo, d.u_hi, h, 1);
  for (std::size_t j = 0; j < pu.at.size(); ++j) {
    const Tangents tj = partials(patch, pu.at[j], v);
    xuu += pu.w[j] * tj.xu;
    xvu += pu.w[j] * tj.xv;
  }
  const Plan pv = plan(v, d.v_lo, d.v_hi, h, 1);
  for (std::size_t j = 0; j < pv.at.size(); ++j) {
    const Tangents tj = partials(patch, u, pv.at[j]);
    xuv += pv.w[j] * tj.xu;
    xvv += pv.w[j] * tj.xv;
  }
  s.h11 = xuu.dot(n);
  s.h12 = 0.5 * (xuv.dot(n) + xvu.dot(n));
  s.h22 = xvv.dot(n);

  Eigen::Matrix2d II;
  II << s.h11, s.h12, s.h12, s.h22;
  s.shape = s.metric().inverse() * II;
  s.f = s.shape.trace();
  if (s.f < -kOrientTol) {
    n = -n;
    s.h11 = -s.h11;
    s.h12 = -s.h12;
    s.h22 = -s.h22;
    s.shape = -s.shape;
    s.f = -s.f;
  }
  s.normal = n;
  const double detA = s.shape.determinant();
  s.K = patch.ambient == Ambient::Sphere3 ? 1.0 + detA : detA;
  return s;
}

SurfaceData curvatures(const ImmersionPatch& patch, double u, double v) {
  SurfaceData s = shape_operator(patch, u, v);
  const auto& d = patch.domain;
  const double h = step_grad(patch);
  Eigen::Vector2d df = Eigen::Vector2d::Zero(), dK = Eigen::Vector2d::Zero();
  const Plan pu = plan(u, d.u_lo, d.u_hi, h, 1);
  for (std::size_t j = 0; j < pu.at.size(); ++j) {
    const SurfaceData sj = shape_operator(patch, pu.at[j], v);
    df[0] += pu.w[j] * sj.f;
    dK[0] += pu.w[j] * sj.K;
  }
  const Plan pv = plan(v, d.v_lo, d.v_hi, h, 1);
  for (std::size_t j = 0; j < pv.at.size(); ++j) {
    const SurfaceData sj = shape_operator(patch, u, pv.at[j]);
    df[1] += pv.w[j] * sj.f;
    dK[1] += pv.w[j] * sj.K;
  }
  const Eigen::Matrix2d ginv = s.metric().inverse();
  s.grad_f = ginv * df;
  s.grad_K = ginv * dK;
  return s;
}

double biconservativity_residual(const SurfaceData& s, double floor,
                                 double grad_floor) {
  const Eigen::Vector2d r = s.shape * s.grad_f + 0.5 * s.f * s.grad_f;
  const double num = s.norm(r);
  const double g = s.norm(s.grad_f);
  if (g <= grad_floor * std::max(1.0, s.f * s.f)) return num;
  return num / std::max(0.5 * g * std::abs(s.f), floor);
}

double biconservativity_residual(const ImmersionPatch& patch, double u,
                                 double v) {
  return biconservativity_residual(curvatures(patch, u, v));
}

PatchCheck validate_patch(const ImmersionPatch& patch, int n) {
  PatchCheck c;
  const auto& d = patch.domain;
  ImmersionPatch bare = patch;
  bare.first_partials = nullptr;
  for (int i = 0; i < n; ++i) {
    const double u = d.u_lo + (d.u_hi - d.u_lo) * (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      const double v = d.v_lo + (d.v_hi - d.v_lo) * (j + 0.5) / n;
      if (patch.ambient == Ambient::Sphere3) {
        c.max_norm_defect = std::max(
            c.max_norm_defect, std::abs(patch.position(u, v).norm() - 1.0));
      }
      if (patch.first_partials) {
        const Tangents a = patch.first_partials(u, v);
        const Tangents b = partials(bare, u, v);
        const double mu = (a.xu - b.xu).norm() / std::max(a.xu.norm(), kEps);
        const double mv = (a.xv - b.xv).norm() / std::max(a.xv.norm(), kEps);
        c.max_partial_mismatch = std::max({c.max_partial_mismatch, mu, mv});
      }
    }
  }
  return c;
}

}  // namespace bicons::diffgeo
