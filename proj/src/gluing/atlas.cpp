#include "bicons/gluing/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/finite_difference.hpp"

namespace bicons::gluing {

using diffgeo::Vec4;

namespace {

constexpr double kPi = std::numbers::pi;

bool is_even(int k) { return k % 2 == 0; }

double parity_sign(int k) { return is_even(k) ? 1.0 : -1.0; }

// T(xi) on the closed domain, cancellation-free near the roots.
double gap_at(const s3::DomainRoots& r, double C, double xi) {
  return s3::gap_inside(C, r.xi01, r.xi02, xi, xi - r.xi01, r.xi02 - xi);
}

// 3 xi^2 - C*^2 T(xi), positive for admissible C*.
double radicand(const GluingAtlas& a, double xi) {
  const double T = gap_at(a.roots(), a.params().C, xi);
  return 3.0 * xi * xi - a.params().Cstar * a.params().Cstar * T;
}

using Located = numerics::SingularPrimitive::Point;

Located locate_on_strip(const GluingAtlas& a, int k, double h) {
  const double P = a.half_period();
  const double y = is_even(k) ? h - k * P
                              : 2.0 * a.h_upper() + (k - 1) * P - h;
  const auto& r = a.roots();
  const double len = r.xi02 - r.xi01;
  if (y <= a.h_lower()) return {r.xi01, 0.0, len};
  if (y >= a.h_upper()) return {r.xi02, len, 0.0};
  return a.h0_primitive().locate(y);
}

struct StripPoint {
  double xi;
  double dxi;    // dF/dh
  double dzeta;  // d(zeta0 o F)/dh
};

StripPoint strip_point(const GluingAtlas& a, int k, double h) {
  const Located loc = locate_on_strip(a, k, h);
  const double xi = loc.x;
  if (loc.from_a <= 0.0 || loc.from_b <= 0.0) return {xi, 0.0, 0.0};
  const auto& r = a.roots();
  const double C = a.params().C, cs = a.params().Cstar;
  const double T = s3::gap_inside(C, r.xi01, r.xi02, xi, loc.from_a, loc.from_b);
  const double q = std::sqrt(3.0 * xi * xi - cs * cs * T);
  const double s = parity_sign(k);
  const double dxi = s * xi * xi * std::sqrt(T) / q;
  const double dzeta =
      s * std::sqrt(C) * std::pow(xi, 10.0 / 3.0) / ((C * xi * xi - 1.0) * q);
  return {xi, dxi, dzeta};
}

Vec4 immersion_on_strip(const GluingAtlas& a, int k, double h, double theta) {
  const Eigen::Vector2d p = planar_on_strip(a, k, h);
  const double xi = F_on_strip(a, k, h);
  const double sc = std::sqrt(a.params().C);
  const double r = 1.0 / (sc * xi);
  return {p[0], p[1], r * std::cos(sc * theta), r * std::sin(sc * theta)};
}

double one_sided(const std::function<double(double)>& f, double h, int order,
                 double step, numerics::Stencil side) {
  return numerics::fd_derivative_step(f, h, order, step, side, 4);
}

ComponentSmoothness compare_sides(const std::function<double(double)>& left,
                                  const std::function<double(double)>& right,
                                  double h, int max_order, double step,
                                  double value_scale, double length) {
  ComponentSmoothness out;
  for (int n = 0; n <= max_order; ++n) {
    OrderMismatch m{n, 0.0, 0.0, 0.0};
    if (n == 0) {
      m.left = left(h);
      m.right = right(h);
    } else {
      m.left = one_sided(left, h, n, step, numerics::Stencil::Backward);
      m.right = one_sided(right, h, n, step, numerics::Stencil::Forward);
    }
    const double floor = value_scale / std::pow(length, n);
    const double denom = std::max({std::abs(m.left), std::abs(m.right), floor});
    m.mismatch = std::abs(m.left - m.right) / denom;
    out.orders.push_back(m);
  }
  return out;
}

// Unit vector orthogonal to the three given vectors of R^4.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Eigen::Matrix<double, 3, 4> m;
  m.row(0) = a.transpose();
  m.row(1) = b.transpose();
  m.row(2) = c.transpose();
  Vec4 n;
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix3d minor;
    int col = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      minor.col(col++) = m.col(j);
    }
    n[i] = ((i % 2) ? -1.0 : 1.0) * minor.determinant();
  }
  return n.normalized();
}

}  // namespace

CstarRange cstar_range(double C) {
  if (!(C > s3::c_threshold()) || !std::isfinite(C)) {
    std::ostringstream os;
    os << "C must exceed 4/3^(3/2) = " << s3::c_threshold() << ", got " << C;
    throw Error(ErrorCode::InvalidC, os.str());
  }
  return {0.0, 1.0 / std::sqrt(C - s3::c_threshold())};
}

void require_cstar(double C, double cstar) {
  const CstarRange r = cstar_range(C);
  if (!r.contains(cstar)) {
    std::ostringstream os;
    os << "C* must lie in (0, " << r.upper << ") for C=" << C << ", got "
       << cstar;
    throw Error(ErrorCode::InvalidCstar, os.str());
  }
}

double reduce_angle(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double angle_distance(double a, double b) {
  return std::remainder(a - b, 2.0 * kPi);
}

GluingAtlas::GluingAtlas(const GluingParams& params, int k_max,
                         PhaseBranch branch, double rel_tol)
    : params_(params), k_max_(k_max), branch_(branch) {
  require_cstar(params.C, params.Cstar);
  if (k_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "k_max must be >= 1");
  }
  if (!std::isfinite(params.c0)) {
    throw Error(ErrorCode::InvalidArgument, "c0 must be finite");
  }
  family_ = std::make_shared<const s3::LocalFamily>(
      s3::FamilyParamsS3::make(params.C), rel_tol);
  const auto& r = family_->roots();
  const double C = params.C, cs2 = params.Cstar * params.Cstar;
  const double a = r.xi01, b = r.xi02;
  auto g = [C, cs2, a, b](double x, double da, double db) {
    const double T = s3::gap_inside(C, a, b, x, da, db);
    return std::sqrt(3.0 * x * x - cs2 * T) / (x * x * std::sqrt(T));
  };
  h0_ = std::make_shared<const numerics::SingularPrimitive>(g, a, b, r.xi00,
                                                            48, rel_tol);

  const double h1 = h_upper(), hm1 = h_lower();
  for (int k = 1; k <= k_max_; ++k) {
    grid_[k] = k * h1 - (k - 1) * hm1;
    grid_[-k] = k * hm1 + (1 - k) * h1;
  }
  for (int k = -k_max_; k <= k_max_; ++k) phases_[k] = phase(k);

  const double z1 = zeta_upper(), zm1 = zeta_lower();
  auto step = [&](int j) {
    if (branch_ == PhaseBranch::Rejected) return 0.0;
    return -2.0 * (is_even(j) ? zm1 : z1);
  };
  auto flip = [&](double c) {
    return branch_ == PhaseBranch::Rejected ? c : -c;
  };
  phases_rec_[0] = reduce_angle(params.c0);
  for (int k = 1; k <= k_max_; ++k) {
    phases_rec_[k] = reduce_angle(step(k) + flip(phases_rec_[k - 1]));
  }
  for (int k = -1; k >= -k_max_; --k) {
    phases_rec_[k] = reduce_angle(step(k + 1) + flip(phases_rec_[k + 1]));
  }
}

double GluingAtlas::h0(double xi) const {
  const auto& r = roots();
  if (!(xi >= r.xi01 && xi <= r.xi02)) {
    std::ostringstream os;
    os << "xi=" << xi << " outside [" << r.xi01 << ", " << r.xi02 << "]";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  return (*h0_)(xi);
}

double GluingAtlas::h0_prime(double xi) const {
  const auto& r = roots();
  if (!(xi > r.xi01 && xi < r.xi02)) {
    std::ostringstream os;
    os << "xi=" << xi << " outside (" << r.xi01 << ", " << r.xi02 << ")";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  return h0_->derivative(xi);
}

double GluingAtlas::grid_point(int k) const {
  if (k == 0) {
    throw Error(ErrorCode::InvalidArgument, "the grid has no index 0");
  }
  const double h1 = h_upper(), hm1 = h_lower();
  if (k >= 1) return k * h1 - (k - 1) * hm1;
  return -k * hm1 + (k + 1) * h1;
}

int GluingAtlas::strip_of(double h) const {
  const double m = std::floor((h - h_upper()) / half_period());
  int k = static_cast<int>(m) + 1;
  if (h < strip_lo(k)) --k;
  if (h >= strip_hi(k)) ++k;
  return k;
}

double GluingAtlas::strip_lo(int k) const {
  return h_upper() + (k - 1) * half_period();
}

double GluingAtlas::strip_hi(int k) const {
  return h_upper() + k * half_period();
}

double GluingAtlas::phase_closed_raw(int k) const {
  if (branch_ == PhaseBranch::Rejected) return params_.c0;
  const double z1 = zeta_upper(), zm1 = zeta_lower();
  if (is_even(k)) return k * (z1 - zm1) + params_.c0;
  return (k - 1) * zm1 - (k + 1) * z1 - params_.c0;
}

double GluingAtlas::phase(int k) const {
  return reduce_angle(phase_closed_raw(k));
}

double F_on_strip(const GluingAtlas& a, int k, double h) {
  return locate_on_strip(a, k, h).x;
}

double F_profile(const GluingAtlas& a, double h) {
  return F_on_strip(a, a.strip_of(h), h);
}

double F_prime(const GluingAtlas& a, double h) {
  return strip_point(a, a.strip_of(h), h).dxi;
}

Eigen::Vector2d planar_on_strip(const GluingAtlas& a, int k, double h) {
  const Located loc = locate_on_strip(a, k, h);
  const double xi = loc.x;
  const double C = a.params().C;
  const double R = std::sqrt(1.0 - 1.0 / (C * xi * xi));
  const double z = a.family().zeta_primitive().at(loc) + a.phase(k);
  return {R * std::cos(z), parity_sign(k) * R * std::sin(z)};
}

GridReport grid_report(const GluingAtlas& a) {
  GridReport rep{0.0, 0.0, 0.0};
  const double P = a.half_period();
  for (const auto& [k, h] : a.grid()) {
    const double alt = k >= 1 ? a.strip_lo(k) : a.strip_lo(k + 1);
    rep.max_grid_defect = std::max(rep.max_grid_defect, std::abs(h - alt));
    if (k >= 1 && a.grid().count(k + 1)) {
      rep.max_spacing_defect = std::max(
          rep.max_spacing_defect, std::abs(a.grid().at(k + 1) - h - P));
    }
  }
  for (const auto& [k, c] : a.phases()) {
    rep.max_phase_defect =
        std::max(rep.max_phase_defect,
                 std::abs(angle_distance(c, a.phases_recursive().at(k))));
  }
  return rep;
}

double ComponentSmoothness::worst(int from_order) const {
  double w = 0.0;
  for (const auto& m : orders) {
    if (m.order >= from_order) w = std::max(w, m.mismatch);
  }
  return w;
}

int strip_above_grid(int k) {
  if (k == 0) {
    throw Error(ErrorCode::InvalidArgument, "the grid has no index 0");
  }
  return k >= 1 ? k : k + 1;
}

double junction_length(const GluingAtlas& a, int k) {
  const auto& r = a.roots();
  const double C = a.params().C;
  const int up = strip_above_grid(k);
  const double xi = F_on_strip(a, up, a.strip_lo(up));
  const double dT = -8.0 / 3.0 * std::pow(xi, 5.0 / 3.0) + 6.0 * C * xi;
  const double curvature = xi * xi * std::abs(dT) / 6.0;
  return std::min(a.half_period(),
                  std::sqrt(2.0 * (r.xi02 - r.xi01) / curvature));
}

JunctionReport junction_smoothness(const GluingAtlas& a, int k, int max_order,
                                   double rel_step) {
  if (k == 0 || std::abs(k) > a.k_max()) {
    throw Error(ErrorCode::InvalidArgument,
                "junction index must satisfy 0 < |k| <= k_max");
  }
  if (max_order < 0 || max_order > 3) {
    throw Error(ErrorCode::InvalidArgument, "max_order must be 0..3");
  }
  const int up = strip_above_grid(k), down = up - 1;
  const double h = a.strip_lo(up);
  const double P = junction_length(a, k);
  const double step = rel_step * P;
  const auto& r = a.roots();

  JunctionReport rep{k, h, step, {}, {}, {}};
  rep.F = compare_sides([&](double x) { return F_on_strip(a, down, x); },
                        [&](double x) { return F_on_strip(a, up, x); }, h,
                        max_order, step, r.xi02 - r.xi01, P);
  rep.phi1 =
      compare_sides([&](double x) { return planar_on_strip(a, down, x)[0]; },
                    [&](double x) { return planar_on_strip(a, up, x)[0]; }, h,
                    max_order, step, 1.0, P);
  rep.phi2 =
      compare_sides([&](double x) { return planar_on_strip(a, down, x)[1]; },
                    [&](double x) { return planar_on_strip(a, up, x)[1]; }, h,
                    max_order, step, 1.0, P);
  return rep;
}

Eigen::Vector3d immersion_Psi(const GluingAtlas& a, double h, double theta) {
  const double cs = a.params().Cstar;
  const double rad = cs / F_profile(a, h);
  return {rad * std::cos(theta / cs), rad * std::sin(theta / cs), h};
}

diffgeo::Tangents partials_Psi(const GluingAtlas& a, double h, double theta) {
  const double cs = a.params().Cstar;
  const StripPoint p = strip_point(a, a.strip_of(h), h);
  const double rad = cs / p.xi;
  const double drad = -cs * p.dxi / (p.xi * p.xi);
  const double c = std::cos(theta / cs), s = std::sin(theta / cs);
  diffgeo::Tangents t;
  t.xu = Vec4(drad * c, drad * s, 1.0, 0.0);
  t.xv = Vec4(-rad * s / cs, rad * c / cs, 0.0, 0.0);
  return t;
}

diffgeo::ImmersionPatch patch_Psi(const GluingAtlas& a,
                                  const diffgeo::Rect& domain) {
  auto self = std::make_shared<const GluingAtlas>(a);
  diffgeo::ImmersionPatch p;
  p.domain = domain;
  p.ambient = diffgeo::Ambient::Euclidean3;
  p.scale = a.half_period();
  p.position = [self](double h, double th) -> Vec4 {
    const Eigen::Vector3d x = immersion_Psi(*self, h, th);
    return {x[0], x[1], x[2], 0.0};
  };
  p.first_partials = [self](double h, double th) {
    return partials_Psi(*self, h, th);
  };
  return p;
}

double mean_curvature_Psi(const GluingAtlas& a, double xi) {
  const auto& r = a.roots();
  if (!(xi >= r.xi01 && xi <= r.xi02)) {
    std::ostringstream os;
    os << "xi=" << xi << " outside [" << r.xi01 << ", " << r.xi02 << "]";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  const double C = a.params().C, cs = a.params().Cstar;
  const double x2 = xi * xi, x83 = std::pow(xi, 8.0 / 3.0);
  const double num = 9.0 * x2 - cs * cs * (-2.0 * x83 + 9.0 * C * x2 - 18.0);
  return num / (6.0 * cs * std::sqrt(3.0 * radicand(a, xi)));
}

s3::MetricCoeffs metric_complete(const GluingAtlas& a, double h) {
  const double xi = F_profile(a, h);
  const double x2 = xi * xi;
  return {3.0 * x2 / radicand(a, xi), 1.0 / x2};
}

Vec4 immersion_Phi_complete(const GluingAtlas& a, double h, double theta) {
  return immersion_on_strip(a, a.strip_of(h), h, theta);
}

diffgeo::Tangents partials_Phi_complete(const GluingAtlas& a, double h,
                                        double theta) {
  const int k = a.strip_of(h);
  const StripPoint p = strip_point(a, k, h);
  const double C = a.params().C, sc = std::sqrt(C);
  const double xi = p.xi;
  const double R = std::sqrt(1.0 - 1.0 / (C * xi * xi));
  const double dR = p.dxi / (C * xi * xi * xi * R);
  const double z =
      a.family().zeta_primitive().at(locate_on_strip(a, k, h)) + a.phase(k);
  const double cz = std::cos(z), sz = std::sin(z), s = parity_sign(k);
  const double ct = std::cos(sc * theta), st = std::sin(sc * theta);
  const double dr = -p.dxi / (sc * xi * xi);
  diffgeo::Tangents t;
  t.xu = Vec4(dR * cz - R * sz * p.dzeta, s * (dR * sz + R * cz * p.dzeta),
              dr * ct, dr * st);
  t.xv = Vec4(0.0, 0.0, -st / xi, ct / xi);
  return t;
}

diffgeo::ImmersionPatch patch_Phi_complete(const GluingAtlas& a,
                                           const diffgeo::Rect& domain) {
  auto self = std::make_shared<const GluingAtlas>(a);
  diffgeo::ImmersionPatch p;
  p.domain = domain;
  p.ambient = diffgeo::Ambient::Sphere3;
  p.scale = a.half_period();
  p.position = [self](double h, double th) {
    return immersion_Phi_complete(*self, h, th);
  };
  p.first_partials = [self](double h, double th) {
    return partials_Phi_complete(*self, h, th);
  };
  return p;
}

PeriodicityReport periodicity_probe(const GluingAtlas& a, double tol,
                                    int samples, int max_multiple) {
  PeriodicityReport rep{};
  rep.period = 2.0 * a.half_period();
  const double lo = a.strip_lo(-1), span = 3.0 * a.half_period();
  const double sc = std::sqrt(a.params().C);
  for (int i = 0; i < samples; ++i) {
    const double h = lo + span * (i + 0.5) / samples;
    const double th = (2.0 * kPi / sc) * (i + 0.25) / samples;
    const double hp = h + rep.period;
    rep.F_defect = std::max(rep.F_defect,
                            std::abs(F_profile(a, hp) - F_profile(a, h)));
    const Vec4 d = immersion_Phi_complete(a, hp, th) -
                   immersion_Phi_complete(a, h, th);
    rep.phi12_defect = std::max(rep.phi12_defect, d.head<2>().norm());
    rep.phi34_defect = std::max(rep.phi34_defect, d.tail<2>().norm());
  }
  const double dz = a.zeta_upper() - a.zeta_lower();
  rep.phase_defect = angle_distance(2.0 * dz, 0.0);
  rep.periodic = rep.phi12_defect <= tol;
  rep.best_multiple = 1;
  rep.best_multiple_defect = std::abs(rep.phase_defect);
  for (int q = 2; q <= max_multiple; ++q) {
    const double d = std::abs(angle_distance(2.0 * q * dz, 0.0));
    if (d < rep.best_multiple_defect) {
      rep.best_multiple_defect = d;
      rep.best_multiple = q;
    }
  }
  return rep;
}

double tangent_plane_defect(const GluingAtlas& a, int k, double theta,
                            double rel_step) {
  const int up = strip_above_grid(k), down = up - 1;
  const double h = a.strip_lo(up);
  const double step = rel_step * junction_length(a, k);
  const Vec4 x = immersion_on_strip(a, up, h, theta);
  const double sc = std::sqrt(a.params().C);
  const double xi = F_on_strip(a, up, h);
  const Vec4 xt(0.0, 0.0, -std::sin(sc * theta) / xi,
                std::cos(sc * theta) / xi);
  auto dh = [&](int strip, numerics::Stencil side) {
    Vec4 d;
    for (int i = 0; i < 4; ++i) {
      d[i] = one_sided(
          [&](double s) { return immersion_on_strip(a, strip, s, theta)[i]; },
          h, 1, step, side);
    }
    return d;
  };
  const Vec4 nl = cross4(x, dh(down, numerics::Stencil::Backward), xt);
  const Vec4 nr = cross4(x, dh(up, numerics::Stencil::Forward), xt);
  return 1.0 - std::abs(nl.dot(nr));
}

}  // namespace bicons::gluing
