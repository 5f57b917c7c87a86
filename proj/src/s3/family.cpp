#include "bicons/s3/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/finite_difference.hpp"
#include "bicons/numerics/ode.hpp"
#include "bicons/numerics/quadrature.hpp"
#include "bicons/numerics/roots.hpp"

namespace bicons::s3 {

using diffgeo::Jet4;
using diffgeo::Vec4;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt_domain(double xi, const DomainRoots& r) {
  std::ostringstream os;
  os << "xi=" << xi << " outside the domain (" << r.xi01 << ", " << r.xi02
     << ")";
  return os.str();
}

}  // namespace

double c_threshold() { return 4.0 / std::pow(3.0, 1.5); }

FamilyParamsS3 FamilyParamsS3::make(double C, double sign, double c_base) {
  if (!(C > c_threshold()) || !std::isfinite(C)) {
    std::ostringstream os;
    os << "C must exceed 4/3^(3/2) = " << c_threshold() << ", got " << C;
    throw Error(ErrorCode::InvalidC, os.str());
  }
  if (sign != 1.0 && sign != -1.0) {
    throw Error(ErrorCode::InvalidArgument, "zeta branch sign must be +1 or -1");
  }
  if (!std::isfinite(c_base)) {
    throw Error(ErrorCode::InvalidArgument, "c_base must be finite");
  }
  return {C, 16.0 * std::pow(3.0, 0.25) * C, sign, c_base};
}

double gap(double C, double xi) {
  return -std::pow(xi, 8.0 / 3.0) + 3.0 * C * xi * xi - 3.0;
}

double gap_near(double C, double root, double d) {
  const double lead =
      -std::pow(root, 8.0 / 3.0) * std::expm1(8.0 / 3.0 * std::log1p(d / root));
  return lead + 3.0 * C * d * (2.0 * root + d);
}

double gap_inside(double C, double xi01, double xi02, double x, double from01,
                  double from02) {
  (void)x;
  return from01 <= from02 ? gap_near(C, xi01, from01)
                          : gap_near(C, xi02, -from02);
}

double L_of_k(double C1, double k) {
  return -16.0 / 9.0 - 16.0 * k * k + C1 * std::pow(k, 1.5);
}

double k_of_xi(double xi) {
  return std::pow(3.0, -1.5) * std::pow(xi, 4.0 / 3.0);
}

DomainRoots domain_roots(double C, double tol) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw Error(ErrorCode::InvalidC, "domain_roots needs a positive C");
  }
  DomainRoots r{};
  r.xi00 = std::pow(9.0 * C / 4.0, 1.5);
  r.T00 = gap(C, r.xi00);
  const double scale = 3.0 * C * r.xi00 * r.xi00;
  if (!(r.T00 > 10.0 * kEps * scale)) {
    std::ostringstream os;
    os << "T(xi00)=" << r.T00 << " is not positive: C=" << C
       << " does not exceed 4/3^(3/2)";
    throw Error(ErrorCode::DegenerateDomain, os.str());
  }
  auto T = [C](double x) { return gap(C, x); };
  r.xi01 = numerics::find_root(T, numerics::Bracket(0.0, r.xi00, -3.0, r.T00),
                               tol);
  const auto up = numerics::expand_upward(T, r.xi00, 2.0 * r.xi00);
  r.xi02 = numerics::find_root(T, up, tol);
  r.k01 = k_of_xi(r.xi01);
  r.k02 = k_of_xi(r.xi02);
  return r;
}

MetricCoeffs metric_gC(double C, const DomainRoots& roots, double xi) {
  if (!(xi > roots.xi01 && xi < roots.xi02)) {
    throw Error(ErrorCode::OutOfDomain, fmt_domain(xi, roots));
  }
  const double T = gap_inside(C, roots.xi01, roots.xi02, xi, xi - roots.xi01,
                              roots.xi02 - xi);
  return {3.0 / (xi * xi * T), 1.0 / (xi * xi)};
}

MetricCoeffs metric_gC(double C, double xi) {
  return metric_gC(C, domain_roots(C), xi);
}

diffgeo::JetProfile metric_E_jet(double C) {
  return [C](const Jet4& x) {
    const Jet4 T = -pow(x, 8.0 / 3.0) + 3.0 * C * x * x - 3.0;
    return 3.0 / (x * x * T);
  };
}

diffgeo::JetProfile metric_G_jet() {
  return [](const Jet4& x) { return 1.0 / (x * x); };
}

double gauss_curvature_DC(double xi) {
  return 1.0 - std::pow(xi, 8.0 / 3.0) / 9.0;
}

double gauss_curvature_DC_prime(double xi) {
  return -8.0 / 27.0 * std::pow(xi, 5.0 / 3.0);
}

double grad_K_component(double C, double xi) {
  return -8.0 / 81.0 * std::pow(xi, 11.0 / 3.0) * gap(C, xi);
}

LocalFamily::LocalFamily(const FamilyParamsS3& params, double rel_tol)
    : params_(params), roots_(domain_roots(params.C)) {
  const double C = params_.C;
  const double sc = std::sqrt(C);
  const double a = roots_.xi01, b = roots_.xi02;
  auto g = [C, sc, a, b](double x, double da, double db) {
    const double T = gap_inside(C, a, b, x, da, db);
    return sc * std::pow(x, 4.0 / 3.0) / ((C * x * x - 1.0) * std::sqrt(T));
  };
  zeta_ = std::make_shared<const numerics::SingularPrimitive>(
      g, a, b, roots_.xi00, 48, rel_tol);
}

void LocalFamily::require_domain(double xi) const {
  if (!(xi > roots_.xi01 && xi < roots_.xi02)) {
    throw Error(ErrorCode::OutOfDomain, fmt_domain(xi, roots_));
  }
}

double LocalFamily::zeta0(double xi) const {
  if (!(xi >= roots_.xi01 && xi <= roots_.xi02)) {
    throw Error(ErrorCode::OutOfDomain, fmt_domain(xi, roots_));
  }
  return (*zeta_)(xi);
}

double LocalFamily::zeta0_prime(double xi) const {
  require_domain(xi);
  return zeta_->derivative(xi);
}

Vec4 LocalFamily::immersion(double xi, double theta) const {
  require_domain(xi);
  const double C = params_.C, sc = std::sqrt(C);
  const double R = std::sqrt(1.0 - 1.0 / (C * xi * xi));
  const double z = params_.sign * (zeta0(xi) + params_.c_base);
  const double r = 1.0 / (sc * xi);
  return {R * std::cos(z), R * std::sin(z), r * std::cos(sc * theta),
          r * std::sin(sc * theta)};
}

diffgeo::Tangents LocalFamily::partials(double xi, double theta) const {
  require_domain(xi);
  const double C = params_.C, sc = std::sqrt(C);
  const double R = std::sqrt(1.0 - 1.0 / (C * xi * xi));
  const double dR = 1.0 / (C * xi * xi * xi * R);
  const double z = params_.sign * (zeta0(xi) + params_.c_base);
  const double dz = params_.sign * zeta0_prime(xi);
  const double cz = std::cos(z), sz = std::sin(z);
  const double ct = std::cos(sc * theta), st = std::sin(sc * theta);
  diffgeo::Tangents t;
  t.xu = Vec4(dR * cz - R * sz * dz, dR * sz + R * cz * dz,
              -ct / (sc * xi * xi), -st / (sc * xi * xi));
  t.xv = Vec4(0.0, 0.0, -st / xi, ct / xi);
  return t;
}

diffgeo::ImmersionPatch LocalFamily::patch(const diffgeo::Rect& domain) const {
  diffgeo::ImmersionPatch p;
  p.domain = domain;
  p.ambient = diffgeo::Ambient::Sphere3;
  p.scale = 0.1 * (roots_.xi02 - roots_.xi01);
  auto self = std::make_shared<const LocalFamily>(*this);
  p.position = [self](double xi, double th) { return self->immersion(xi, th); };
  p.first_partials = [self](double xi, double th) {
    return self->partials(xi, th);
  };
  return p;
}

double zeta0(double C, double xi) {
  return LocalFamily(FamilyParamsS3::make(C)).zeta0(xi);
}

Vec4 immersion_PhiC(const FamilyParamsS3& params, double xi, double theta) {
  return LocalFamily(params).immersion(xi, theta);
}

KOdeReport curvature_ode_k(const FamilyParamsS3& params, double k_start,
                           int direction, double t_end, double tol,
                           std::size_t turning_points) {
  const DomainRoots roots = domain_roots(params.C);
  if (!(k_start > roots.k01 && k_start < roots.k02)) {
    std::ostringstream os;
    os << "k_start=" << k_start << " outside (" << roots.k01 << ", "
       << roots.k02 << ")";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  if (direction != 1 && direction != -1) {
    throw Error(ErrorCode::InvalidArgument, "direction must be +1 or -1");
  }
  const double C1 = params.C1;
  auto rhs = [C1](double, const std::vector<double>& y,
                  std::vector<double>& d) {
    const double k = y[0];
    d[0] = y[1];
    d[1] = -16.0 / 9.0 * k - 32.0 * k * k * k + 1.75 * C1 * std::pow(k, 2.5);
  };
  const double dk0 = direction * k_start * std::sqrt(L_of_k(C1, k_start));
  numerics::OdeState y0{0.0, {k_start, dk0}, 1e-3};
  const auto run = numerics::solve_ode_with_events(
      rhs, y0, t_end, tol,
      [](double, const std::vector<double>& y) { return y[1]; },
      turning_points);

  KOdeReport rep{};
  rep.k_min = std::numeric_limits<double>::infinity();
  rep.k_max = -rep.k_min;
  double scale = 0.0;
  for (const auto& s : run.trajectory) {
    const double k = s.y[0], dk = s.y[1];
    const double pos = 16.0 / 9.0 * k * k + 16.0 * std::pow(k, 4);
    const double drift = dk * dk + pos - C1 * std::pow(k, 3.5);
    rep.max_drift = std::max(rep.max_drift, std::abs(drift));
    scale = std::max(scale, pos);
    rep.k_min = std::min(rep.k_min, k);
    rep.k_max = std::max(rep.k_max, k);
    rep.t.push_back(s.t);
    rep.k.push_back(k);
  }
  for (const auto& e : run.events) rep.turning_times.push_back(e.t);
  rep.relative_drift = rep.max_drift / scale;
  return rep;
}

namespace {

double radicand(double a, double b, double phi) {
  return b / 3.0 * std::exp(-2.0 * phi / 3.0) - std::exp(2.0 * phi) + a;
}

void check_ab(double a, double b) {
  if (!(a > 0.0) || !(b < 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "bridge needs a > 0 and b < 0, got a=" << a << " b=" << b;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

}  // namespace

BridgeResult phi_coordinate_bridge(double a, double b, double phi) {
  check_ab(a, b);
  const double C = a * std::pow(-b, -0.75);
  if (!(radicand(a, b, phi) > 0.0)) {
    std::ostringstream os;
    os << "radicand (b/3)e^(-2phi/3) - e^(2phi) + a is not positive at phi="
       << phi;
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  if (!(C > c_threshold())) {
    throw Error(ErrorCode::InvalidC, "a (-b)^(-3/4) must exceed 4/3^(3/2)");
  }
  const double xi00 = std::pow(9.0 * C / 4.0, 1.5);
  const double phi0 = std::log(std::pow(-b, 0.375) / xi00);
  if (phi == phi0) return {0.0, C};
  numerics::QuadratureSpec s;
  s.lower = std::min(phi, phi0);
  s.upper = std::max(phi, phi0);
  s.rel_tol = 1e-13;
  const double I = numerics::integrate(
      [a, b](double t) { return 1.0 / std::sqrt(radicand(a, b, t)); }, s).value;
  return {phi > phi0 ? I : -I, C};
}

double bridge_metric_check(double a, double b, const std::vector<double>& phis) {
  check_ab(a, b);
  const double C = a * std::pow(-b, -0.75);
  const DomainRoots roots = domain_roots(C);
  const double m = std::pow(-b, 0.375);
  auto u_of_xi = [&](double xi) {
    return phi_coordinate_bridge(a, b, std::log(m / xi)).u;
  };
  double worst = 0.0;
  for (double phi : phis) {
    const double xi = m * std::exp(-phi);
    const double room = std::min(xi - roots.xi01, roots.xi02 - xi);
    const double du = numerics::fd_derivative(u_of_xi, xi, 1, 0.25 * room);
    const double e2 = std::exp(2.0 * phi);
    const MetricCoeffs g = metric_gC(C, roots, xi);
    const double E = e2 * du * du;
    const double G = e2 / (m * m);
    worst = std::max({worst, std::abs(E - g.E) / g.E, std::abs(G - g.G) / g.G});
  }
  return worst;
}

double master_ode_residual(const diffgeo::JetProfile& phi, double c, double u) {
  const Jet4 p = phi(Jet4::variable(u));
  const double d1 = p.derivative(1), d2 = p.derivative(2), d3 = p.derivative(3);
  return 8.0 * c * std::exp(2.0 * p.value()) * d1 + 2.0 * d1 * d2 + 3.0 * d3;
}

double c0_ode_residual(double u) {
  return master_ode_residual(
      [](const Jet4& x) { return 3.0 * log(cosh(x / 3.0)); }, 0.0, u);
}

K01Bound k01_bound_report(double C) {
  const auto p = FamilyParamsS3::make(C);
  const DomainRoots r = domain_roots(C);
  K01Bound b;
  b.k01 = r.k01;
  b.bound = std::pow(16.0 / (9.0 * p.C1), 2.0 / 3.0);
  b.xi01 = r.xi01;
  b.xi_bound = 1.0 / std::sqrt(C);
  b.holds = b.k01 > b.bound && b.xi01 > b.xi_bound;
  return b;
}

}  // namespace bicons::s3
