#include "bicons/io/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bicons/diffgeo/intrinsic.hpp"
#include "bicons/diffgeo/surface.hpp"
#include "bicons/gluing/atlas.hpp"
#include "bicons/numerics/error.hpp"
#include "bicons/r3/family.hpp"
#include "bicons/s3/family.hpp"

namespace bicons::io {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240917;

std::vector<double> centers(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (i + 0.5) / n;
  return out;
}

double rel(double value, double ref) {
  return std::abs(value - ref) / std::max(1.0, std::abs(ref));
}

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : g_(seed) {}
  double operator()(double lo, double hi) {
    const double t = static_cast<double>(g_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * t;
  }

 private:
  std::mt19937_64 g_;
};

diffgeo::Rect domain_of(const RunConfig& cfg, diffgeo::Rect fallback) {
  if (cfg.u_range) {
    fallback.u_lo = cfg.u_range->first;
    fallback.u_hi = cfg.u_range->second;
  }
  if (cfg.v_range) {
    fallback.v_lo = cfg.v_range->first;
    fallback.v_hi = cfg.v_range->second;
  }
  return fallback;
}

struct MetricRef {
  double E, F, G;
};

double metric_defect(const diffgeo::SurfaceData& s, const MetricRef& r) {
  return std::max({std::abs(s.E - r.E) / std::abs(r.E),
                   std::abs(s.G - r.G) / std::abs(r.G),
                   std::abs(s.F - r.F) / std::sqrt(std::abs(r.E * r.G))});
}

// phi with e^(2 phi) = C cosh^6 u.
diffgeo::JetProfile conformal_exponent(double C) {
  return [C](const diffgeo::Jet4& u) {
    return 0.5 * std::log(C) + 3.0 * log(cosh(u));
  };
}

s3::DomainRoots checked_roots(VerificationReport& rep, double C,
                              const numerics::Tolerances& tol) {
  const auto r = s3::domain_roots(C, tol.root);
  rep.expect_below("roots.T_at_xi01", std::abs(s3::gap(C, r.xi01)), 1e-10);
  rep.expect_below("roots.T_at_xi02", std::abs(s3::gap(C, r.xi02)), 1e-10);
  rep.expect_true("roots.ordered", r.xi01 < r.xi00 && r.xi00 < r.xi02);
  rep.expect_below("roots.xi00_closed_form",
                   rel(r.xi00, std::pow(9.0 * C / 4.0, 1.5)), 1e-15);
  rep.expect_above("roots.xi01_minus_inverse_sqrtC",
                   r.xi01 - 1.0 / std::sqrt(C), 0.0);
  rep.note("roots.xi01", r.xi01);
  rep.note("roots.xi00", r.xi00);
  rep.note("roots.xi02", r.xi02);
  return r;
}

}  // namespace

void VerificationReport::expect_below(const std::string& name, double value,
                                      double bound) {
  checks_.push_back({name, value, bound, true, value <= bound});
}

void VerificationReport::expect_above(const std::string& name, double value,
                                      double bound) {
  checks_.push_back({name, value, bound, false, value >= bound && value > -HUGE_VAL});
}

void VerificationReport::expect_true(const std::string& name, bool ok) {
  checks_.push_back({name, ok ? 1.0 : 0.0, 1.0, false, ok});
}

void VerificationReport::note(const std::string& name, double value) {
  notes_.emplace_back(name, value);
}

void VerificationReport::merge(const std::string& prefix,
                               const VerificationReport& other) {
  for (auto c : other.checks_) {
    c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& [n, v] : other.notes_) notes_.emplace_back(prefix + "." + n, v);
}

bool VerificationReport::pass() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.pass; });
}

const Check& VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "no check named '" + name + "'");
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass();
  std::size_t failed = 0;
  for (const auto& c : checks_) failed += c.pass ? 0 : 1;
  j["checks_total"] = checks_.size();
  j["checks_failed"] = failed;
  auto& checks = j["checks"] = nlohmann::ordered_json::object();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["value"] = c.value;
    e["tolerance"] = c.bound;
    e["kind"] = c.upper ? "max" : "min";
    e["pass"] = c.pass;
    checks[c.name] = std::move(e);
  }
  auto& notes = j["evidence"] = nlohmann::ordered_json::object();
  for (const auto& [n, v] : notes_) notes[n] = v;
  j["environment"] = environment;
  return j;
}

VerificationReport verify_r3(const RunConfig& cfg) {
  VerificationReport rep;
  const auto p = r3::FamilyParamsR3::from_C(cfg.C);
  const double v_period = 2.0 * kPi / 3.0;
  const auto dom = domain_of(cfg, {-1.5, 1.5, 0.0, v_period});
  const auto patch = r3::patch_XC(p, dom);
  const double width = dom.u_hi - dom.u_lo;

  double metric = 0.0, K = 0.0, f = 0.0, bicons = 0.0, period = 0.0;
  for (double u : centers(dom.u_lo, dom.u_hi, cfg.n_u)) {
    for (double v : centers(dom.v_lo, dom.v_hi, cfg.n_v)) {
      const double lam = r3::conformal_factor(p, u);
      metric = std::max(metric,
                        metric_defect(diffgeo::fundamental_forms(patch, u, v),
                                      {lam, 0.0, lam}));
      const Eigen::Vector3d x = r3::immersion_XC(p, u, v);
      period = std::max(period, (r3::immersion_XC(p, u, v + v_period) - x).norm() /
                                    (1.0 + x.norm()));
      if (std::abs(u) < 1e-3 * width) continue;
      const auto s = diffgeo::curvatures(patch, u, v);
      K = std::max(K, rel(s.K, -3.0 / (cfg.C * std::pow(std::cosh(u), 8))));
      f = std::max(f, rel(s.f, r3::mean_curvature_XC(p, u)));
      bicons = std::max(bicons, diffgeo::biconservativity_residual(s));
    }
  }
  rep.expect_below("metric.conformal", metric, 1e-8);
  rep.expect_below("partials", diffgeo::validate_patch(patch, 8).max_partial_mismatch,
                   1e-6);
  rep.expect_below("curvature.K", K, 1e-6);
  rep.expect_below("curvature.f", f, 1e-6);
  rep.expect_below("biconservative.residual", bicons, 1e-4);
  rep.expect_below("v_period", period, 1e-13);

  std::vector<double> us, vs;
  for (int i = 0; i < cfg.n_u; ++i) us.push_back(dom.u_lo + width * i / (cfg.n_u - 1));
  us.push_back(0.0);
  for (int j = 0; j < cfg.n_v; ++j) vs.push_back(2.0 * kPi * j / cfg.n_v);
  const auto comp = r3::completeness_bound_check(p, us, vs);
  rep.expect_true("complete.bounded_below", comp.bounded_below);
  rep.expect_true("complete.minimum_on_axis", comp.minimum_only_on_axis);
  rep.note("complete.min_ratio", comp.min_ratio);

  double level = 0.0;
  const auto phi = conformal_exponent(cfg.C);
  for (int i = 0; i < 64; ++i) {
    const double u = (i % 2 ? -1.0 : 1.0) * (0.05 + 1.45 * i / 63.0);
    const auto lc = diffgeo::level_curve_circle_check(phi, 0.0, u);
    level = std::max(level, rel(lc.kappa_geodesic, lc.kappa_formula));
  }
  rep.expect_below("level_curves.circle", level, 1e-8);

  std::vector<Eigen::Vector2d> pts;
  for (int i = 0; i < 64; ++i) pts.emplace_back(0.05 + 0.1 * i, 0.37 * i);
  rep.expect_below("homothety", r3::homothety_check(p.C1, pts), 1e-12);

  const auto m = r3::gluing_conditions_check(p.C1, p.C1,
                                             r3::Pose::mirror_boundary_plane(), 64);
  rep.expect_below("gluing.position", m.position, 1e-10);
  rep.expect_below("gluing.normal", m.normal, 1e-10);
  rep.expect_below("gluing.f", m.mean_curvature, 1e-10);
  rep.expect_below("gluing.grad_f", m.grad_f, 1e-10);
  const double C1p = 2.0 * p.C1;
  const auto d = r3::gluing_conditions_check(p.C1, C1p, r3::Pose::identity(), 16);
  const double jump = 2.0 / 3.0 * std::abs(std::pow(p.C1, 1.5) - std::pow(C1p, 1.5));
  rep.expect_below("gluing.negative_control.f_jump_formula",
                   std::abs(d.mean_curvature - jump), 1e-12);
  rep.expect_above("gluing.negative_control.f_jump", d.mean_curvature, 1e-6);

  for (const auto& s : r3::completion_smoothness(p.C1, 0.02 * r3::boundary_radius(p.C1))) {
    rep.expect_below("completion.order" + std::to_string(s.order), s.mismatch, 1e-4);
  }
  return rep;
}

VerificationReport verify_s3_local(const RunConfig& cfg) {
  VerificationReport rep;
  const double C = cfg.C;
  const auto roots = checked_roots(rep, C, cfg.tol);
  const auto k01 = s3::k01_bound_report(C);
  rep.expect_true("roots.k01_bound", k01.holds);

  const s3::LocalFamily fam(s3::FamilyParamsS3::make(C), cfg.tol.quad_rel);
  rep.expect_true("zeta.finite_limits",
                  std::isfinite(fam.zeta_lower()) && std::isfinite(fam.zeta_upper()));
  rep.note("zeta.lower", fam.zeta_lower());
  rep.note("zeta.upper", fam.zeta_upper());

  const double margin = 1e-3 * (roots.xi02 - roots.xi01);
  const auto dom = domain_of(cfg, {roots.xi01 + margin, roots.xi02 - margin, 0.0,
                                   2.0 * kPi / std::sqrt(C)});
  const auto patch = fam.patch(dom);
  double metric = 0.0, K = 0.0, bicons = 0.0;
  for (double xi : centers(dom.u_lo, dom.u_hi, cfg.n_u)) {
    const auto g = s3::metric_gC(C, roots, xi);
    for (double th : centers(dom.v_lo, dom.v_hi, cfg.n_v)) {
      metric = std::max(metric, metric_defect(diffgeo::fundamental_forms(patch, xi, th),
                                              {g.E, 0.0, g.G}));
      const auto s = diffgeo::curvatures(patch, xi, th);
      K = std::max(K, rel(s.K, s3::gauss_curvature_DC(xi)));
      bicons = std::max(bicons, diffgeo::biconservativity_residual(s));
    }
  }
  const auto pc = diffgeo::validate_patch(patch, 8);
  rep.expect_below("metric.gC", metric, 1e-8);
  rep.expect_below("partials", pc.max_partial_mismatch, 1e-6);
  rep.expect_below("curvature.K_gauss_equation", K, 1e-6);
  rep.expect_below("biconservative.residual", bicons, 1e-4);

  // Intrinsic curvature, and independence of C through a second domain.
  const double C2 = 2.0 * C;
  const auto roots2 = s3::domain_roots(C2, cfg.tol.root);
  const double lo = std::max(roots.xi01, roots2.xi01);
  const double hi = std::min(roots.xi02, roots2.xi02);
  double Kin = 0.0, Kind = 0.0, level = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double xi = roots.xi01 + (roots.xi02 - roots.xi01) * (i + 0.5) / 64.0;
    const auto kc = diffgeo::orthogonal_curvature(s3::metric_E_jet(C), s3::metric_G_jet(), xi);
    Kin = std::max(Kin, rel(kc.K, s3::gauss_curvature_DC(xi)));
    const auto lc = diffgeo::level_curve_circle_check_orthogonal(
        s3::metric_E_jet(C), s3::metric_G_jet(), 1.0, xi);
    level = std::max(level, rel(lc.kappa_geodesic, lc.kappa_formula));
    if (lo < hi) {
      const double x = lo + (hi - lo) * (i + 0.5) / 64.0;
      const auto a = diffgeo::orthogonal_curvature(s3::metric_E_jet(C), s3::metric_G_jet(), x);
      const auto b = diffgeo::orthogonal_curvature(s3::metric_E_jet(C2), s3::metric_G_jet(), x);
      Kind = std::max(Kind, rel(a.K, b.K));
    }
  }
  rep.expect_below("curvature.K_intrinsic", Kin, 1e-6);
  rep.expect_below("curvature.C_independence", Kind, 1e-6);
  rep.expect_below("level_curves.circle", level, 1e-8);

  Uniform rnd(kSeed);
  double sphere = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double xi = rnd(roots.xi01, roots.xi02);
    const double th = rnd(0.0, 2.0 * kPi / std::sqrt(C));
    if (!(xi > roots.xi01 && xi < roots.xi02)) continue;
    sphere = std::max(sphere, std::abs(fam.immersion(xi, th).norm() - 1.0));
  }
  rep.expect_below("sphere.norm", sphere, 1e-10);

  const auto& prm = fam.params();
  const double k_start = 0.5 * (roots.k01 + roots.k02);
  const auto ode = s3::curvature_ode_k(prm, k_start, 1, 1e3, std::min(cfg.tol.ode, 1e-12));
  rep.expect_below("prime_integral.relative_drift", ode.relative_drift, 1e-8);
  rep.expect_above("prime_integral.k_min_margin", ode.k_min - (roots.k01 - 1e-6), 0.0);
  rep.expect_above("prime_integral.k_max_margin", (roots.k02 + 1e-6) - ode.k_max, 0.0);
  rep.expect_above("prime_integral.turning_points",
                   static_cast<double>(ode.turning_times.size()), 6.0);

  std::vector<double> phis;
  for (int i = 1; i < 12; ++i) {
    phis.push_back(-std::log(roots.xi01 + (roots.xi02 - roots.xi01) * i / 12.0));
  }
  // a = C, b = -1 keeps xi = e^(-phi).
  rep.expect_below("bridge.metric", s3::bridge_metric_check(C, -1.0, phis), 1e-6);
  return rep;
}

VerificationReport verify_s3_complete(const RunConfig& cfg) {
  VerificationReport rep;
  const gluing::GluingParams gp{cfg.C, *cfg.Cstar, cfg.c0};
  const int k_max = std::max(25, cfg.k_max);
  const gluing::GluingAtlas atlas(gp, k_max, gluing::PhaseBranch::Smooth,
                                  cfg.tol.quad_rel);
  const double P = atlas.half_period();
  const auto& roots = atlas.roots();

  const auto gr = gluing::grid_report(atlas);
  rep.expect_below("grid.formula", gr.max_grid_defect, 1e-12 * std::max(1.0, k_max * P));
  rep.expect_below("grid.spacing", gr.max_spacing_defect, 1e-12 * std::max(1.0, k_max * P));
  rep.expect_below("phases.recursion_vs_closed", gr.max_phase_defect, 1e-12);
  rep.note("grid.h_lower", atlas.h_lower());
  rep.note("grid.h_upper", atlas.h_upper());

  Uniform rnd(kSeed);
  double fper = 0.0, sphere = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double h = rnd(-20.0 * P, 20.0 * P);
    const double th = rnd(0.0, 2.0 * kPi / std::sqrt(cfg.C));
    if (i < 200) {
      fper = std::max(fper, std::abs(gluing::F_profile(atlas, h + 2.0 * P) -
                                     gluing::F_profile(atlas, h)));
    }
    sphere = std::max(sphere,
                      std::abs(gluing::immersion_Phi_complete(atlas, h, th).norm() - 1.0));
  }
  rep.expect_below("F.periodicity", fper, 1e-12 * std::max(1.0, roots.xi02));
  rep.expect_below("sphere.norm", sphere, 1e-10);

  for (int k : {-3, -2, -1, 1, 2, 3}) {
    const auto j = gluing::junction_smoothness(atlas, k);
    const std::string tag = "junction.k" + std::to_string(k);
    rep.expect_below(tag + ".F", j.F.worst(1), 1e-3);
    rep.expect_below(tag + ".phi1", j.phi1.worst(0), 1e-3);
    rep.expect_below(tag + ".phi2", j.phi2.worst(0), 1e-3);
  }
  {
    // The rejected branch must show at one of the first two junctions.
    const gluing::GluingAtlas bad(gp, 3, gluing::PhaseBranch::Rejected, cfg.tol.quad_rel);
    double c1 = 0.0, c0_jump = 0.0, tp = 0.0;
    for (int k : {1, 2}) {
      const auto j = gluing::junction_smoothness(bad, k);
      c1 = std::max(c1, j.phi1.orders[1].mismatch);
      c0_jump = std::max(c0_jump, j.phi2.orders[0].mismatch);
      tp = std::max(tp, gluing::tangent_plane_defect(bad, k, 0.3));
      rep.note("negative_control.k" + std::to_string(k) + ".phi1_order0",
               j.phi1.orders[0].mismatch);
    }
    rep.expect_above("negative_control.phi1_order1", c1, 1e-2);
    rep.expect_above("negative_control.phi2_order0", c0_jump, 1e-2);
    rep.note("negative_control.tangent_plane", tp);
  }
  rep.expect_below("tangent_plane.k1", gluing::tangent_plane_defect(atlas, 1, 0.3), 1e-10);
  rep.expect_below("tangent_plane.k-1", gluing::tangent_plane_defect(atlas, -1, 0.3), 1e-10);

  // Strips 0 and 1, away from the junction bands where grad f vanishes.
  const auto dom = domain_of(cfg, {atlas.strip_lo(0), atlas.strip_hi(1), 0.0,
                                   2.0 * kPi / std::sqrt(cfg.C)});
  const auto patch = gluing::patch_Phi_complete(atlas, dom);
  double metric = 0.0, K = 0.0, bicons = 0.0;
  for (double h : centers(dom.u_lo, dom.u_hi, cfg.n_u)) {
    const auto g = gluing::metric_complete(atlas, h);
    const int k = atlas.strip_of(h);
    const bool band = std::min(h - atlas.strip_lo(k), atlas.strip_hi(k) - h) < 1e-3 * P;
    const double xi = gluing::F_profile(atlas, h);
    for (double th : centers(dom.v_lo, dom.v_hi, cfg.n_v)) {
      metric = std::max(metric, metric_defect(diffgeo::fundamental_forms(patch, h, th),
                                              {g.E, 0.0, g.G}));
      if (band) continue;
      const auto s = diffgeo::curvatures(patch, h, th);
      K = std::max(K, rel(s.K, s3::gauss_curvature_DC(xi)));
      bicons = std::max(bicons, diffgeo::biconservativity_residual(s));
    }
  }
  rep.expect_below("metric.complete", metric, 1e-6);
  rep.expect_below("partials", diffgeo::validate_patch(patch, 8).max_partial_mismatch, 1e-6);
  rep.expect_below("curvature.K", K, 1e-6);
  rep.expect_below("biconservative.residual", bicons, 1e-4);

  const auto per = gluing::periodicity_probe(atlas, 1e-9);
  rep.expect_below("periodicity.F", per.F_defect, 1e-12 * std::max(1.0, roots.xi02));
  rep.expect_below("periodicity.phi34", per.phi34_defect, 1e-12);
  rep.note("periodicity.period", per.period);
  rep.note("periodicity.phase_defect", per.phase_defect);
  rep.note("periodicity.phi12_defect", per.phi12_defect);
  rep.note("periodicity.periodic", per.periodic ? 1.0 : 0.0);
  rep.note("periodicity.best_multiple", per.best_multiple);
  rep.note("periodicity.best_multiple_defect", per.best_multiple_defect);
  return rep;
}

VerificationReport verify_revolution(const RunConfig& cfg) {
  VerificationReport rep;
  const gluing::GluingParams gp{cfg.C, *cfg.Cstar, cfg.c0};
  const gluing::GluingAtlas atlas(gp, cfg.k_max, gluing::PhaseBranch::Smooth,
                                  cfg.tol.quad_rel);
  const auto& roots = atlas.roots();
  const double Cs = gp.Cstar;

  const auto dom = domain_of(cfg, {atlas.strip_lo(0), atlas.strip_hi(1), 0.0,
                                   2.0 * kPi * Cs});
  const auto patch = gluing::patch_Psi(atlas, dom);
  double metric = 0.0, K = 0.0, one_minus_K = HUGE_VAL, radius = 0.0;
  for (double h : centers(dom.u_lo, dom.u_hi, cfg.n_u)) {
    const auto g = gluing::metric_complete(atlas, h);
    const double xi = gluing::F_profile(atlas, h);
    for (double th : centers(dom.v_lo, dom.v_hi, cfg.n_v)) {
      metric = std::max(metric, metric_defect(diffgeo::fundamental_forms(patch, h, th),
                                              {g.E, 0.0, g.G}));
      const double r = gluing::immersion_Psi(atlas, h, th).head<2>().norm();
      radius = std::max({radius, Cs / roots.xi02 - r, r - Cs / roots.xi01});
    }
    const double Kc = s3::gauss_curvature_DC(xi);
    one_minus_K = std::min(one_minus_K, 1.0 - Kc);
  }
  // Intrinsic data along one meridian; the surface is rotationally symmetric.
  double f = 0.0;
  for (double h : centers(dom.u_lo, dom.u_hi, cfg.n_u)) {
    const int k = atlas.strip_of(h);
    if (std::min(h - atlas.strip_lo(k), atlas.strip_hi(k) - h) < 1e-3 * atlas.half_period()) {
      continue;
    }
    const double xi = gluing::F_profile(atlas, h);
    const auto s = diffgeo::shape_operator(patch, h, 0.5 * (dom.v_lo + dom.v_hi));
    K = std::max(K, rel(s.K, s3::gauss_curvature_DC(xi)));
    f = std::max(f, rel(0.5 * s.f, gluing::mean_curvature_Psi(atlas, xi)));
  }
  rep.expect_below("metric.complete", metric, 1e-6);
  rep.expect_below("partials", diffgeo::validate_patch(patch, 8).max_partial_mismatch, 1e-6);
  rep.expect_below("mean_curvature.closed_form", f, 1e-5);
  rep.expect_below("curvature.K", K, 1e-6);
  rep.expect_above("curvature.one_minus_K_min", one_minus_K, 1e-300);
  rep.expect_below("radius.range_excess", radius, 1e-14 * std::max(1.0, Cs / roots.xi01));

  double Kin = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double xi = roots.xi01 + (roots.xi02 - roots.xi01) * (i + 0.5) / 64.0;
    const auto kc = diffgeo::orthogonal_curvature(s3::metric_E_jet(cfg.C),
                                                  s3::metric_G_jet(), xi);
    Kin = std::max(Kin, rel(kc.K, 1.0 - std::pow(xi, 8.0 / 3.0) / 9.0));
  }
  rep.expect_below("curvature.K_identity", Kin, 1e-6);

  const gluing::GluingAtlas half({gp.C, 0.5 * Cs, gp.c0}, cfg.k_max,
                                 gluing::PhaseBranch::Smooth, cfg.tol.quad_rel);
  rep.expect_above("Cstar_dependence",
                   std::abs(gluing::mean_curvature_Psi(atlas, roots.xi00) -
                            gluing::mean_curvature_Psi(half, roots.xi00)),
                   1e-6);
  return rep;
}

VerificationReport run_verify(const RunConfig& cfg) {
  validate(cfg);
  VerificationReport rep;
  switch (cfg.family) {
    case Family::R3:
      rep = verify_r3(cfg);
      break;
    case Family::S3Local:
      rep = verify_s3_local(cfg);
      break;
    case Family::S3Complete:
      rep = verify_s3_complete(cfg);
      break;
    case Family::Revolution:
      rep = verify_revolution(cfg);
      break;
    case Family::All: {
      RunConfig sub = cfg;
      sub.u_range.reset();
      sub.v_range.reset();
      sub.family = Family::R3;
      rep.merge("r3", verify_r3(sub));
      sub.family = Family::S3Local;
      rep.merge("s3-local", verify_s3_local(sub));
      sub.family = Family::S3Complete;
      rep.merge("s3-complete", verify_s3_complete(sub));
      sub.family = Family::Revolution;
      rep.merge("revolution", verify_revolution(sub));
      break;
    }
  }
  auto& env = rep.environment;
  env["family"] = std::string(family_name(cfg.family));
  env["C"] = cfg.C;
  env["Cstar"] = cfg.Cstar ? nlohmann::ordered_json(*cfg.Cstar) : nlohmann::ordered_json();
  env["c0"] = cfg.c0;
  env["grid"] = {cfg.n_u, cfg.n_v};
  if (cfg.u_range) env["u_range"] = {cfg.u_range->first, cfg.u_range->second};
  if (cfg.v_range) env["v_range"] = {cfg.v_range->first, cfg.v_range->second};
  env["k_max"] = cfg.k_max;
  env["tolerances"] = {{"root", cfg.tol.root},
                       {"quad_rel", cfg.tol.quad_rel},
                       {"ode", cfg.tol.ode}};
  env["seed"] = kSeed;
  return rep;
}

}  // namespace bicons::io
