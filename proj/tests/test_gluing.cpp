#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicons/diffgeo/surface.hpp"
#include "bicons/gluing/atlas.hpp"
#include "bicons/numerics/error.hpp"
#include "oracles.hpp"

using namespace bicons;
using namespace bicons::gluing;

namespace {

constexpr double kPi = std::numbers::pi;

// 40-digit mpmath evaluations for C = C* = 1, frozen.
constexpr double kHLower = -1.3598944225836332867;
constexpr double kHUpper = 0.38162416785523934213;
constexpr double kCstarUpper = 2.0842397718205972353;
constexpr double kTwiceDzeta = 4.2375241939590452793;
constexpr double kPhaseDefect = -2.0456611132205411977;

const GluingAtlas& unit_atlas() {
  static const GluingAtlas a({1.0, 1.0, 0.0}, 25);
  return a;
}

diffgeo::Rect strip_rect(const GluingAtlas& a, int k, double margin = 1e-3) {
  const double lo = a.strip_lo(k), hi = a.strip_hi(k);
  const double m = margin * (hi - lo);
  return {lo + m, hi - m, 0.0, 2.0 * kPi};
}

}  // namespace

TEST_CASE("admissible C* interval") {
  const auto r = cstar_range(1.0);
  CHECK(r.lower == 0.0);
  CHECK(std::abs(r.upper - kCstarUpper) < 1e-13);
  CHECK(std::abs(r.upper - 1.0 / std::sqrt(1.0 - 4.0 / std::pow(3.0, 1.5))) <
        1e-14);
  CHECK(cstar_range(0.7698004 + 1e-9).upper > 1e3);
  CHECK_FALSE(r.contains(r.upper));
  CHECK_FALSE(r.contains(0.0));
  CHECK(r.contains(1.0));
  try {
    require_cstar(1.0, 3.0);
    FAIL("C* = 3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCstar);
  }
  try {
    cstar_range(0.5);
    FAIL("C = 0.5 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidC);
  }
  CHECK_THROWS_AS(GluingAtlas({1.0, r.upper, 0.0}), Error);
}

TEST_CASE("h0 limits and growth at the ends") {
  const auto& a = unit_atlas();
  const auto& r = a.roots();
  CHECK(std::abs(a.h_lower() - kHLower) < 1e-12);
  CHECK(std::abs(a.h_upper() - kHUpper) < 1e-12);
  CHECK(a.h0(r.xi00) == 0.0);

  auto g = [&](double x, double, double) {
    const double T = std::abs(oracle::gap(1.0, x));
    return std::sqrt((3.0 * x * x - T) / (std::pow(x, 4) * T));
  };
  const double left = oracle::singular_integral(g, r.xi01, r.xi00, 20000);
  const double right = oracle::singular_integral(g, r.xi00, r.xi02, 20000);
  CHECK(std::abs(-left - kHLower) < 1e-6);
  CHECK(std::abs(right - kHUpper) < 1e-6);

  double prev = a.h0_prime(r.xi01 + 1e-2);
  for (double d : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double next = a.h0_prime(r.xi01 + d);
    CHECK(next > 5.0 * prev);
    prev = next;
  }
  prev = a.h0_prime(r.xi02 - 1e-2);
  for (double d : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double next = a.h0_prime(r.xi02 - d);
    CHECK(next > 5.0 * prev);
    prev = next;
  }
  double last = a.h_lower();
  for (int i = 1; i < 200; ++i) {
    const double x = r.xi01 + (r.xi02 - r.xi01) * i / 200.0;
    const double v = a.h0(x);
    CHECK(v > last);
    last = v;
  }
  CHECK_THROWS_AS(a.h0(r.xi02 + 1e-9), Error);
}

TEST_CASE("grid, spacing and phases") {
  const auto& a = unit_atlas();
  const auto rep = grid_report(a);
  CHECK(rep.max_grid_defect < 1e-12);
  CHECK(rep.max_spacing_defect < 1e-12);
  CHECK(rep.max_phase_defect < 1e-12);
  CHECK(a.grid().size() == 50);
  CHECK(a.grid().at(1) == a.h_upper());
  CHECK(std::abs(a.grid().at(-1) - a.h_lower()) < 1e-15);

  const double z1 = a.zeta_upper(), zm1 = a.zeta_lower();
  CHECK(a.phases().at(0) == 0.0);
  CHECK(std::abs(angle_distance(a.phases().at(1), -2.0 * z1)) < 1e-12);
  CHECK(std::abs(angle_distance(a.phases().at(-1), -2.0 * zm1)) < 1e-12);
  for (const auto& [k, c] : a.phases()) {
    CHECK(c > -kPi);
    CHECK(c <= kPi);
  }
  // Independent step-by-step recursion written out here.
  const GluingAtlas b({1.0, 0.7, 0.4}, 25);
  double c = 0.4;
  for (int k = 1; k <= 25; ++k) {
    c = -2.0 * (k % 2 ? b.zeta_upper() : b.zeta_lower()) - c;
    CHECK(std::abs(angle_distance(c, b.phase(k))) < 1e-12);
  }
  c = 0.4;
  for (int k = -1; k >= -25; --k) {
    c = -2.0 * ((k + 1) % 2 ? b.zeta_upper() : b.zeta_lower()) - c;
    CHECK(std::abs(angle_distance(c, b.phase(k))) < 1e-12);
  }
  CHECK(reduce_angle(-kPi) == doctest::Approx(kPi));
  CHECK(reduce_angle(3.0 * kPi) == doctest::Approx(kPi));
}

TEST_CASE("F: grid values, periodicity, range") {
  const auto& a = unit_atlas();
  const auto& r = a.roots();
  CHECK(F_profile(a, 0.0) == r.xi00);
  CHECK(F_profile(a, a.h_upper()) == r.xi02);
  CHECK(F_profile(a, a.h_lower()) == r.xi01);
  for (int k = 1; k <= 25; ++k) {
    CHECK(std::abs(F_profile(a, a.grid().at(k)) -
                   (k % 2 ? r.xi02 : r.xi01)) < 1e-12);
    CHECK(std::abs(F_profile(a, a.grid().at(-k)) -
                   (k % 2 ? r.xi01 : r.xi02)) < 1e-12);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> hd(-40.0, 40.0);
  const double period = 2.0 * a.half_period();
  for (int i = 0; i < 200; ++i) {
    const double h = hd(rng);
    const double x = F_profile(a, h);
    CHECK(std::abs(F_profile(a, h + period) - x) < 1e-12);
    CHECK(x >= r.xi01);
    CHECK(x <= r.xi02);
    // h0 undoes F on the base strip after the matching reflection.
    const int k = a.strip_of(h);
    CHECK(h >= a.strip_lo(k));
    CHECK(h < a.strip_hi(k));
  }
  // F is even about every junction.
  for (int k : {1, -1, 2, 5, -6}) {
    const double hj = a.grid().at(k);
    for (double s : {0.01, 0.3, 1.0}) {
      CHECK(std::abs(F_profile(a, hj + s) - F_profile(a, hj - s)) < 1e-12);
    }
  }
  // Derivative against a central difference away from the junctions.
  for (double h : {-1.0, -0.2, 0.1, 1.0, 2.5}) {
    const double d = 1e-5;
    const double fd = (F_profile(a, h + d) - F_profile(a, h - d)) / (2 * d);
    CHECK(std::abs(F_prime(a, h) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
  }
  CHECK(F_prime(a, a.h_upper()) == 0.0);
}

TEST_CASE("junction smoothness and the rejected branch") {
  const auto& a = unit_atlas();
  for (int k : {1, -1, 2, -2, 3, -3, 11, -11, 25, -25}) {
    const auto j = junction_smoothness(a, k);
    CHECK(j.F.worst(0) < 1e-3);
    CHECK(j.phi1.worst(0) < 1e-3);
    CHECK(j.phi2.worst(0) < 1e-3);
    CHECK(j.F.orders.size() == 4);
  }
  const auto j1 = junction_smoothness(a, 1);
  CHECK(std::abs(j1.F.orders[1].left) < 1e-6);
  CHECK(std::abs(j1.F.orders[1].right) < 1e-6);
  CHECK(j1.F.orders[0].left == a.roots().xi02);

  const GluingAtlas bad({1.0, 1.0, 0.0}, 3, PhaseBranch::Rejected);
  const auto jb = junction_smoothness(bad, 1);
  CHECK(jb.phi1.orders[0].mismatch < 1e-12);
  CHECK(jb.phi1.orders[1].mismatch > 0.1);
  CHECK(jb.phi2.orders[0].mismatch > 0.1);
  CHECK(jb.F.worst(0) < 1e-3);

  for (int k : {1, -1, 4}) {
    CHECK(tangent_plane_defect(a, k, 0.3) < 1e-10);
  }
  CHECK(tangent_plane_defect(bad, 1, 0.3) > 1e-3);
  CHECK_THROWS_AS(junction_smoothness(a, 0), Error);
  CHECK_THROWS_AS(junction_smoothness(a, 26), Error);
}

TEST_CASE("revolution surface Psi") {
  const auto& a = unit_atlas();
  const auto& r = a.roots();
  for (int k : {0, 1, -3}) {
    const auto patch = patch_Psi(a, strip_rect(a, k));
    const auto chk = diffgeo::validate_patch(patch, 6);
    CHECK(chk.max_partial_mismatch < 1e-7);
    const auto& d = patch.domain;
    for (int i = 0; i < 16; ++i) {
      const double h = d.u_lo + (d.u_hi - d.u_lo) * (i + 0.5) / 16.0;
      const double th = 0.37 + 0.3 * i;
      const double xi = F_profile(a, h);
      const auto s = diffgeo::shape_operator(patch, h, th);
      const auto g = metric_complete(a, h);
      CHECK(std::abs(s.E / g.E - 1.0) < 1e-6);
      CHECK(std::abs(s.G / g.G - 1.0) < 1e-6);
      CHECK(std::abs(s.F) < 1e-12);
      CHECK(std::abs(0.5 * s.f - mean_curvature_Psi(a, xi)) < 1e-5);
      CHECK(std::abs(s.K - (1.0 - std::pow(xi, 8.0 / 3.0) / 9.0)) < 1e-6);
      CHECK(1.0 - s.K > 0.0);
      const double rad = immersion_Psi(a, h, th).head<2>().norm();
      CHECK(rad >= 1.0 / r.xi02 - 1e-15);
      CHECK(rad <= 1.0 / r.xi01 + 1e-15);
    }
  }
  const GluingAtlas b({1.0, 0.5, 0.0}, 3);
  CHECK(std::abs(mean_curvature_Psi(a, 2.0) - mean_curvature_Psi(b, 2.0)) >
        1e-2);
  for (int i = 0; i <= 50; ++i) {
    const double xi = r.xi01 + (r.xi02 - r.xi01) * i / 50.0;
    CHECK(std::isfinite(mean_curvature_Psi(a, xi)));
  }
  CHECK_THROWS_AS(mean_curvature_Psi(a, r.xi02 * 1.01), Error);
}

TEST_CASE("complete sphere immersion") {
  const auto& a = unit_atlas();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> hd(-30.0, 30.0), td(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double h = hd(rng), th = td(rng);
    CHECK(std::abs(immersion_Phi_complete(a, h, th).norm() - 1.0) < 1e-10);
  }
  // h = 0, c0 = 0 lies on the first axis of the (x1, x2) plane.
  const auto p0 = immersion_Phi_complete(a, 0.0, 0.0);
  CHECK(std::abs(p0[0] - std::sqrt(1.0 - 1.0 / std::pow(a.roots().xi00, 2))) <
        1e-14);
  CHECK(std::abs(p0[1]) < 1e-14);
  // On the base strip it coincides with the local immersion.
  for (double h : {-1.0, -0.3, 0.2}) {
    const double xi = F_profile(a, h);
    CHECK((immersion_Phi_complete(a, h, 0.4) - a.family().immersion(xi, 0.4))
              .norm() < 1e-13);
  }
  for (int k : {0, 1, -1, 6}) {
    const auto patch = patch_Phi_complete(a, strip_rect(a, k));
    const auto chk = diffgeo::validate_patch(patch, 6);
    CHECK(chk.max_partial_mismatch < 1e-7);
    CHECK(chk.max_norm_defect < 1e-12);
    const auto& d = patch.domain;
    for (int i = 0; i < 8; ++i) {
      const double h = d.u_lo + (d.u_hi - d.u_lo) * (i + 0.5) / 8.0;
      const double th = 0.2 + 0.7 * i;
      const auto s = diffgeo::curvatures(patch, h, th);
      const auto g = metric_complete(a, h);
      CHECK(std::abs(s.E / g.E - 1.0) < 1e-6);
      CHECK(std::abs(s.G / g.G - 1.0) < 1e-6);
      CHECK(diffgeo::biconservativity_residual(s) < 1e-4);
      const double xi = F_profile(a, h);
      CHECK(std::abs(s.K - (1.0 - std::pow(xi, 8.0 / 3.0) / 9.0)) < 1e-6);
    }
  }
}

TEST_CASE("periodicity probe") {
  const auto& a = unit_atlas();
  CHECK(std::abs(2.0 * (a.zeta_upper() - a.zeta_lower()) - kTwiceDzeta) <
        1e-11);
  const auto rep = periodicity_probe(a, 1e-8);
  CHECK(rep.F_defect < 1e-12);
  CHECK(rep.phi34_defect < 1e-12);
  CHECK(std::abs(rep.phase_defect - kPhaseDefect) < 1e-11);
  CHECK_FALSE(rep.periodic);
  CHECK(rep.phi12_defect > 0.1);
  CHECK(rep.best_multiple >= 1);
  CHECK(rep.best_multiple_defect <= std::abs(rep.phase_defect));
}
