#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicons/diffgeo/intrinsic.hpp"
#include "bicons/diffgeo/surface.hpp"
#include "bicons/numerics/error.hpp"
#include "bicons/s3/family.hpp"
#include "oracles.hpp"

using namespace bicons;
using namespace bicons::s3;

namespace {

// 40-digit mpmath evaluations, frozen.
struct RootRef {
  double C, xi01, xi00, xi02;
};
constexpr RootRef kRoots[] = {
    {0.8, 1.8119981367253620266, 2.4149534156997728721, 2.9429028972301241513},
    {1.0, 1.2844545283264539655, 3.375, 4.8711581792847966309},
    {2.0, 0.76207332113445326551, 9.5459415460183915794, 14.645578837969172877},
    {5.0, 0.45632006227349261073, 37.733647120308951127, 58.089585373535045779},
};
constexpr double kK01 = 0.26870542221265554763;
constexpr double kK02 = 1.5891361038002578461;
constexpr double kZetaLo = -1.7268637987427533;
constexpr double kZetaHi = 0.39189829823676933965;
constexpr double kT00 = 5.54296875;
constexpr double kE00 = 0.047515058712302467686;

}  // namespace

TEST_CASE("domain roots against the frozen oracle") {
  for (const auto& ref : kRoots) {
    const auto r = domain_roots(ref.C);
    CHECK(std::abs(r.xi01 - ref.xi01) < 1e-9 * ref.xi01);
    CHECK(std::abs(r.xi02 - ref.xi02) < 1e-9 * ref.xi02);
    CHECK(std::abs(r.xi00 - ref.xi00) < 1e-12 * ref.xi00);
    CHECK(std::abs(gap(ref.C, r.xi01)) < 1e-10);
    CHECK(std::abs(gap(ref.C, r.xi02)) < 1e-10);
    CHECK(r.xi01 < r.xi00);
    CHECK(r.xi00 < r.xi02);
    CHECK(r.xi01 > 1.0 / std::sqrt(ref.C));
    CHECK(std::abs(r.k01 - k_of_xi(r.xi01)) < 1e-10);
  }
  const auto r1 = domain_roots(1.0);
  CHECK(std::abs(r1.k01 - kK01) < 1e-12);
  CHECK(std::abs(r1.k02 - kK02) < 1e-12);
  CHECK(std::abs(r1.T00 - kT00) < 1e-12);
  // The k-roots are the zeros of L(k) with C1 = 16 3^(1/4) C.
  const double C1 = FamilyParamsS3::make(1.0).C1;
  CHECK(std::abs(L_of_k(C1, r1.k01)) < 1e-10);
  CHECK(std::abs(L_of_k(C1, r1.k02)) < 1e-10);
  CHECK(C1 > 64.0 / std::pow(3.0, 1.25));
}

TEST_CASE("root sweep over admissible C") {
  for (double C = c_threshold() + 0.01; C <= 5.0; C += 0.0731) {
    const auto r = domain_roots(C);
    CHECK(std::abs(gap(C, r.xi01)) < 1e-10);
    CHECK(std::abs(gap(C, r.xi02)) < 1e-10);
    CHECK(r.xi01 < std::pow(9.0 * C / 4.0, 1.5));
    CHECK(r.xi02 > std::pow(9.0 * C / 4.0, 1.5));
    CHECK(k01_bound_report(C).holds);
  }
}

TEST_CASE("degenerate and inadmissible C") {
  try {
    domain_roots(std::pow(256.0 / 729.0, 0.25));
    FAIL("expected DegenerateDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateDomain);
  }
  CHECK_THROWS_AS(FamilyParamsS3::make(0.5), Error);
  CHECK_THROWS_AS(FamilyParamsS3::make(c_threshold()), Error);
  CHECK(FamilyParamsS3::make(1.0).C1 == doctest::Approx(16.0 * std::pow(3.0, 0.25)));
}

TEST_CASE("gap near a root matches the direct formula away from it") {
  const auto r = domain_roots(1.0);
  for (double d : {0.5, 0.1, 1e-3}) {
    CHECK(std::abs(gap_near(1.0, r.xi01, d) - gap(1.0, r.xi01 + d)) < 1e-13);
    CHECK(std::abs(gap_near(1.0, r.xi02, -d) - gap(1.0, r.xi02 - d)) < 1e-12);
  }
}

TEST_CASE("metric_gC and curvature of D_C") {
  const auto m = metric_gC(1.0, 3.375);
  CHECK(std::abs(m.E - kE00) < 1e-15);
  CHECK(std::abs(m.G - 1.0 / (3.375 * 3.375)) < 1e-15);
  const auto r = domain_roots(1.0);
  CHECK(metric_gC(1.0, r.xi01 * (1 + 1e-12)).E > 1e9);
  CHECK_THROWS_AS(metric_gC(1.0, 0.5), Error);

  CHECK(std::abs(gauss_curvature_DC(std::pow(9.0, 3.0 / 8.0))) < 1e-14);
  const double x = 2.1;
  CHECK(std::abs(gauss_curvature_DC_prime(x) -
                 oracle::diff1(gauss_curvature_DC, x, 1e-3)) < 1e-9);

  // Intrinsic curvature of g_C does not depend on C.
  for (double C : {0.8, 1.0, 2.0}) {
    const auto rr = domain_roots(C);
    for (int i = 1; i < 10; ++i) {
      const double xi = rr.xi01 + (rr.xi02 - rr.xi01) * i / 10.0;
      const auto pc = diffgeo::orthogonal_curvature(metric_E_jet(C),
                                                    metric_G_jet(), xi);
      CHECK(std::abs(pc.K - gauss_curvature_DC(xi)) < 1e-6);
      CHECK(std::abs(pc.dK - gauss_curvature_DC_prime(xi)) <
            1e-6 * std::abs(gauss_curvature_DC_prime(xi)));
    }
  }
}

TEST_CASE("zeta0: base, limits, monotone") {
  const LocalFamily fam(FamilyParamsS3::make(1.0));
  CHECK(fam.zeta0(3.375) == 0.0);
  CHECK(std::abs(fam.zeta_lower() - kZetaLo) < 1e-11);
  CHECK(std::abs(fam.zeta_upper() - kZetaHi) < 1e-11);
  const auto& r = fam.roots();
  double prev = fam.zeta_lower();
  for (int i = 1; i < 200; ++i) {
    const double xi = r.xi01 + (r.xi02 - r.xi01) * i / 200.0;
    CHECK(1.0 * xi * xi > 1.0);
    const double z = fam.zeta0(xi);
    CHECK(z > prev);
    prev = z;
  }
  CHECK(fam.zeta_upper() > prev);
  // Independent Simpson oracle on the plain integrand.
  const double C = 1.0;
  const double ref = oracle::singular_integral(
      [&](double x, double, double) {
        return std::sqrt(C) * std::pow(x, 4.0 / 3.0) /
               ((C * x * x - 1.0) * std::sqrt(std::abs(oracle::gap(C, x))));
      },
      r.xi01, r.xi02);
  CHECK(std::abs((fam.zeta_upper() - fam.zeta_lower()) - ref) < 1e-6);
  CHECK_THROWS_AS(fam.zeta0(10.0), Error);
}

TEST_CASE("Phi_C: unit norm, partials, metric, curvature, residual") {
  const LocalFamily fam(FamilyParamsS3::make(1.0));
  const auto& r = fam.roots();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ux(r.xi01, r.xi02), ut(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = ux(rng);
    if (!(xi > r.xi01 && xi < r.xi02)) continue;
    CHECK(std::abs(fam.immersion(xi, ut(rng)).norm() - 1.0) < 1e-12);
  }
  const double w = r.xi02 - r.xi01;
  const diffgeo::Rect dom{r.xi01 + 1e-3 * w, r.xi02 - 1e-3 * w, -3.0, 3.0};
  const auto patch = fam.patch(dom);
  CHECK(diffgeo::validate_patch(patch, 6).max_partial_mismatch < 1e-6);
  for (int i = 1; i < 8; ++i) {
    const double xi = dom.u_lo + (dom.u_hi - dom.u_lo) * i / 8.0;
    const auto s = diffgeo::curvatures(patch, xi, 0.4);
    const auto g = metric_gC(1.0, r, xi);
    CHECK(std::abs(s.E - g.E) < 1e-8 * g.E);
    CHECK(std::abs(s.G - g.G) < 1e-8 * g.G);
    CHECK(std::abs(s.F) < 1e-8 * std::sqrt(g.E * g.G));
    CHECK(std::abs(s.K - gauss_curvature_DC(xi)) < 1e-6);
    CHECK(std::abs(s.normal.dot(patch.position(xi, 0.4))) < 1e-10);
    CHECK(diffgeo::biconservativity_residual(s) < 1e-4);
    // grad K has only a xi-component, equal to the closed form.
    CHECK(std::abs(s.grad_K[0] - grad_K_component(1.0, xi)) <
          1e-5 * std::max(1.0, std::abs(grad_K_component(1.0, xi))));
    CHECK(std::abs(s.grad_K[1]) < 1e-6);
  }
}

TEST_CASE("grad K vanishes at both ends of D_C") {
  const auto r = domain_roots(1.0);
  CHECK(std::abs(grad_K_component(1.0, r.xi01 + 1e-9)) < 1e-7);
  CHECK(std::abs(grad_K_component(1.0, r.xi02 - 1e-9)) < 1e-5);
}

TEST_CASE("level-curve circles on D_C (c = 1)") {
  for (double C : {1.0, 2.0}) {
    const auto r = domain_roots(C);
    for (int i = 1; i < 10; ++i) {
      const double xi = r.xi01 + (r.xi02 - r.xi01) * i / 10.0;
      const auto lc = diffgeo::level_curve_circle_check_orthogonal(
          metric_E_jet(C), metric_G_jet(), 1.0, xi);
      const double expect = std::sqrt(gap(C, xi) / 3.0);
      CHECK(std::abs(lc.kappa_geodesic - expect) < 1e-10);
      CHECK(std::abs(lc.kappa_formula - expect) < 1e-8);
    }
  }
}

TEST_CASE("curvature ODE keeps the prime integral") {
  const auto p = FamilyParamsS3::make(1.0);
  const auto r = domain_roots(1.0);
  const double k0 = 0.5 * (r.k01 + r.k02);
  const auto rep = curvature_ode_k(p, k0, 1, 1e3, 1e-12);
  CHECK(rep.turning_times.size() == 6);
  CHECK(rep.relative_drift < 1e-8);
  CHECK(rep.k_min >= r.k01 - 1e-6);
  CHECK(rep.k_max <= r.k02 + 1e-6);
  CHECK(std::abs(rep.k_min - r.k01) < 1e-4);
  CHECK(std::abs(rep.k_max - r.k02) < 1e-4);
  // Tightening the tolerance shrinks the drift.
  const auto loose = curvature_ode_k(p, k0, -1, 1e3, 1e-8);
  CHECK(loose.max_drift > rep.max_drift);
  CHECK_THROWS_AS(curvature_ode_k(p, 2.0, 1, 10.0), Error);
}

TEST_CASE("phi coordinate bridge") {
  CHECK(phi_coordinate_bridge(2.0, -1.0, 0.0 - std::log(std::pow(4.5, 1.5))).C == 2.0);
  // a = 2, b = -1: xi = e^(-phi); domain xi in (xi01, xi02).
  const auto r = domain_roots(2.0);
  std::vector<double> phis;
  for (int i = 1; i < 12; ++i) {
    const double xi = r.xi01 + (r.xi02 - r.xi01) * i / 12.0;
    phis.push_back(-std::log(xi));
  }
  CHECK(bridge_metric_check(2.0, -1.0, phis) < 1e-6);
  // At the radicand boundary the bridge rejects.
  try {
    phi_coordinate_bridge(2.0, -1.0, -std::log(r.xi02) - 1e-3);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
  CHECK_THROWS_AS(phi_coordinate_bridge(2.0, 1.0, 0.0), Error);
}

TEST_CASE("master ODE residuals") {
  CHECK(c0_ode_residual(0.0) == 0.0);
  CHECK(std::abs(c0_ode_residual(1.0)) < 1e-10);
  CHECK(std::abs(c0_ode_residual(-2.3)) < 1e-10);
  const diffgeo::JetProfile phi = [](const diffgeo::Jet4& x) {
    return 3.0 * log(cosh(x / 3.0));
  };
  CHECK(master_ode_residual(phi, 0.0, 1.0) == c0_ode_residual(1.0));
}

TEST_CASE("k01 bound") {
  for (double C : {0.78, 0.8, 1.0, 2.0, 5.0, 50.0}) {
    const auto b = k01_bound_report(C);
    CHECK(b.holds);
    CHECK(std::abs(b.bound - std::pow(3.0, -1.5) * std::pow(C, -2.0 / 3.0)) <
          1e-14);
  }
}
