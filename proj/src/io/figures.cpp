#include "bicons/io/figures.hpp"

#include <cmath>
#include <numbers>

#include "bicons/numerics/error.hpp"

namespace bicons::io {

namespace {

void require_samples(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
}

}  // namespace

std::vector<double> clustered_samples(double a, double b, int n) {
  require_samples(n);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    const double c = 0.5 * (1.0 - std::cos(std::numbers::pi * i / (n - 1)));
    x[i] = a + (b - a) * c;
  }
  x.front() = a;
  x.back() = b;
  return x;
}

Table figure_profile(double C, double u_max, int n) {
  require_samples(n);
  if (!(C > 0.0)) throw Error(ErrorCode::InvalidC, "C must be positive");
  Table t{{"u", "x", "z"}, {}};
  const double s = std::sqrt(C) / 3.0;
  for (int i = 0; i < n; ++i) {
    const double u = -u_max + 2.0 * u_max * i / (n - 1);
    const double ch = std::cosh(u);
    t.rows.push_back(
        {u, s * ch * ch * ch, s * 1.5 * (0.5 * std::sinh(2.0 * u) + u)});
  }
  return t;
}

Table figure_h0(const gluing::GluingAtlas& a, int n) {
  Table t{{"xi", "h0"}, {}};
  for (double xi : clustered_samples(a.roots().xi01, a.roots().xi02, n)) {
    t.rows.push_back({xi, a.h0(xi)});
  }
  return t;
}

Table figure_h_branches(const gluing::GluingAtlas& a, int n) {
  Table t{{"xi", "h0", "h1", "hm1"}, {}};
  for (double xi : clustered_samples(a.roots().xi01, a.roots().xi02, n)) {
    const double h = a.h0(xi);
    t.rows.push_back({xi, h, 2.0 * a.h_upper() - h, 2.0 * a.h_lower() - h});
  }
  return t;
}

Table figure_sigma0(const gluing::GluingAtlas& a, int n) {
  Table t{{"xi", "x", "h0"}, {}};
  const double cs = a.params().Cstar;
  for (double xi : clustered_samples(a.roots().xi01, a.roots().xi02, n)) {
    t.rows.push_back({xi, cs / xi, a.h0(xi)});
  }
  return t;
}

Table figure_sigma_branches(const gluing::GluingAtlas& a, int n) {
  Table t{{"xi", "x", "h0", "h1", "hm1"}, {}};
  const double cs = a.params().Cstar;
  for (double xi : clustered_samples(a.roots().xi01, a.roots().xi02, n)) {
    const double h = a.h0(xi);
    t.rows.push_back({xi, cs / xi, h, 2.0 * a.h_upper() - h,
                      2.0 * a.h_lower() - h});
  }
  return t;
}

Table figure_projection(const gluing::GluingAtlas& a, int k, int n) {
  require_samples(n);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  Table t{{"h", "x1", "x2"}, {}};
  const double lo = a.grid_point(-k), hi = a.grid_point(k);
  for (int i = 0; i < n; ++i) {
    const double h = lo + (hi - lo) * i / (n - 1);
    const auto p = gluing::immersion_Phi_complete(a, h, 0.0);
    t.rows.push_back({h, p[0], p[1]});
  }
  return t;
}

}  // namespace bicons::io
