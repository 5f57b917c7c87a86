#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bicons/gluing/atlas.hpp"
#include "bicons/io/commands.hpp"
#include "bicons/io/figures.hpp"
#include "bicons/io/mesh.hpp"
#include "bicons/io/table.hpp"
#include "bicons/io/verify.hpp"
#include "bicons/numerics/error.hpp"
#include "bicons/r3/family.hpp"
#include "oracles.hpp"

using namespace bicons;
using namespace bicons::io;

namespace {

constexpr double kPi = std::numbers::pi;

int count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream is(s);
  int n = 0;
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("csv formatting round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_number(x)) == x);
  }
  const Table t{{"a", "b"}, {{1.0, 0.5}, {-3.0, 1e-17}}};
  CHECK(to_csv(t) == "a,b\n1,0.5\n-3,1.0000000000000001e-17\n");
  CHECK(code_of([] { write_file("/nonexistent-dir/x.csv", "x"); }) == ErrorCode::Io);
}

TEST_CASE("config parsing and admissibility") {
  CHECK(parse_family("s3-complete") == Family::S3Complete);
  CHECK(family_name(Family::Revolution) == "revolution");
  CHECK(code_of([] { parse_family("r4"); }) == ErrorCode::InvalidArgument);

  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.C = -1.0;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidC);
  c = RunConfig{};
  c.family = Family::S3Local;
  c.C = 0.5;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidC);
  c.C = 1.0;
  CHECK_NOTHROW(validate(c));
  c.family = Family::S3Complete;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidCstar);
  c.Cstar = 3.0;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidCstar);
  c.Cstar = 1.0;
  CHECK_NOTHROW(validate(c));
  c.n_u = 1;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidArgument);
  c.n_u = 8;
  c.u_range = Range{1.0, 1.0};
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidArgument);
  c.u_range.reset();
  c.pole = diffgeo::Vec4(0, 0, 0, 2);
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidArgument);
  c.pole = diffgeo::Vec4(0, 0, 0, -1);
  c.tol.quad_rel = 0.0;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("params summary") {
  const std::string s = params_summary(1.0, 1.0);
  CHECK(s.find("xi00 = 3.375\n") != std::string::npos);
  CHECK(s.find("Cstar_source = given\n") != std::string::npos);
  // Roots against the bisection oracle.
  auto value = [&s](const std::string& key) {
    const auto at = s.find(key + " = ");
    REQUIRE(at != std::string::npos);
    return std::stod(s.substr(at + key.size() + 3));
  };
  const auto T = [](double x) { return oracle::gap(1.0, x); };
  CHECK(std::abs(value("xi01") - oracle::bisect(T, 1.0, 3.375)) < 1e-9);
  CHECK(std::abs(value("xi02") - oracle::bisect(T, 3.375, 6.0)) < 1e-9);
  CHECK(std::abs(value("h_0_-1") - -1.3598944225836332867) < 1e-10);
  CHECK(std::abs(value("Cstar_max_exclusive") - 2.0842397718205972353) < 1e-14);
  CHECK(params_summary(1.0, std::nullopt).find("interval midpoint") != std::string::npos);
  CHECK(code_of([] { params_summary(0.5, std::nullopt); }) == ErrorCode::InvalidC);
  CHECK(code_of([] { params_summary(1.0, 3.0); }) == ErrorCode::InvalidCstar);
}

TEST_CASE("figure data") {
  const auto xs = clustered_samples(1.0, 2.0, 9);
  CHECK(xs.front() == 1.0);
  CHECK(xs.back() == 2.0);
  CHECK(std::abs(xs[4] - 1.5) < 1e-15);
  CHECK(xs[1] - xs[0] < xs[5] - xs[4]);

  // Profile of X_C: x(0) = sqrt(C)/3 and agreement with the immersion at v = 0.
  const double C = 2.0;
  const auto f1 = figure_profile(C, 1.5, 31);
  const auto p = r3::FamilyParamsR3::from_C(C);
  CHECK(std::abs(f1.rows[15][1] - std::sqrt(C) / 3.0) < 1e-15);
  for (const auto& r : f1.rows) {
    const Eigen::Vector3d x = r3::immersion_XC(p, r[0], 0.0);
    CHECK(std::abs(std::hypot(x[0], x[1]) - r[1]) < 1e-12 * (1.0 + r[1]));
    CHECK(std::abs(std::abs(x[2]) - std::abs(r[2])) < 1e-12 * (1.0 + std::abs(r[2])));
  }

  const gluing::GluingAtlas a({1.0, 1.0, 0.0}, 11);
  const auto f2 = figure_h0(a, 65);
  CHECK(f2.rows.front()[1] == a.h_lower());
  CHECK(f2.rows.back()[1] == a.h_upper());
  for (std::size_t i = 1; i < f2.rows.size(); ++i) CHECK(f2.rows[i][1] > f2.rows[i - 1][1]);
  const auto f3 = figure_h_branches(a, 17);
  CHECK(f3.rows.back()[2] == a.h_upper());
  CHECK(f3.rows.front()[3] == a.h_lower());
  const auto f5 = figure_sigma_branches(a, 17);
  CHECK(f5.rows.front()[1] == 1.0 / a.roots().xi01);

  // h = 0 sits on strip 0 at xi00, where zeta0 = 0.
  const auto f6 = figure_projection(a, 11, 401);
  CHECK(f6.rows.front()[0] == a.grid_point(-11));
  CHECK(f6.rows.back()[0] == a.grid_point(11));
  const auto p0 = gluing::immersion_Phi_complete(a, 0.0, 0.0);
  CHECK(std::abs(p0[0] - std::sqrt(1.0 - 1.0 / (3.375 * 3.375))) < 1e-12);
  CHECK(std::abs(p0[1]) < 1e-12);
}

TEST_CASE("mesh sampling, projection and OBJ") {
  const GridSpec g{0.0, 1.0, 4, 0.0, 2.0 * kPi, 6, true};
  const auto circle = [](double u, double v) -> diffgeo::Vec4 {
    return {std::cos(v) * std::cos(u), std::sin(v) * std::cos(u), std::sin(u), 0.0};
  };
  const Mesh m = sample_mesh(circle, diffgeo::Ambient::Euclidean3, g);
  CHECK(m.points.size() == 24);
  CHECK(m.v[5] < 2.0 * kPi);
  CHECK(m.u[6] == doctest::Approx(1.0 / 3.0));
  const std::string obj = to_obj(m, {0, 0, 0, -1});
  CHECK(count_lines(obj, "v ") == 24);
  CHECK(count_lines(obj, "f ") == static_cast<int>(face_count(g)));
  CHECK(face_count(g) == 36);
  CHECK(obj.find("f 6 1 7\n") != std::string::npos);  // wraps in v
  GridSpec open = g;
  open.wrap_v = false;
  CHECK(face_count(open) == 30);

  const auto raw = raw_table(m);
  CHECK(raw.rows.size() == 24);
  CHECK(raw.rows[7][0] == 1.0);
  CHECK(raw.rows[7][1] == 1.0);

  // Stereographic projection from -e4 and from a general pole.
  const diffgeo::Vec4 south(0, 0, 0, -1);
  const diffgeo::Vec4 p(0.5, 0.5, 0.5, 0.5);
  const Eigen::Vector3d y = stereographic(p, south);
  CHECK((y - Eigen::Vector3d(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
  const diffgeo::Vec4 pole = diffgeo::Vec4(1, 2, -2, 4).normalized();
  const auto B = complement_basis(pole);
  CHECK((B.transpose() * B - Eigen::Matrix3d::Identity()).norm() < 1e-14);
  CHECK((B.transpose() * pole).norm() < 1e-14);
  // |y|^2 = (1 + p.n) / (1 - p.n) for unit p.
  const Eigen::Vector3d z = stereographic(p, pole);
  const double pn = p.dot(pole);
  CHECK(std::abs(z.squaredNorm() - (1 + pn) / (1 - pn)) < 1e-13);
  CHECK(code_of([&] { stereographic(pole, pole); }) == ErrorCode::PoleHit);
}

TEST_CASE("mesh files") {
  RunConfig c;
  c.family = Family::S3Complete;
  c.C = 1.0;
  c.Cstar = 1.0;
  c.n_u = 12;
  c.n_v = 10;
  c.format = "obj";
  c.out_path = "mesh/out.obj";
  const auto files = mesh_files(c);
  REQUIRE(files.size() == 2);
  CHECK(files[1].path == "mesh/out.raw.csv");
  CHECK(count_lines(files[0].text, "v ") == 120);
  CHECK(count_lines(files[1].text, "") == 121);
  for (const auto& line : {files[0].text}) CHECK(line.find("nan") == std::string::npos);
  CHECK(mesh_files(c)[0].text == files[0].text);

  c.family = Family::R3;
  const auto r3files = mesh_files(c);
  CHECK(r3files.size() == 1);
  // The v samples stop one step short of the 2 pi / 3 period.
  const auto grid = default_mesh_grid(c);
  CHECK(grid.wrap_v);
  CHECK(grid.v_hi == doctest::Approx(2.0 * kPi / 3.0));

  c.format = "json";
  CHECK(code_of([&] { mesh_files(c); }) == ErrorCode::InvalidArgument);
  c.format = "obj";
  c.family = Family::All;
  CHECK(code_of([&] { mesh_files(c); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("mesh export hits the pole") {
  // Pole placed on the surface itself.
  RunConfig c;
  c.family = Family::S3Local;
  c.n_u = 5;
  c.n_v = 4;
  c.format = "obj";
  c.out_path = "unused.obj";
  const auto grid = default_mesh_grid(c);
  const s3::LocalFamily fam(s3::FamilyParamsS3::make(1.0));
  c.pole = fam.immersion(grid.u_lo, grid.v_lo);
  CHECK(code_of([&] { mesh_files(c); }) == ErrorCode::PoleHit);
}

TEST_CASE("curves files and failures leave nothing behind") {
  const auto dir = std::filesystem::temp_directory_path() / "bicons_test_curves";
  std::filesystem::remove_all(dir);
  RunConfig c;
  c.C = 1.0;
  c.samples = 33;
  c.out_path = dir.string();
  const auto files = curves_files(c);
  REQUIRE(files.size() == 6);
  for (const auto& f : files) CHECK(count_lines(f.text, "") == 34);
  CHECK(files[0].text.rfind("u,x,z\n", 0) == 0);
  CHECK(files[5].text.rfind("h,x1,x2\n", 0) == 0);
  write_all(files);
  CHECK(std::filesystem::exists(dir / "fig6_projection.csv"));
  std::filesystem::remove_all(dir);

  c.Cstar = 5.0;
  CHECK(code_of([&] { write_all(curves_files(c)); }) == ErrorCode::InvalidCstar);
  CHECK_FALSE(std::filesystem::exists(dir));
}

TEST_CASE("verification report") {
  VerificationReport r;
  r.expect_below("a", 1e-9, 1e-8);
  r.expect_above("b", 2.0, 1.0);
  r.expect_true("c", true);
  r.note("n", 3.5);
  CHECK(r.pass());
  r.expect_below("d", std::nan(""), 1.0);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.find("d").pass);
  VerificationReport top;
  top.merge("x", r);
  CHECK(top.checks().size() == 4);
  CHECK(top.find("x.b").pass);
  const auto j = top.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["checks_failed"] == 1);
  CHECK(j["checks"].begin().key() == "x.a");
  CHECK(j["evidence"]["x.n"] == 3.5);
  CHECK(code_of([&] { top.find("missing"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("verify suites pass on small grids") {
  RunConfig c;
  c.n_u = 8;
  c.n_v = 8;
  c.family = Family::R3;
  const auto r3 = run_verify(c);
  CHECK(r3.pass());
  CHECK(r3.environment["family"] == "r3");
  c.family = Family::Revolution;
  c.Cstar = 1.0;
  const auto rev = run_verify(c);
  CHECK(rev.pass());
  CHECK(rev.environment["tolerances"]["quad_rel"] == 1e-12);
  c.family = Family::S3Local;
  c.C = 5.0;
  CHECK(run_verify(c).pass());
  c.C = 0.5;
  CHECK(code_of([&] { run_verify(c); }) == ErrorCode::InvalidC);
}
