#include "bicons/io/commands.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "bicons/gluing/atlas.hpp"
#include "bicons/io/figures.hpp"
#include "bicons/io/verify.hpp"
#include "bicons/numerics/error.hpp"
#include "bicons/r3/family.hpp"
#include "bicons/s3/family.hpp"

namespace bicons::io {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

RunConfig with_default_cstar(RunConfig cfg) {
  if (!cfg.Cstar) cfg.Cstar = 1.0;
  return cfg;
}

}  // namespace

std::string params_summary(double C, std::optional<double> Cstar,
                           const numerics::Tolerances& tol) {
  const auto params = s3::FamilyParamsS3::make(C);
  const auto range = gluing::cstar_range(C);
  if (Cstar) gluing::require_cstar(C, *Cstar);
  const double cs = Cstar ? *Cstar : 0.5 * (range.lower + range.upper);
  const gluing::GluingAtlas atlas({C, cs, 0.0}, 1, gluing::PhaseBranch::Smooth,
                                  tol.quad_rel);
  const auto& r = atlas.roots();

  std::ostringstream os;
  auto line = [&os](const char* key, double v) {
    os << key << " = " << format_number(v) << '\n';
  };
  line("C", C);
  line("C_threshold", s3::c_threshold());
  line("xi01", r.xi01);
  line("xi00", r.xi00);
  line("xi02", r.xi02);
  line("k01", r.k01);
  line("k02", r.k02);
  line("C1", params.C1);
  line("zeta_0_-1", atlas.zeta_lower());
  line("zeta_0_1", atlas.zeta_upper());
  line("Cstar_min_exclusive", range.lower);
  line("Cstar_max_exclusive", range.upper);
  os << "Cstar_source = " << (Cstar ? "given" : "interval midpoint") << '\n';
  line("Cstar", cs);
  line("h_0_-1", atlas.h_lower());
  line("h_0_1", atlas.h_upper());
  return os.str();
}

std::vector<OutputFile> curves_files(const RunConfig& in) {
  RunConfig cfg = with_default_cstar(in);
  cfg.family = Family::S3Complete;
  validate(cfg);
  const int n = cfg.samples;
  const gluing::GluingAtlas atlas({cfg.C, *cfg.Cstar, cfg.c0}, std::max(11, cfg.k_max),
                                  gluing::PhaseBranch::Smooth, cfg.tol.quad_rel);
  const double u_max = cfg.u_range ? std::max(std::abs(cfg.u_range->first),
                                              std::abs(cfg.u_range->second))
                                   : 1.5;
  const auto& dir = cfg.out_path;
  return {
      {join(dir, "fig1_profile.csv"), to_csv(figure_profile(cfg.C, u_max, n))},
      {join(dir, "fig2_h0.csv"), to_csv(figure_h0(atlas, n))},
      {join(dir, "fig3_h_branches.csv"), to_csv(figure_h_branches(atlas, n))},
      {join(dir, "fig4_sigma0.csv"), to_csv(figure_sigma0(atlas, n))},
      {join(dir, "fig5_sigma_branches.csv"), to_csv(figure_sigma_branches(atlas, n))},
      {join(dir, "fig6_projection.csv"), to_csv(figure_projection(atlas, 11, n))},
  };
}

GridSpec default_mesh_grid(const RunConfig& cfg) {
  GridSpec g{0.0, 1.0, cfg.n_u, 0.0, 1.0, cfg.n_v, true};
  switch (cfg.family) {
    case Family::R3:
      g.u_lo = -1.5;
      g.u_hi = 1.5;
      g.v_hi = 2.0 * kPi / 3.0;
      break;
    case Family::S3Local: {
      const auto r = s3::domain_roots(cfg.C, cfg.tol.root);
      const double m = 1e-3 * (r.xi02 - r.xi01);
      g.u_lo = r.xi01 + m;
      g.u_hi = r.xi02 - m;
      g.v_hi = 2.0 * kPi / std::sqrt(cfg.C);
      break;
    }
    case Family::S3Complete:
    case Family::Revolution: {
      const gluing::GluingAtlas atlas({cfg.C, *cfg.Cstar, cfg.c0}, 2,
                                      gluing::PhaseBranch::Smooth, cfg.tol.quad_rel);
      g.u_lo = atlas.grid_point(-2);
      g.u_hi = atlas.grid_point(2);
      g.v_hi = cfg.family == Family::Revolution ? 2.0 * kPi * *cfg.Cstar
                                                : 2.0 * kPi / std::sqrt(cfg.C);
      break;
    }
    case Family::All:
      throw Error(ErrorCode::InvalidArgument, "mesh needs a single family");
  }
  if (cfg.u_range) {
    g.u_lo = cfg.u_range->first;
    g.u_hi = cfg.u_range->second;
  }
  if (cfg.v_range) {
    g.v_lo = cfg.v_range->first;
    g.v_hi = cfg.v_range->second;
    g.wrap_v = false;
  }
  return g;
}

std::vector<OutputFile> mesh_files(const RunConfig& cfg) {
  if (cfg.family == Family::All) {
    throw Error(ErrorCode::InvalidArgument, "mesh needs a single family");
  }
  if (cfg.format != "obj" && cfg.format != "csv") {
    throw Error(ErrorCode::InvalidArgument,
                "mesh format must be obj or csv; got '" + cfg.format + "'");
  }
  validate(cfg);
  const GridSpec grid = default_mesh_grid(cfg);
  std::function<diffgeo::Vec4(double, double)> position;
  diffgeo::Ambient ambient = diffgeo::Ambient::Sphere3;
  std::shared_ptr<const gluing::GluingAtlas> atlas;
  std::shared_ptr<const s3::LocalFamily> local;
  switch (cfg.family) {
    case Family::R3: {
      const auto p = r3::FamilyParamsR3::from_C(cfg.C);
      ambient = diffgeo::Ambient::Euclidean3;
      position = [p](double u, double v) -> diffgeo::Vec4 {
        diffgeo::Vec4 x = diffgeo::Vec4::Zero();
        x.head<3>() = r3::immersion_XC(p, u, v);
        return x;
      };
      break;
    }
    case Family::S3Local:
      local = std::make_shared<const s3::LocalFamily>(s3::FamilyParamsS3::make(cfg.C),
                                                      cfg.tol.quad_rel);
      position = [local](double xi, double th) { return local->immersion(xi, th); };
      break;
    case Family::S3Complete:
    case Family::Revolution:
      atlas = std::make_shared<const gluing::GluingAtlas>(
          gluing::GluingParams{cfg.C, *cfg.Cstar, cfg.c0}, cfg.k_max,
          gluing::PhaseBranch::Smooth, cfg.tol.quad_rel);
      if (cfg.family == Family::Revolution) {
        ambient = diffgeo::Ambient::Euclidean3;
        position = [atlas](double h, double th) -> diffgeo::Vec4 {
          diffgeo::Vec4 x = diffgeo::Vec4::Zero();
          x.head<3>() = gluing::immersion_Psi(*atlas, h, th);
          return x;
        };
      } else {
        position = [atlas](double h, double th) {
          return gluing::immersion_Phi_complete(*atlas, h, th);
        };
      }
      break;
    case Family::All:
      break;
  }
  const Mesh mesh = sample_mesh(position, ambient, grid);
  if (cfg.format == "csv") return {{cfg.out_path, to_csv(raw_table(mesh))}};
  std::vector<OutputFile> out{{cfg.out_path, to_obj(mesh, cfg.pole)}};
  if (ambient == diffgeo::Ambient::Sphere3) {
    std::filesystem::path raw(cfg.out_path);
    raw.replace_extension(".raw.csv");
    out.push_back({raw.string(), to_csv(raw_table(mesh))});
  }
  return out;
}

std::string verify_text(const RunConfig& cfg, bool* pass) {
  const auto rep = run_verify(cfg);
  if (pass) *pass = rep.pass();
  return rep.to_json().dump(2) + "\n";
}

void write_all(const std::vector<OutputFile>& files) {
  for (const auto& f : files) {
    const auto parent = std::filesystem::path(f.path).parent_path();
    if (!parent.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(parent, ec);
      if (ec) throw Error(ErrorCode::Io, "cannot create " + parent.string());
    }
    write_file(f.path, f.text);
  }
}

}  // namespace bicons::io
