#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bicons/io/commands.hpp"
#include "bicons/numerics/error.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2 };

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

int fail(std::string_view code, const std::string& message, int exit_code) {
  std::cerr << "error: code=" << code << " message=\"" << escape(message) << "\"\n";
  return exit_code;
}

bool is_usage(bicons::ErrorCode c) {
  using bicons::ErrorCode;
  return c == ErrorCode::InvalidC || c == ErrorCode::InvalidCstar ||
         c == ErrorCode::InvalidArgument;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bicons;

  CLI::App app{"Biconservative surfaces: parameters, figure data, meshes and checks"};
  app.set_config("--config", "", "TOML/INI file with option values; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  std::string family = "r3";
  double C = 1.0;
  std::optional<double> cstar;
  double c0 = 0.0;
  int n_u = 32, n_v = 32;
  std::vector<double> u_range, v_range, pole;
  std::string out, format = "obj";
  int k_max = 11, samples = 512;

  app.add_option("--family", family, "r3 | s3-local | s3-complete | revolution | all")
      ->capture_default_str();
  app.add_option("-C,--C", C, "metric constant C")->capture_default_str();
  app.add_option("--cstar,--Cstar", cstar, "constant C* of the global family");
  app.add_option("--c0", c0, "phase on strip 0")->capture_default_str();
  app.add_option("--nu", n_u, "grid points along the first parameter")->capture_default_str();
  app.add_option("--nv", n_v, "grid points along the second parameter")->capture_default_str();
  app.add_option("--u-range", u_range, "first parameter range: lo hi")->expected(2);
  app.add_option("--v-range", v_range, "second parameter range: lo hi")->expected(2);
  app.add_option("--pole", pole, "projection pole in R^4 (4 numbers)")->expected(4);
  app.add_option("-o,--out", out, "output path (directory for curves)");
  app.add_option("--format", format, "obj | csv for mesh")->capture_default_str();
  app.add_option("--k-max", k_max, "largest strip index tabulated")->capture_default_str();
  app.add_option("--samples", samples, "points per figure curve")->capture_default_str();

  auto* params = app.add_subcommand("params", "print roots, limits and the C* interval");
  auto* curves = app.add_subcommand("curves", "write figure data CSV files into --out");
  auto* mesh = app.add_subcommand("mesh", "write an OBJ mesh (and raw CSV) to --out");
  auto* verify = app.add_subcommand("verify", "run the checks, JSON to --out or stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("Usage", e.what(), kUsage);
  }

  try {
    io::RunConfig cfg;
    cfg.family = io::parse_family(family);
    cfg.C = C;
    cfg.Cstar = cstar;
    cfg.c0 = c0;
    cfg.n_u = n_u;
    cfg.n_v = n_v;
    if (!u_range.empty()) cfg.u_range = io::Range{u_range[0], u_range[1]};
    if (!v_range.empty()) cfg.v_range = io::Range{v_range[0], v_range[1]};
    if (!pole.empty()) cfg.pole = diffgeo::Vec4(pole[0], pole[1], pole[2], pole[3]);
    cfg.out_path = out;
    cfg.format = format;
    cfg.k_max = k_max;
    cfg.samples = samples;
    cfg.tol = numerics::Tolerances::from_env();

    if (params->parsed()) {
      std::cout << io::params_summary(C, cstar, cfg.tol);
      return kPass;
    }
    if (curves->parsed()) {
      if (out.empty()) return fail("Usage", "curves needs --out DIR", kUsage);
      io::write_all(io::curves_files(cfg));
      return kPass;
    }
    if (mesh->parsed()) {
      if (out.empty()) return fail("Usage", "mesh needs --out FILE", kUsage);
      io::write_all(io::mesh_files(cfg));
      return kPass;
    }
    if (verify->parsed()) {
      bool ok = false;
      const std::string text = io::verify_text(cfg, &ok);
      if (out.empty()) {
        std::cout << text;
      } else {
        io::write_all({{out, text}});
      }
      if (!ok) std::cerr << "verify: some checks failed\n";
      return ok ? kPass : kCheckFailure;
    }
  } catch (const Error& e) {
    return fail(to_string(e.code()), e.what(), is_usage(e.code()) ? kUsage : kCheckFailure);
  } catch (const std::exception& e) {
    return fail("Internal", e.what(), kCheckFailure);
  }
  return kUsage;
}
