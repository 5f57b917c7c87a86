#include "bicons/io/config.hpp"

#include <cmath>
#include <sstream>

#include "bicons/gluing/atlas.hpp"
#include "bicons/numerics/error.hpp"
#include "bicons/s3/family.hpp"

namespace bicons::io {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::R3:
      return "r3";
    case Family::S3Local:
      return "s3-local";
    case Family::S3Complete:
      return "s3-complete";
    case Family::Revolution:
      return "revolution";
    case Family::All:
      return "all";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::R3, Family::S3Local, Family::S3Complete,
                   Family::Revolution, Family::All}) {
    if (name == family_name(f)) return f;
  }
  throw Error(ErrorCode::InvalidArgument,
              "family must be one of r3, s3-local, s3-complete, revolution, "
              "all; got '" + std::string(name) + "'");
}

bool needs_cstar(Family f) {
  return f == Family::S3Complete || f == Family::Revolution ||
         f == Family::All;
}

void validate(const RunConfig& cfg) {
  if (!std::isfinite(cfg.C)) {
    throw Error(ErrorCode::InvalidC, "C must be finite");
  }
  if (cfg.family == Family::R3) {
    if (!(cfg.C > 0.0)) {
      throw Error(ErrorCode::InvalidC, "C must be positive for r3");
    }
  } else {
    s3::FamilyParamsS3::make(cfg.C);
  }
  if (needs_cstar(cfg.family)) {
    if (!cfg.Cstar) {
      throw Error(ErrorCode::InvalidCstar,
                  "family " + std::string(family_name(cfg.family)) +
                      " needs C*");
    }
    gluing::require_cstar(cfg.C, *cfg.Cstar);
  }
  if (!std::isfinite(cfg.c0)) {
    throw Error(ErrorCode::InvalidArgument, "c0 must be finite");
  }
  if (cfg.n_u < 2 || cfg.n_v < 2 || cfg.n_u > 100000 || cfg.n_v > 100000) {
    throw Error(ErrorCode::InvalidArgument, "grid sizes must lie in [2, 1e5]");
  }
  for (const auto* r : {&cfg.u_range, &cfg.v_range}) {
    if (*r && !((*r)->first < (*r)->second && std::isfinite((*r)->first) &&
                std::isfinite((*r)->second))) {
      throw Error(ErrorCode::InvalidArgument, "ranges must be finite lo < hi");
    }
  }
  if (cfg.samples < 2 || cfg.samples > 1000000) {
    throw Error(ErrorCode::InvalidArgument, "samples must lie in [2, 1e6]");
  }
  if (cfg.k_max < 1 || cfg.k_max > 1000) {
    throw Error(ErrorCode::InvalidArgument, "k_max must lie in [1, 1000]");
  }
  if (!(std::abs(cfg.pole.norm() - 1.0) < 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "pole must be a unit vector");
  }
  const auto& t = cfg.tol;
  if (!(t.root > 0.0 && t.quad_rel > 0.0 && t.ode > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
}

}  // namespace bicons::io
