#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bicons/diffgeo/surface.hpp"
#include "bicons/numerics/tolerances.hpp"

namespace bicons::io {

enum class Family { R3, S3Local, S3Complete, Revolution, All };

std::string_view family_name(Family f);
/// r3 | s3-local | s3-complete | revolution | all; InvalidArgument otherwise.
Family parse_family(std::string_view name);

using Range = std::pair<double, double>;

struct RunConfig {
  Family family = Family::R3;
  double C = 1.0;
  std::optional<double> Cstar;
  double c0 = 0.0;
  int n_u = 32;
  int n_v = 32;
  std::optional<Range> u_range;
  std::optional<Range> v_range;
  std::string out_path;
  std::string format;
  diffgeo::Vec4 pole{0.0, 0.0, 0.0, -1.0};
  int k_max = 11;
  int samples = 512;  // points per figure curve
  numerics::Tolerances tol;
};

/// Admissibility of the parameters for the configured family, before any
/// computation: InvalidC, InvalidCstar or InvalidArgument.
void validate(const RunConfig& cfg);

bool needs_cstar(Family f);

}  // namespace bicons::io
