#pragma once

#include <string>
#include <vector>

#include "bicons/io/config.hpp"
#include "bicons/io/mesh.hpp"

namespace bicons::io {

struct OutputFile {
  std::string path;
  std::string text;
};

/// "key = value" lines: roots, k01, k02, C1, zeta limits, the C* interval and
/// h_{0,+-1} (at the midpoint of the C* interval when no C* is given).
std::string params_summary(double C, std::optional<double> Cstar,
                           const numerics::Tolerances& tol = {});

/// Figure data fig1..fig6 as CSV files in the directory cfg.out_path.
/// C* defaults to 1 when absent.
std::vector<OutputFile> curves_files(const RunConfig& cfg);

/// Default parameter grid of the family's mesh.
GridSpec default_mesh_grid(const RunConfig& cfg);

/// OBJ at cfg.out_path, plus "<stem>.raw.csv" for sphere surfaces. With
/// format "csv" only the raw table is written, at cfg.out_path.
std::vector<OutputFile> mesh_files(const RunConfig& cfg);

/// Pretty-printed verify report, newline terminated.
std::string verify_text(const RunConfig& cfg, bool* pass = nullptr);

/// Writes each file in turn; callers build the whole list first.
void write_all(const std::vector<OutputFile>& files);

}  // namespace bicons::io
