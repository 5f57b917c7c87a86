#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bicons/io/config.hpp"

namespace bicons::io {

struct Check {
  std::string name;
  double value;
  double bound;
  bool upper;  // pass iff value <= bound; otherwise value >= bound
  bool pass;
};

class VerificationReport {
 public:
  void expect_below(const std::string& name, double value, double bound);
  void expect_above(const std::string& name, double value, double bound);
  void expect_true(const std::string& name, bool ok);
  /// Recorded but not judged.
  void note(const std::string& name, double value);

  /// Appends the checks and notes of `other`, names prefixed by "prefix.".
  void merge(const std::string& prefix, const VerificationReport& other);

  bool pass() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check& find(const std::string& name) const;
  const std::vector<std::pair<std::string, double>>& notes() const noexcept {
    return notes_;
  }

  nlohmann::ordered_json environment;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, double>> notes_;
};

VerificationReport verify_r3(const RunConfig& cfg);
VerificationReport verify_s3_local(const RunConfig& cfg);
VerificationReport verify_s3_complete(const RunConfig& cfg);
VerificationReport verify_revolution(const RunConfig& cfg);

/// Validates cfg, runs the suite of its family (every suite for All) and
/// fills the environment echo.
VerificationReport run_verify(const RunConfig& cfg);

}  // namespace bicons::io
