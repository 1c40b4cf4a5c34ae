#pragma once

#include <string>
#include <vector>

#include "trunc_hermite/precision.hpp"
#include "trunc_hermite/real.hpp"
#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite::cli {

struct CheckRecord {
  std::string name;
  std::string max_residual;  // decimal, or "error: ..." when the check threw
  std::string tolerance;
  bool pass = false;
  long runtime_ms = 0;
};

struct VerifyReport {
  std::string z;
  int n_max = 0;
  int digits = 0;
  std::vector<CheckRecord> checks;
  bool overall = false;
};

/// Runs every identity check for one z. `table` must be the moment-route
/// table covering n_max + 1; the other inputs are rebuilt as needed.
VerifyReport run_verify(const std::string& z_text, const Real& z, int n_max, const PrecisionConfig& cfg,
                        const GammaTable& table);

std::string report_to_json(const VerifyReport& report);
std::string report_to_csv(const VerifyReport& report);

}  // namespace trunc_hermite::cli
