#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "emtoro/mode_ops.hpp"
#include "emtoro/modes.hpp"

namespace emtoro {

struct VerifyOptions {
  PlasmaParams params;
  int kmax = 8;
  int draws = 5;  // parameter draws, the configured params plus random ones
  int field_grid_n = 16;
  int field_states = 8;
  std::uint64_t seed = 12345;
};

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ModeResidual {
  Vec3i k;
  double pe_distance;  // explicit-basis projector vs SVD oracle
  double p_distance;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<ModeResidual> mode_residuals;  // for the configured params
  bool all_pass = false;
};

VerifyReport verify_suite(const VerifyOptions& opt);
std::string verify_report_json(const VerifyReport& rep);

/// Prints one line per check and writes the JSON report when out_path is
/// nonempty. Returns 0 on pass, 2 on verification failure.
int execute_verify(const VerifyOptions& opt, const std::string& out_path,
                   std::ostream& log);

// Low-level residuals, exposed so faults can be injected against them.
double orthonormality_defect(const Basis14& basis);
double annihilation_defect(const ModeMatrices& mm, const Basis14& basis,
                           bool with_gauss);

}  // namespace emtoro
