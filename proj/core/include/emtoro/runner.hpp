#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emtoro/config.hpp"
#include "emtoro/limit_models.hpp"

namespace emtoro {

/// One diagnostics record. Quantities that do not apply to a model (for
/// instance the Ohm's-law residual before the second snapshot) are NaN.
struct DiagRow {
  double t = 0.0;
  double l2_norm = 0.0;
  double hsigma_norm = 0.0;
  double div_b = 0.0;
  double gauss_charge = 0.0;
  double energy = 0.0;
  double gol_residual = 0.0;
};

struct Trajectory {
  std::vector<DiagRow> rows;
  std::string config_hash;
  bool aborted = false;
  std::string abort_reason;
};

/// Fixed-schema CSV: t,l2_norm,hsigma_norm,div_B,gauss_charge,energy,
/// gol_residual. Formatting is deterministic (%.17g).
std::string diagnostics_csv(const Trajectory& traj);

/// Shared immutable context for one experiment: grid, workspace, system.
struct RunContext {
  RunConfig cfg;
  GridPtr grid;
  std::shared_ptr<const ModeWorkspace> ws;
  std::shared_ptr<const EmtfSystem> sys;

  explicit RunContext(RunConfig cfg);

  /// Initial data from the configured recipe. For eps > 0 the density
  /// constants are charge-law exact at that eps; eps = 0 gives the limit
  /// datum used by the slow models.
  State14 initial_state(double eps) const;
};

struct EmtfSnapshotView {
  double t;
  const State14& filtered;    // V(t)
  const State14& unfiltered;  // W(t) = S(t/eps) V(t)
};
using EmtfCallback = std::function<void(const EmtfSnapshotView&)>;
using StateCallback = std::function<void(double, const State14&)>;
using XmhdCallback = std::function<void(double, const XmhdState&)>;

Trajectory run_emtf(const RunContext& ctx, double eps,
                    const EmtfCallback& on_snapshot = {});
Trajectory run_eslm(const RunContext& ctx, const StateCallback& on_snapshot = {});
Trajectory run_xmhd(const RunContext& ctx, const XmhdCallback& on_snapshot = {});

struct PairedReport {
  std::string config_hash;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> rel_errors;  // bridged ESLM vs XMHD, relative L2
  double max_rel_error = 0.0;
  double roundtrip_slm = 0.0;   // xmhd_to_slm(slm_to_xmhd(.)) - id
  double roundtrip_xmhd = 0.0;  // slm_to_xmhd(xmhd_to_slm(.)) - id
};
PairedReport run_paired(const RunContext& ctx);

struct ConvergenceReport {
  std::string config_hash;
  double sigma = 1.0;
  double dt = 0.0;
  std::vector<double> epsilons;
  std::vector<double> errors;  // sup_t ||V_eps(t) - ref(t)||_{H^sigma}
  std::vector<double> ratios;  // errors[i] / errors[i+1]
  double fitted_slope = 0.0;   // least squares in log-log
  bool strictly_decreasing = false;
  bool single_entry = false;  // degenerate ladder: no ratios
  bool aborted = false;
  std::string abort_reason;
};
/// Runs the slow reference once, then the filtered two-fluid system per
/// ladder entry, all with one shared step size.
ConvergenceReport convergence_study(const RunContext& ctx);

// Command-line entry points. Exit codes: 0 pass, 1 run failure,
// 2 verification failure, 3 config error.
int execute_run(const RunConfig& cfg, std::ostream& log);
int execute_converge(const RunConfig& cfg, std::ostream& log);
int execute_prepare(const RunConfig& cfg, const std::string& in_path,
                    const std::string& out_path, std::ostream& log);
int execute_bridge(const RunConfig& cfg, const std::string& direction,
                   const std::string& in_path, const std::string& out_path,
                   std::ostream& log);
int execute_diag(const std::string& traj_dir, std::ostream& log);

}  // namespace emtoro
