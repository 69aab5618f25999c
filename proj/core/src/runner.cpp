#include "emtoro/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "emtoro/operators.hpp"
#include "emtoro/sampling.hpp"
#include "emtoro/snapshot.hpp"

namespace emtoro {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Schedule {
  int n_steps;
  double dt;
  int snap_stride;
};

Schedule make_schedule(double T, double dt_candidate, double snapshot_dt) {
  Schedule s{};
  if (T <= 0.0) {
    s.n_steps = 0;
    s.dt = 0.0;
    s.snap_stride = 1;
    return s;
  }
  if (!(dt_candidate > 0.0)) throw Error("schedule: dt must be positive");
  s.n_steps = std::max(1, static_cast<int>(std::ceil(T / dt_candidate - 1e-12)));
  s.dt = T / s.n_steps;
  if (snapshot_dt <= 0.0) {
    s.snap_stride = std::max(1, s.n_steps / 20);
  } else {
    s.snap_stride = std::max(
        1, static_cast<int>(std::lround(snapshot_dt / s.dt)));
  }
  return s;
}

/// Energy diagnostic for a 14-component state via the reduced variables.
double state_energy(const ModeWorkspace& ws, const State14& s) {
  const auto& p = ws.params();
  XmhdState x(s.grid());
  x.u = leray_project(
      (1.0 / (std::sqrt(p.n_bar) * (p.m_e + p.m_i))) *
      (std::sqrt(p.m_e) * s.u_e + std::sqrt(p.m_i) * s.u_i));
  x.b_star = bstar_of_b(leray_project(s.B), ws.consts().b_bar);
  return xmhd_energy(ws, x);
}

DiagRow state_diag(const ModeWorkspace& ws, const State14& s, double t,
                   double eps, double sigma) {
  DiagRow row;
  row.t = t;
  row.l2_norm = l2_norm(s);
  row.hsigma_norm = hsigma_norm(s, sigma);
  const GaussResidual gr = gauss_residual(ws, s, eps);
  row.div_b = gr.div_b;
  row.gauss_charge = gr.charge;
  row.energy = state_energy(ws, s);
  row.gol_residual = kNaN;
  return row;
}

}  // namespace

std::string diagnostics_csv(const Trajectory& traj) {
  std::string out =
      "t,l2_norm,hsigma_norm,div_B,gauss_charge,energy,gol_residual\n";
  for (const auto& r : traj.rows) {
    out += fmt(r.t) + "," + fmt(r.l2_norm) + "," + fmt(r.hsigma_norm) + "," +
           fmt(r.div_b) + "," + fmt(r.gauss_charge) + "," + fmt(r.energy) +
           "," + fmt(r.gol_residual) + "\n";
  }
  return out;
}

RunContext::RunContext(RunConfig c) : cfg(std::move(c)) {
  cfg.validate();
  grid = Grid::make(cfg.grid);
  ws = std::make_shared<const ModeWorkspace>(grid, cfg.plasma);
  sys = std::make_shared<const EmtfSystem>(ws);
}

State14 RunContext::initial_state(double eps) const {
  switch (cfg.initial_data) {
    case InitialData::prepared_random: {
      Rng rng(cfg.seed);
      VectorField3 ve = random_divfree(grid, cfg.band_kmax, rng);
      VectorField3 vi = random_divfree(grid, cfg.band_kmax, rng);
      normalize_h1_pair(ve, vi);
      ve *= cfg.amplitude;
      vi *= cfg.amplitude;
      return prepare_data_at_eps(*ws, ve, vi, cfg.density_offset, eps);
    }
    case InitialData::single_mode: {
      VectorField3 ve(grid), vi(grid);
      const int n = grid->n();
      ve[1].at(1, 0, 0) = 0.5 * cfg.amplitude;
      ve[1].at(n - 1, 0, 0) = 0.5 * cfg.amplitude;
      return prepare_data_at_eps(*ws, ve, vi, cfg.density_offset, eps);
    }
    case InitialData::irrotational: {
      VectorField3 ve(grid), vi(grid);
      ve[0].coeffs()[0] = cfg.amplitude;
      ve[1].coeffs()[0] = 0.5 * cfg.amplitude;
      ve[2].coeffs()[0] = -0.25 * cfg.amplitude;
      for (int c = 0; c < 3; ++c) vi[c].coeffs()[0] = ve[c].coeffs()[0];
      return prepare_data_at_eps(*ws, ve, vi, cfg.density_offset, eps);
    }
    case InitialData::from_file: {
      const Snapshot snap = load_snapshot(cfg.init_file);
      State14 s = snap.to_state(grid);
      if (s.basis == Basis::original) s = symmetrize(s, cfg.plasma);
      return dealias(s);
    }
  }
  throw Error("unreachable initial_data");
}

Trajectory run_emtf(const RunContext& ctx, double eps,
                    const EmtfCallback& on_snapshot) {
  if (!(eps > 0.0)) throw Error("run_emtf: eps must be > 0");
  Trajectory traj;
  traj.config_hash = ctx.cfg.hash();
  const double sigma = ctx.cfg.sobolev_sigma;

  State14 u0 = ctx.initial_state(eps);
  const double dt_candidate =
      ctx.cfg.dt > 0.0
          ? ctx.cfg.dt
          : std::min(ctx.cfg.cfl * ctx.sys->advective_dt(u0),
                     ctx.sys->fast_scale_dt(eps));
  const Schedule sched =
      make_schedule(ctx.cfg.T, dt_candidate, ctx.cfg.snapshot_dt);

  EmtfSystem::RunState rs{eps, 0.0, sched.dt, std::move(u0)};
  State14 unfiltered = rs.v;
  traj.rows.push_back(state_diag(*ctx.ws, unfiltered, 0.0, eps, sigma));
  if (on_snapshot) on_snapshot(EmtfSnapshotView{0.0, rs.v, unfiltered});

  State14 prev_unfiltered = unfiltered;
  double prev_t = 0.0;
  try {
    for (int step = 1; step <= sched.n_steps; ++step) {
      rs = ctx.sys->step(rs);
      if (step % sched.snap_stride == 0 || step == sched.n_steps) {
        unfiltered = ctx.sys->unfilter(rs);
        DiagRow row = state_diag(*ctx.ws, unfiltered, rs.t, eps, sigma);
        row.gol_residual =
            gol_residual(*ctx.ws, unfiltered, prev_unfiltered,
                         rs.t - prev_t, eps);
        traj.rows.push_back(row);
        if (on_snapshot) on_snapshot(EmtfSnapshotView{rs.t, rs.v, unfiltered});
        prev_unfiltered = unfiltered;
        prev_t = rs.t;
      }
    }
  } catch (const Error& e) {
    traj.aborted = true;
    traj.abort_reason = e.what();
  }
  return traj;
}

Trajectory run_eslm(const RunContext& ctx, const StateCallback& on_snapshot) {
  Trajectory traj;
  traj.config_hash = ctx.cfg.hash();
  const double sigma = ctx.cfg.sobolev_sigma;

  State14 s = ctx.initial_state(0.0);
  const double dt_candidate = ctx.cfg.dt > 0.0
                                  ? ctx.cfg.dt
                                  : ctx.cfg.cfl * ctx.sys->advective_dt(s);
  const Schedule sched =
      make_schedule(ctx.cfg.T, dt_candidate, ctx.cfg.snapshot_dt);

  traj.rows.push_back(state_diag(*ctx.ws, s, 0.0, 0.0, sigma));
  if (on_snapshot) on_snapshot(0.0, s);

  const auto rhs = [&](double, const State14& y) {
    return eslm_rhs(*ctx.ws, y);
  };
  double t = 0.0;
  try {
    for (int step = 1; step <= sched.n_steps; ++step) {
      s = rk4_step(rhs, t, s, sched.dt);
      t = sched.dt * step;
      if (!state_finite(s)) throw InstabilityError("non-finite state");
      if (step % sched.snap_stride == 0 || step == sched.n_steps) {
        traj.rows.push_back(state_diag(*ctx.ws, s, t, 0.0, sigma));
        if (on_snapshot) on_snapshot(t, s);
      }
    }
  } catch (const Error& e) {
    traj.aborted = true;
    traj.abort_reason = e.what();
  }
  return traj;
}

namespace {

double xmhd_advective_dt(const RunContext& ctx, const XmhdState& s) {
  const double dx = 2.0 * std::numbers::pi / ctx.grid->n();
  const PhysVector pu = to_phys(s.u);
  double vmax = 0.0;
  for (std::size_t m = 0; m < pu.x.size(); ++m) {
    vmax = std::max(vmax, std::sqrt(pu.x[m] * pu.x[m] + pu.y[m] * pu.y[m] +
                                    pu.z[m] * pu.z[m]));
  }
  const auto& d = ctx.ws->consts();
  return 0.5 * dx / (vmax + std::max(d.abar_e, d.abar_i));
}

DiagRow xmhd_diag(const ModeWorkspace& ws, const XmhdState& s, double t) {
  DiagRow row;
  row.t = t;
  const double nu = l2_norm(s.u);
  const double nb = l2_norm(s.b_star);
  row.l2_norm = std::sqrt(nu * nu + nb * nb);
  row.hsigma_norm = kNaN;
  row.div_b = l2_norm(div(s.b_star));
  row.gauss_charge = kNaN;
  row.energy = xmhd_energy(ws, s);
  row.gol_residual = kNaN;
  return row;
}

}  // namespace

Trajectory run_xmhd(const RunContext& ctx, const XmhdCallback& on_snapshot) {
  Trajectory traj;
  traj.config_hash = ctx.cfg.hash();

  XmhdState s = slm_to_xmhd(*ctx.ws, ctx.initial_state(0.0));
  const double dt_candidate = ctx.cfg.dt > 0.0
                                  ? ctx.cfg.dt
                                  : ctx.cfg.cfl * xmhd_advective_dt(ctx, s);
  const Schedule sched =
      make_schedule(ctx.cfg.T, dt_candidate, ctx.cfg.snapshot_dt);

  traj.rows.push_back(xmhd_diag(*ctx.ws, s, 0.0));
  if (on_snapshot) on_snapshot(0.0, s);

  const auto rhs = [&](double, const XmhdState& y) {
    return xmhd_rhs(*ctx.ws, y);
  };
  double t = 0.0;
  try {
    for (int step = 1; step <= sched.n_steps; ++step) {
      s = rk4_step(rhs, t, s, sched.dt);
      t = sched.dt * step;
      if (!state_finite_xmhd(s)) throw InstabilityError("non-finite state");
      if (step % sched.snap_stride == 0 || step == sched.n_steps) {
        traj.rows.push_back(xmhd_diag(*ctx.ws, s, t));
        if (on_snapshot) on_snapshot(t, s);
      }
    }
  } catch (const Error& e) {
    traj.aborted = true;
    traj.abort_reason = e.what();
  }
  return traj;
}

PairedReport run_paired(const RunContext& ctx) {
  PairedReport rep;
  rep.config_hash = ctx.cfg.hash();

  const State14 prepared = ctx.initial_state(0.0);
  XmhdState x = slm_to_xmhd(*ctx.ws, prepared);
  State14 s = prepared;

  {
    const State14 back = xmhd_to_slm(*ctx.ws, x, ctx.cfg.density_offset);
    rep.roundtrip_slm = l2_norm(back - prepared) /
                        std::max(l2_norm(prepared), 1e-300);
    const XmhdState xtrip = slm_to_xmhd(*ctx.ws, back);
    const double nx = std::hypot(l2_norm(x.u), l2_norm(x.b_star));
    rep.roundtrip_xmhd =
        std::hypot(l2_norm(xtrip.u - x.u), l2_norm(xtrip.b_star - x.b_star)) /
        std::max(nx, 1e-300);
  }

  const double dt_candidate =
      ctx.cfg.dt > 0.0 ? ctx.cfg.dt
                       : std::min(ctx.cfg.cfl * ctx.sys->advective_dt(s),
                                  ctx.cfg.cfl * xmhd_advective_dt(ctx, x));
  const Schedule sched =
      make_schedule(ctx.cfg.T, dt_candidate, ctx.cfg.snapshot_dt);
  rep.dt = sched.dt;

  const auto record = [&](double t) {
    const XmhdState bridged = slm_to_xmhd(*ctx.ws, s);
    const double nx =
        std::max(std::hypot(l2_norm(x.u), l2_norm(x.b_star)), 1e-300);
    const double err = std::hypot(l2_norm(bridged.u - x.u),
                                  l2_norm(bridged.b_star - x.b_star)) /
                       nx;
    rep.times.push_back(t);
    rep.rel_errors.push_back(err);
    rep.max_rel_error = std::max(rep.max_rel_error, err);
  };

  record(0.0);
  const auto rhs_s = [&](double, const State14& y) {
    return eslm_rhs(*ctx.ws, y);
  };
  const auto rhs_x = [&](double, const XmhdState& y) {
    return xmhd_rhs(*ctx.ws, y);
  };
  double t = 0.0;
  for (int step = 1; step <= sched.n_steps; ++step) {
    s = rk4_step(rhs_s, t, s, sched.dt);
    x = rk4_step(rhs_x, t, x, sched.dt);
    t = sched.dt * step;
    if (step % sched.snap_stride == 0 || step == sched.n_steps) record(t);
  }
  return rep;
}

ConvergenceReport convergence_study(const RunContext& ctx) {
  ConvergenceReport rep;
  rep.config_hash = ctx.cfg.hash();
  rep.sigma = ctx.cfg.sobolev_sigma;
  rep.epsilons = ctx.cfg.epsilon_ladder;
  rep.single_entry = rep.epsilons.size() < 2;

  // One shared step: the advective rule and the fast-scale rule of the
  // smallest ladder entry, so the comparison is integration-consistent.
  const State14 probe = ctx.initial_state(0.0);
  double dt_candidate = ctx.cfg.dt > 0.0
                            ? ctx.cfg.dt
                            : ctx.cfg.cfl * ctx.sys->advective_dt(probe);
  if (ctx.cfg.dt <= 0.0) {
    for (double eps : rep.epsilons) {
      dt_candidate = std::min(dt_candidate, ctx.sys->fast_scale_dt(eps));
    }
  }
  rep.dt = dt_candidate;

  RunConfig ref_cfg = ctx.cfg;
  ref_cfg.dt = dt_candidate;

  // Slow reference, computed once and kept at snapshot cadence.
  std::vector<State14> refs;
  std::vector<double> ref_times;
  {
    RunContext ref_ctx(ref_cfg);
    Trajectory t = run_eslm(ref_ctx, [&](double tt, const State14& s) {
      ref_times.push_back(tt);
      refs.push_back(s);
    });
    if (t.aborted) {
      rep.aborted = true;
      rep.abort_reason = "reference run: " + t.abort_reason;
      return rep;
    }
  }

  RunContext run_ctx(ref_cfg);
  for (double eps : rep.epsilons) {
    double err = 0.0;
    std::size_t idx = 0;
    Trajectory t = run_emtf(run_ctx, eps, [&](const EmtfSnapshotView& view) {
      if (idx < refs.size() &&
          std::abs(ref_times[idx] - view.t) < 1e-9 * (1.0 + view.t)) {
        err = std::max(err, hsigma_norm(view.filtered - refs[idx],
                                        ctx.cfg.sobolev_sigma));
        ++idx;
      }
    });
    if (t.aborted) {
      rep.aborted = true;
      rep.abort_reason =
          "eps = " + std::to_string(eps) + ": " + t.abort_reason;
      return rep;
    }
    rep.errors.push_back(err);
  }

  rep.strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i) {
    rep.ratios.push_back(rep.errors[i] / rep.errors[i + 1]);
    if (!(rep.errors[i + 1] < rep.errors[i])) rep.strictly_decreasing = false;
  }

  // Least-squares slope of log(err) against log(eps).
  if (rep.errors.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto n = static_cast<double>(rep.errors.size());
    for (std::size_t i = 0; i < rep.errors.size(); ++i) {
      const double x = std::log(rep.epsilons[i]);
      const double y = std::log(std::max(rep.errors[i], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Command-line executors.

namespace {

namespace fs = std::filesystem;

fs::path resolve_output_dir(const RunConfig& cfg) {
  fs::path root(output_root());
  return root / cfg.output_dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
}

nlohmann::json trajectory_json(const Trajectory& t) {
  nlohmann::json j;
  j["config_hash"] = t.config_hash;
  j["aborted"] = t.aborted;
  j["abort_reason"] = t.abort_reason;
  j["rows"] = t.rows.size();
  if (!t.rows.empty()) {
    j["final_time"] = t.rows.back().t;
  }
  return j;
}

std::string eps_dir_name(double eps) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "emtf_eps_%g", eps);
  return buf;
}

}  // namespace

int execute_run(const RunConfig& cfg, std::ostream& log) {
  const RunContext ctx(cfg);
  const fs::path outdir = resolve_output_dir(cfg);
  fs::create_directories(outdir);

  nlohmann::json report;
  report["config"] = nlohmann::json::parse(cfg.canonical_json());
  report["config_hash"] = cfg.hash();
  bool failed = false;

  const auto emit = [&](const fs::path& dir, const Trajectory& traj) {
    fs::create_directories(dir);
    write_text(dir / "diagnostics.csv", diagnostics_csv(traj));
    if (traj.aborted) {
      failed = true;
      log << "run aborted: " << traj.abort_reason << "\n";
    }
  };

  switch (cfg.model) {
    case Model::emtf: {
      for (double eps : cfg.epsilon_ladder) {
        const fs::path dir = outdir / eps_dir_name(eps);
        fs::create_directories(dir);
        int snap_id = 0;
        EmtfCallback cb;
        if (cfg.write_snapshots) {
          cb = [&](const EmtfSnapshotView& view) {
            char name[32];
            std::snprintf(name, sizeof name, "snap_%06d.snap", snap_id++);
            save_snapshot(view.unfiltered, (dir / name).string(), cfg.hash(),
                          view.t);
          };
        }
        Trajectory traj = run_emtf(ctx, eps, cb);
        emit(dir, traj);
        report["runs"][eps_dir_name(eps)] = trajectory_json(traj);
      }
      break;
    }
    case Model::eslm: {
      const fs::path dir = outdir / "eslm";
      fs::create_directories(dir);
      int snap_id = 0;
      StateCallback cb;
      if (cfg.write_snapshots) {
        cb = [&](double t, const State14& s) {
          char name[32];
          std::snprintf(name, sizeof name, "snap_%06d.snap", snap_id++);
          save_snapshot(s, (dir / name).string(), cfg.hash(), t);
        };
      }
      Trajectory traj = run_eslm(ctx, cb);
      emit(dir, traj);
      report["runs"]["eslm"] = trajectory_json(traj);
      break;
    }
    case Model::xmhd: {
      const fs::path dir = outdir / "xmhd";
      Trajectory traj = run_xmhd(ctx);
      emit(dir, traj);
      report["runs"]["xmhd"] = trajectory_json(traj);
      break;
    }
    case Model::paired: {
      const PairedReport pr = run_paired(ctx);
      report["paired"]["dt"] = pr.dt;
      report["paired"]["max_rel_error"] = pr.max_rel_error;
      report["paired"]["roundtrip_slm"] = pr.roundtrip_slm;
      report["paired"]["roundtrip_xmhd"] = pr.roundtrip_xmhd;
      report["paired"]["times"] = pr.times;
      report["paired"]["rel_errors"] = pr.rel_errors;
      log << "paired max relative error " << pr.max_rel_error << "\n";
      break;
    }
  }

  write_text(outdir / "run_report.json", report.dump(2) + "\n");
  log << "outputs in " << outdir.string() << "\n";
  return failed ? 1 : 0;
}

int execute_converge(const RunConfig& cfg, std::ostream& log) {
  const RunContext ctx(cfg);
  const ConvergenceReport rep = convergence_study(ctx);

  const fs::path outdir = resolve_output_dir(cfg);
  fs::create_directories(outdir);

  nlohmann::json j;
  j["config_hash"] = rep.config_hash;
  j["sigma"] = rep.sigma;
  j["dt"] = rep.dt;
  j["epsilons"] = rep.epsilons;
  j["errors"] = rep.errors;
  j["ratios"] = rep.ratios;
  j["fitted_slope"] = rep.fitted_slope;
  j["strictly_decreasing"] = rep.strictly_decreasing;
  j["single_entry"] = rep.single_entry;
  j["aborted"] = rep.aborted;
  j["abort_reason"] = rep.abort_reason;
  write_text(outdir / "convergence_report.json", j.dump(2) + "\n");

  if (rep.aborted) {
    log << "convergence study aborted: " << rep.abort_reason << "\n";
    return 1;
  }
  log << "eps        sup-error (H^" << rep.sigma << ")    ratio\n";
  for (std::size_t i = 0; i < rep.errors.size(); ++i) {
    log << fmt(rep.epsilons[i]) << "  " << fmt(rep.errors[i]);
    if (i > 0) log << "  " << fmt(rep.errors[i - 1] / rep.errors[i]);
    log << "\n";
  }
  if (rep.single_entry) {
    log << "warning: single-entry ladder, no ratios\n";
  }
  log << "fitted slope " << rep.fitted_slope << "\n";
  return 0;
}

int execute_prepare(const RunConfig& cfg, const std::string& in_path,
                    const std::string& out_path, std::ostream& log) {
  const RunContext ctx(cfg);
  const Snapshot snap = load_snapshot(in_path);
  State14 raw = snap.to_state(ctx.grid);
  if (raw.basis == Basis::symmetrized) {
    raw = desymmetrize(raw, cfg.plasma);
  }
  const State14 prepared =
      prepare_data(*ctx.ws, raw.u_e, raw.u_i, cfg.density_offset);
  save_snapshot(prepared, out_path, cfg.hash(), snap.time);
  log << "prepared state written to " << out_path << "\n";
  return 0;
}

namespace {

Snapshot snapshot_from_xmhd(const XmhdState& s, const std::string& params_hash,
                            double time) {
  Snapshot snap;
  snap.n = s.u.grid()->n();
  snap.basis = Basis::symmetrized;
  snap.components = {"u_x", "u_y", "u_z", "B_star_x", "B_star_y", "B_star_z"};
  snap.params_hash = params_hash;
  snap.time = time;
  for (int c = 0; c < 3; ++c) snap.payload.push_back(s.u[c].to_physical());
  for (int c = 0; c < 3; ++c) {
    snap.payload.push_back(s.b_star[c].to_physical());
  }
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& a : snap.payload) {
    h = fnv1a(a.data(), a.size() * sizeof(double), h);
  }
  snap.checksum = h;
  return snap;
}

XmhdState xmhd_from_snapshot(const Snapshot& snap, const GridPtr& grid) {
  if (snap.payload.size() != 6) {
    throw IoError("expected a 6-component reduced snapshot");
  }
  if (snap.n != grid->n()) throw IoError("snapshot grid mismatch");
  XmhdState s(grid);
  for (int c = 0; c < 3; ++c) {
    s.u[c] = ScalarField::from_physical(grid, snap.payload[c]);
    s.b_star[c] = ScalarField::from_physical(
        grid, snap.payload[static_cast<std::size_t>(3 + c)]);
  }
  return s;
}

}  // namespace

int execute_bridge(const RunConfig& cfg, const std::string& direction,
                   const std::string& in_path, const std::string& out_path,
                   std::ostream& log) {
  const RunContext ctx(cfg);
  const Snapshot snap = Snapshot::read(in_path);
  if (direction == "slm2xmhd") {
    const State14 s = snap.to_state(ctx.grid);
    const XmhdState x = slm_to_xmhd(*ctx.ws, s);
    snapshot_from_xmhd(x, cfg.hash(), snap.time).write(out_path);
  } else if (direction == "xmhd2slm") {
    const XmhdState x = xmhd_from_snapshot(snap, ctx.grid);
    const State14 s = xmhd_to_slm(*ctx.ws, x, cfg.density_offset);
    save_snapshot(s, out_path, cfg.hash(), snap.time);
  } else {
    throw ConfigError("bridge direction must be slm2xmhd or xmhd2slm");
  }
  log << "bridged state written to " << out_path << "\n";
  return 0;
}

int execute_diag(const std::string& traj_dir, std::ostream& log) {
  const fs::path csv = fs::path(traj_dir) / "diagnostics.csv";
  std::ifstream in(csv);
  if (!in) {
    log << "no diagnostics.csv under " << traj_dir << "\n";
    return 1;
  }
  std::string line, header, last;
  std::getline(in, header);
  std::size_t rows = 0;
  double max_div_b = 0.0, max_charge = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    last = line;
    ++rows;
    std::stringstream ss(line);
    std::string tok;
    int col = 0;
    while (std::getline(ss, tok, ',')) {
      if (col == 3) max_div_b = std::max(max_div_b, std::atof(tok.c_str()));
      if (col == 4) max_charge = std::max(max_charge, std::atof(tok.c_str()));
      ++col;
    }
  }
  log << "rows: " << rows << "\n";
  log << "columns: " << header << "\n";
  log << "last: " << last << "\n";
  log << "max div_B: " << fmt(max_div_b)
      << "  max gauss_charge: " << fmt(max_charge) << "\n";
  return 0;
}

}  // namespace emtoro
