#include "emtoro/emtf_system.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "emtoro/operators.hpp"

namespace emtoro {

bool state_finite(const State14& s) {
  const auto finite = [](const ScalarField& f) {
    for (const auto& c : f.coeffs()) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
  };
  if (!finite(s.rho_e) || !finite(s.rho_i)) return false;
  for (int i = 0; i < 3; ++i) {
    if (!finite(s.u_e[i]) || !finite(s.u_i[i]) || !finite(s.E[i]) ||
        !finite(s.B[i])) {
      return false;
    }
  }
  return true;
}

EmtfSystem::EmtfSystem(std::shared_ptr<const ModeWorkspace> ws)
    : ws_(std::move(ws)) {}

State14 EmtfSystem::rhs_nonstiff(double eps, const State14& w) const {
  check_basis(w, Basis::symmetrized, "rhs_nonstiff");
  if (eps < 0.0) throw Error("rhs_nonstiff: eps must be >= 0");
  const auto& p = ws_->params();
  const GridPtr& grid = w.grid();
  const double se = 1.0 / std::sqrt(p.n_bar * p.m_e);
  const double si = 1.0 / std::sqrt(p.n_bar * p.m_i);

  const PhysScalar re = to_phys(w.rho_e);
  const PhysScalar ri = to_phys(w.rho_i);
  const PhysVector ue = to_phys(w.u_e);
  const PhysVector ui = to_phys(w.u_i);
  const PhysVector b = to_phys(w.B);

  const PhysVector grad_re = to_phys(grad(w.rho_e));
  const PhysVector grad_ri = to_phys(grad(w.rho_i));
  const PhysScalar div_ue = to_phys(div(w.u_e));
  const PhysScalar div_ui = to_phys(div(w.u_i));
  std::array<PhysVector, 3> jac_ue, jac_ui;  // jac[c] = grad of component c
  for (int c = 0; c < 3; ++c) {
    jac_ue[static_cast<std::size_t>(c)] = to_phys(grad(w.u_e[c]));
    jac_ui[static_cast<std::size_t>(c)] = to_phys(grad(w.u_i[c]));
  }

  const std::size_t npts = re.size();
  PhysScalar rae(npts), rai(npts), rge(npts), rgi(npts);
  for (std::size_t m = 0; m < npts; ++m) {
    const double qe = re[m] * se;
    const double qi = ri[m] * si;
    rae[m] = remainder_a(p.pressure_e, p.m_e, p.n_bar, eps, qe);
    rai[m] = remainder_a(p.pressure_i, p.m_i, p.n_bar, eps, qi);
    rge[m] = remainder_g_inv(p.pressure_e, p.m_e, p.n_bar, eps, qe);
    rgi[m] = remainder_g_inv(p.pressure_i, p.m_i, p.n_bar, eps, qi);
  }

  const PhysVector uexb = cross(ue, b);
  const PhysVector uixb = cross(ui, b);

  PhysScalar drho_e(npts), drho_i(npts);
  PhysVector due{PhysScalar(npts), PhysScalar(npts), PhysScalar(npts)};
  PhysVector dui = due, de = due;
  for (std::size_t m = 0; m < npts; ++m) {
    const double vex = ue.x[m] * se, vey = ue.y[m] * se, vez = ue.z[m] * se;
    const double vix = ui.x[m] * si, viy = ui.y[m] * si, viz = ui.z[m] * si;

    drho_e[m] = -(vex * grad_re.x[m] + vey * grad_re.y[m] +
                  vez * grad_re.z[m]) -
                rae[m] * div_ue[m];
    drho_i[m] = -(vix * grad_ri.x[m] + viy * grad_ri.y[m] +
                  viz * grad_ri.z[m]) -
                rai[m] * div_ui[m];

    const auto adv = [&](const PhysVector& jc, double ax, double ay,
                         double az) {
      return ax * jc.x[m] + ay * jc.y[m] + az * jc.z[m];
    };
    due.x[m] = -adv(jac_ue[0], vex, vey, vez) - rae[m] * grad_re.x[m] -
               uexb.x[m] / p.m_e;
    due.y[m] = -adv(jac_ue[1], vex, vey, vez) - rae[m] * grad_re.y[m] -
               uexb.y[m] / p.m_e;
    due.z[m] = -adv(jac_ue[2], vex, vey, vez) - rae[m] * grad_re.z[m] -
               uexb.z[m] / p.m_e;
    dui.x[m] = -adv(jac_ui[0], vix, viy, viz) - rai[m] * grad_ri.x[m] +
               uixb.x[m] / p.m_i;
    dui.y[m] = -adv(jac_ui[1], vix, viy, viz) - rai[m] * grad_ri.y[m] +
               uixb.y[m] / p.m_i;
    dui.z[m] = -adv(jac_ui[2], vix, viy, viz) - rai[m] * grad_ri.z[m] +
               uixb.z[m] / p.m_i;

    de.x[m] = rge[m] * ue.x[m] * se - rgi[m] * ui.x[m] * si;
    de.y[m] = rge[m] * ue.y[m] * se - rgi[m] * ui.y[m] * si;
    de.z[m] = rge[m] * ue.z[m] * se - rgi[m] * ui.z[m] * si;
  }

  State14 out(grid, Basis::symmetrized);
  out.rho_e = to_spec(grid, drho_e);
  out.rho_i = to_spec(grid, drho_i);
  out.u_e = to_spec(grid, due);
  out.u_i = to_spec(grid, dui);
  out.E = to_spec(grid, de);
  // F_B = 0.
  return out;
}

State14 EmtfSystem::filtered_rhs(double t, double eps, const State14& v) const {
  if (!(eps > 0.0)) throw Error("filtered_rhs: eps must be > 0");
  const double tau = t / eps;
  if (tau == 0.0) return rhs_nonstiff(eps, v);
  const State14 w = ws_->apply_group(tau, v);
  return ws_->apply_group(-tau, rhs_nonstiff(eps, w));
}

EmtfSystem::RunState EmtfSystem::step(const RunState& rs) const {
  RunState out = rs;
  out.v = rk4_step(
      [&](double t, const State14& y) { return filtered_rhs(t, rs.eps, y); },
      rs.t, rs.v, rs.dt);
  out.t = rs.t + rs.dt;
  if (!state_finite(out.v)) {
    throw InstabilityError("non-finite state at t = " + std::to_string(out.t));
  }
  return out;
}

State14 EmtfSystem::unfilter(const RunState& rs) const {
  return ws_->apply_group(rs.t / rs.eps, rs.v);
}

GaussResidual gauss_residual(const ModeWorkspace& ws, const State14& w,
                             double eps) {
  check_basis(w, Basis::symmetrized, "gauss_residual");
  const auto& p = ws.params();
  GaussResidual r{};
  r.div_b = l2_norm(div(w.B));

  const double se = 1.0 / std::sqrt(p.n_bar * p.m_e);
  const double si = 1.0 / std::sqrt(p.n_bar * p.m_i);
  const PhysScalar re = to_phys(w.rho_e);
  const PhysScalar ri = to_phys(w.rho_i);
  PhysScalar charge(re.size());
  for (std::size_t m = 0; m < re.size(); ++m) {
    charge[m] =
        remainder_g_inv(p.pressure_e, p.m_e, p.n_bar, eps, re[m] * se) -
        remainder_g_inv(p.pressure_i, p.m_i, p.n_bar, eps, ri[m] * si);
  }
  const ScalarField residual = div(w.E) + to_spec(w.grid(), charge);
  r.charge = l2_norm(residual);
  return r;
}

double EmtfSystem::advective_dt(const State14& w) const {
  const auto& p = ws_->params();
  const auto& d = ws_->consts();
  const double dx = 2.0 * std::numbers::pi / w.grid()->n();
  const PhysVector ue = to_phys(w.u_e);
  const PhysVector ui = to_phys(w.u_i);
  double vmax = 0.0;
  const double se = 1.0 / std::sqrt(p.n_bar * p.m_e);
  const double si = 1.0 / std::sqrt(p.n_bar * p.m_i);
  for (std::size_t m = 0; m < ue.x.size(); ++m) {
    const double ve = std::sqrt(ue.x[m] * ue.x[m] + ue.y[m] * ue.y[m] +
                                ue.z[m] * ue.z[m]) *
                      se;
    const double vi = std::sqrt(ui.x[m] * ui.x[m] + ui.y[m] * ui.y[m] +
                                ui.z[m] * ui.z[m]) *
                      si;
    vmax = std::max(vmax, std::max(ve, vi));
  }
  return 0.5 * dx / (vmax + std::max(d.abar_e, d.abar_i));
}

double EmtfSystem::fast_scale_dt(double eps) const {
  const double wmax = ws_->max_band_frequency();
  if (wmax == 0.0) return std::numeric_limits<double>::infinity();
  return 0.5 * std::numbers::pi * eps / wmax;
}

}  // namespace emtoro
