#pragma once

#include "emtoro/emtf_system.hpp"
#include "emtoro/mode_ops.hpp"

namespace emtoro {

/// Reduced incompressible state: center-of-mass velocity and drifted
/// magnetic field, both divergence free. B is recovered through the
/// constitutive relation B = (Id - b Lap)^{-1} B*.
struct XmhdState {
  VectorField3 u;
  VectorField3 b_star;

  XmhdState() = default;
  explicit XmhdState(const GridPtr& grid) : u(grid), b_star(grid) {}

  XmhdState& operator+=(const XmhdState& o) {
    u += o.u;
    b_star += o.b_star;
    return *this;
  }
  XmhdState& operator*=(double s) {
    u *= s;
    b_star *= s;
    return *this;
  }
  friend XmhdState operator*(double s, XmhdState a) { return a *= s; }
  friend XmhdState operator-(XmhdState a, const XmhdState& b) {
    a.u -= b.u;
    a.b_star -= b.b_star;
    return a;
  }
};

bool state_finite_xmhd(const XmhdState& s);

VectorField3 bstar_of_b(const VectorField3& b, double b_bar);
VectorField3 b_of_bstar(const VectorField3& b_star, double b_bar);

/// Builds the polarized limit state from raw velocity data: Leray-projected
/// velocities with their means replaced by the common center-of-mass mean,
/// constant densities from the offset, E = 0 and the magnetic field
/// n_bar curl Lap^{-1}(v_e - v_i). Verifies the polarization (relative
/// defect <= 1e-11) and both Gauss residuals (<= 1e-12).
State14 prepare_data(const ModeWorkspace& ws, const VectorField3& ve_raw,
                     const VectorField3& vi_raw, double density_offset);

/// Finite-eps companion of prepare_data: the two density constants are set
/// from the exact change of variables at physical density n_bar + eps*offset,
/// so the nonlinear charge law holds to machine precision at this eps. The
/// polarization defect is then O(eps * offset^2) instead of machine level.
State14 prepare_data_at_eps(const ModeWorkspace& ws,
                            const VectorField3& ve_raw,
                            const VectorField3& vi_raw, double density_offset,
                            double eps);

/// Effective slow-limit right-hand side on the 14-component representation.
/// The input must be polarized (relative defect <= 1e-6, checked); density
/// and E rows of the output are identically zero.
State14 eslm_rhs(const ModeWorkspace& ws, const State14& s);

/// Incompressible extended-MHD right-hand side for (u, B*). Inputs must be
/// divergence free; outputs are divergence free by construction.
XmhdState xmhd_rhs(const ModeWorkspace& ws, const XmhdState& s);

/// Pressure multiplier recovered on demand from the unprojected momentum
/// balance.
ScalarField xmhd_pressure(const ModeWorkspace& ws, const XmhdState& s);

/// Conserved energy rho |u|^2/2 + |B|^2/2 + d_e^2 |curl B|^2 / (2 rho),
/// integrated over the box.
double xmhd_energy(const ModeWorkspace& ws, const XmhdState& s);

XmhdState slm_to_xmhd(const ModeWorkspace& ws, const State14& prepared);
State14 xmhd_to_slm(const ModeWorkspace& ws, const XmhdState& s,
                    double density_offset);

/// Push a 14-component ESLM derivative through the (linear) bridge map,
/// yielding (du/dt, dB*/dt); used by the equivalence checks.
XmhdState bridge_differential(const ModeWorkspace& ws, const State14& deriv);

/// Fast limit model right-hand side by trapezoid averaging of the filtered
/// nonlinearity over tau in [0, t_avg].
State14 flm_rhs_quadrature(const EmtfSystem& sys, const State14& u0,
                           double t_avg, int nodes);

/// A-priori bound on the quadrature error of flm_rhs_quadrature for a
/// polarized input, from the exact trapezoid means of the oscillatory
/// eigencomponents of rhs(0, u0).
double flm_quadrature_error_bound(const EmtfSystem& sys, const State14& u0,
                                  double t_avg, int nodes);

/// Generalized Ohm's law residual of the reconstructed physical state at
/// perturbation scale eps, normalized by eps. The time derivative of J/rho
/// uses the two snapshots (slow-time spacing dt_slow > 0); reported as an
/// approximate diagnostic.
double gol_residual(const ModeWorkspace& ws, const State14& current,
                    const State14& previous, double dt_slow, double eps);

struct IrrotationalReport {
  bool paupau_ok = false;   // delta curl v_e = -curl v_i = B holds
  bool compliant = false;   // additionally Ampere's law holds
  double paupau_residual = 0.0;
  double ampere_residual = 0.0;
  double mode_identity_norm = 0.0;  // ||(|k|^2 + n(1+delta)/delta) B_k||
  double b_norm = 0.0;              // forced to ~0 for compliant data
  double eslm_rhs_norm = 0.0;       // on the resulting constant state
};

/// Checks the cancellation forced by generalized-irrotational data: if the
/// curl relations and Ampere's law hold, the magnetic field must vanish and
/// the slow dynamics freezes. Non-compliant data is flagged, no conclusion
/// asserted.
IrrotationalReport irrotational_check(const ModeWorkspace& ws,
                                      const VectorField3& v_e,
                                      const VectorField3& v_i,
                                      const VectorField3& b);

}  // namespace emtoro
