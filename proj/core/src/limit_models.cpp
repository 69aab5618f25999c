#include "emtoro/limit_models.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "emtoro/operators.hpp"

namespace emtoro {

namespace {

// (div S)_i = d_j S_ij for a symmetric tensor stored as [xx,xy,xz,yy,yz,zz].
VectorField3 div_symmetric_tensor(const std::array<ScalarField, 6>& s) {
  const GridPtr& grid = s[0].grid();
  VectorField3 out(grid);
  const VectorField3 gxx = grad(s[0]), gxy = grad(s[1]), gxz = grad(s[2]);
  const VectorField3 gyy = grad(s[3]), gyz = grad(s[4]), gzz = grad(s[5]);
  out[0] = gxx[0] + gxy[1] + gxz[2];
  out[1] = gxy[0] + gyy[1] + gyz[2];
  out[2] = gxz[0] + gyz[1] + gzz[2];
  return out;
}

// S = a (x) a + weight_b * b (x) b, dealiased component-wise.
std::array<ScalarField, 6> outer_products(const GridPtr& grid,
                                          const PhysVector& a,
                                          const PhysVector& b,
                                          double weight_b) {
  const std::size_t n = a.x.size();
  const auto comp = [&](const PhysScalar& p, const PhysScalar& q,
                        const PhysScalar& r, const PhysScalar& s) {
    PhysScalar out(n);
    for (std::size_t m = 0; m < n; ++m) {
      out[m] = p[m] * q[m] + weight_b * r[m] * s[m];
    }
    return out;
  };
  return {to_spec(grid, comp(a.x, a.x, b.x, b.x)),
          to_spec(grid, comp(a.x, a.y, b.x, b.y)),
          to_spec(grid, comp(a.x, a.z, b.x, b.z)),
          to_spec(grid, comp(a.y, a.y, b.y, b.y)),
          to_spec(grid, comp(a.y, a.z, b.y, b.z)),
          to_spec(grid, comp(a.z, a.z, b.z, b.z))};
}

void check_divergence_free(const VectorField3& v, const char* what) {
  const double tol = 1e-10 * (1.0 + l2_norm(v));
  const double d = l2_norm(div(v));
  if (d > tol) {
    throw Error(std::string(what) + " must be divergence free, residual " +
                std::to_string(d));
  }
}

void require_polarized(const ModeWorkspace& ws, const State14& s,
                       const char* where) {
  check_basis(s, Basis::symmetrized, where);
  const double defect = ws.pe_defect(s);
  if (defect > 1e-6) {
    throw Error(std::string(where) +
                ": input not polarized, relative defect " +
                std::to_string(defect));
  }
}

}  // namespace

bool state_finite_xmhd(const XmhdState& s) {
  for (int c = 0; c < 3; ++c) {
    for (const auto& z : s.u[c].coeffs()) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    for (const auto& z : s.b_star[c].coeffs()) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

VectorField3 bstar_of_b(const VectorField3& b, double b_bar) {
  return helmholtz_apply(b, b_bar);
}

VectorField3 b_of_bstar(const VectorField3& b_star, double b_bar) {
  return helmholtz_inverse(b_star, b_bar);
}

namespace {

State14 prepare_core(const ModeWorkspace& ws, const VectorField3& ve_raw,
                     const VectorField3& vi_raw, double rho_e_const,
                     double rho_i_const) {
  const auto& p = ws.params();
  const GridPtr& grid = ve_raw.grid();

  VectorField3 ve = leray_project(dealias(ve_raw));
  VectorField3 vi = leray_project(dealias(vi_raw));
  // The constant part of H demands equal velocity means; replace both by
  // the center-of-mass mean.
  for (int c = 0; c < 3; ++c) {
    const Complex mean = (p.m_e * ve[c].mean() + p.m_i * vi[c].mean()) /
                         (p.m_e + p.m_i);
    ve[c].coeffs()[0] = mean;
    vi[c].coeffs()[0] = mean;
  }

  State14 out(grid, Basis::symmetrized);
  out.u_e = std::sqrt(p.n_bar * p.m_e) * ve;
  out.u_i = std::sqrt(p.n_bar * p.m_i) * vi;
  out.B = p.n_bar * curl(inv_laplacian(ve - vi));
  out.rho_e.coeffs()[0] = rho_e_const;
  out.rho_i.coeffs()[0] = rho_i_const;
  return out;
}

}  // namespace

State14 prepare_data(const ModeWorkspace& ws, const VectorField3& ve_raw,
                     const VectorField3& vi_raw, double density_offset) {
  const auto& p = ws.params();
  const auto& d = ws.consts();
  State14 out = prepare_core(ws, ve_raw, vi_raw,
                             std::sqrt(d.dp_e / p.n_bar) * density_offset,
                             std::sqrt(d.dp_i / p.n_bar) * density_offset);

  const double defect = ws.pe_defect(out);
  if (defect > 1e-11) {
    throw Error("prepare_data: polarization defect " + std::to_string(defect));
  }
  const GaussResidual gr = gauss_residual(ws, out, 0.0);
  if (gr.div_b > 1e-12 || gr.charge > 1e-12) {
    throw Error("prepare_data: Gauss residuals " + std::to_string(gr.div_b) +
                ", " + std::to_string(gr.charge));
  }
  return out;
}

State14 prepare_data_at_eps(const ModeWorkspace& ws,
                            const VectorField3& ve_raw,
                            const VectorField3& vi_raw, double density_offset,
                            double eps) {
  if (eps == 0.0) {
    return prepare_data(ws, ve_raw, vi_raw, density_offset);
  }
  const auto& p = ws.params();
  const double n_phys = p.n_bar + eps * density_offset;
  const double qe = g_of_n(p.pressure_e, p.m_e, p.n_bar, n_phys) / eps;
  const double qi = g_of_n(p.pressure_i, p.m_i, p.n_bar, n_phys) / eps;
  State14 out = prepare_core(ws, ve_raw, vi_raw,
                             std::sqrt(p.n_bar * p.m_e) * qe,
                             std::sqrt(p.n_bar * p.m_i) * qi);

  const GaussResidual gr = gauss_residual(ws, out, eps);
  if (gr.div_b > 1e-12 || gr.charge > 1e-12) {
    throw Error("prepare_data_at_eps: Gauss residuals " +
                std::to_string(gr.div_b) + ", " + std::to_string(gr.charge));
  }
  if (ws.pe_defect(out) > 1e-3) {
    throw Error("prepare_data_at_eps: polarization defect too large");
  }
  return out;
}

State14 eslm_rhs(const ModeWorkspace& ws, const State14& s) {
  require_polarized(ws, s, "eslm_rhs");
  const auto& p = ws.params();
  const auto& d = ws.consts();
  const GridPtr& grid = s.grid();
  const double b = d.b_bar;

  const VectorField3 u0 = (1.0 / (std::sqrt(p.n_bar) * (p.m_e + p.m_i))) *
                          (std::sqrt(p.m_e) * s.u_e + std::sqrt(p.m_i) * s.u_i);
  const VectorField3 lu = leray_project(u0);
  const VectorField3 c = curl(s.B);
  const VectorField3 curl_c = curl(c);
  const VectorField3 curl_lu = curl(lu);

  const PhysVector plu = to_phys(lu);
  const PhysVector pc = to_phys(c);
  const PhysVector pb = to_phys(s.B);
  const PhysVector pcurl_c = to_phys(curl_c);
  const PhysVector pcurl_lu = to_phys(curl_lu);

  // S0 = Lu (x) Lu + (b/rho) C (x) C.
  const VectorField3 div_s =
      div_symmetric_tensor(outer_products(grid, plu, pc, b / d.rho_bar));

  // T0 = -b [Lu x curl C + C x curl Lu] + (b d_i / rho) C x curl C.
  PhysVector t0_phys = cross(plu, pcurl_c);
  {
    const PhysVector c2 = cross(pc, pcurl_lu);
    axpy(1.0, c2, t0_phys);
  }
  for (std::size_t m = 0; m < t0_phys.x.size(); ++m) {
    t0_phys.x[m] *= -b;
    t0_phys.y[m] *= -b;
    t0_phys.z[m] *= -b;
  }
  axpy(b * d.d_i / d.rho_bar, cross(pc, pcurl_c), t0_phys);
  const VectorField3 t0 = to_spec(grid, t0_phys);

  // D0 = Lu - (d_i/rho) curl B.
  PhysVector d0 = plu;
  axpy(-d.d_i / d.rho_bar, pc, d0);
  const VectorField3 dxb = to_spec(grid, cross(d0, pb));
  const VectorField3 cxb = to_spec(grid, cross(pc, pb));

  const VectorField3 l_div_s = leray_project(div_s);
  const VectorField3 hr_t0 = helmholtz_ratio(leray_project(t0), b);
  const VectorField3 l_cxb = leray_project(cxb);
  const VectorField3 hr_dxb = helmholtz_ratio(leray_project(dxb), b);

  const double we = std::sqrt(p.n_bar * p.m_e);
  const double wi = std::sqrt(p.n_bar * p.m_i);
  const double ge = std::sqrt(p.n_bar / p.m_e);
  const double gi = std::sqrt(p.n_bar / p.m_i);

  State14 out(grid, Basis::symmetrized);
  out.u_e = (-we) * l_div_s + (-ge) * hr_t0 + (we / d.rho_bar) * l_cxb +
            ge * hr_dxb;
  out.u_i = (-wi) * l_div_s + gi * hr_t0 + (wi / d.rho_bar) * l_cxb +
            (-gi) * hr_dxb;
  out.B = helmholtz_inverse(curl(dxb - t0), b);
  return out;
}

XmhdState xmhd_rhs(const ModeWorkspace& ws, const XmhdState& s) {
  check_divergence_free(s.u, "xmhd_rhs: u");
  check_divergence_free(s.b_star, "xmhd_rhs: B*");
  const auto& d = ws.consts();
  const GridPtr& grid = s.u.grid();

  const VectorField3 b = b_of_bstar(s.b_star, d.b_bar);
  const VectorField3 c = curl(b);
  const VectorField3 curl_u = curl(s.u);

  const PhysVector pu = to_phys(s.u);
  const PhysVector pbs = to_phys(s.b_star);
  const PhysVector pc = to_phys(c);
  const PhysVector pcurl_u = to_phys(curl_u);

  const VectorField3 div_uu =
      div_symmetric_tensor(outer_products(grid, pu, pu, 0.0));
  const VectorField3 lorentz = to_spec(grid, cross(pbs, pc));

  PhysVector drift = pu;
  axpy(-d.d_i / d.rho_bar, pc, drift);

  XmhdState out(grid);
  out.u = (-1.0) * leray_project(div_uu) +
          (-1.0 / d.rho_bar) * leray_project(lorentz);
  out.b_star = (-1.0) * curl(to_spec(grid, cross(pbs, drift))) +
               (-d.b_bar) * curl(to_spec(grid, cross(pcurl_u, pc)));
  return out;
}

ScalarField xmhd_pressure(const ModeWorkspace& ws, const XmhdState& s) {
  const auto& d = ws.consts();
  const GridPtr& grid = s.u.grid();
  const VectorField3 b = b_of_bstar(s.b_star, d.b_bar);
  const VectorField3 c = curl(b);
  const PhysVector pu = to_phys(s.u);
  const PhysVector pbs = to_phys(s.b_star);
  const PhysVector pc = to_phys(c);
  VectorField3 n = div_symmetric_tensor(outer_products(grid, pu, pu, 0.0));
  n += (1.0 / d.rho_bar) * to_spec(grid, cross(pbs, pc));
  ScalarField p = inv_laplacian(div(n));
  p *= -1.0;
  return p;
}

double xmhd_energy(const ModeWorkspace& ws, const XmhdState& s) {
  const auto& d = ws.consts();
  const VectorField3 b = b_of_bstar(s.b_star, d.b_bar);
  const double nu = l2_norm(s.u);
  const double nb = l2_norm(b);
  const double nc = l2_norm(curl(b));
  return 0.5 * (d.rho_bar * nu * nu + nb * nb + d.b_bar * nc * nc);
}

XmhdState slm_to_xmhd(const ModeWorkspace& ws, const State14& prepared) {
  require_polarized(ws, prepared, "slm_to_xmhd");
  const auto& p = ws.params();
  const auto& d = ws.consts();
  XmhdState out(prepared.grid());
  out.u = leray_project(
      (1.0 / (std::sqrt(p.n_bar) * (p.m_e + p.m_i))) *
      (std::sqrt(p.m_e) * prepared.u_e + std::sqrt(p.m_i) * prepared.u_i));
  out.b_star = bstar_of_b(prepared.B, d.b_bar);
  return out;
}

State14 xmhd_to_slm(const ModeWorkspace& ws, const XmhdState& s,
                    double density_offset) {
  check_divergence_free(s.u, "xmhd_to_slm: u");
  check_divergence_free(s.b_star, "xmhd_to_slm: B*");
  const auto& p = ws.params();
  const auto& d = ws.consts();
  const VectorField3 b = b_of_bstar(s.b_star, d.b_bar);
  const VectorField3 cb = curl(b);

  State14 out(s.u.grid(), Basis::symmetrized);
  out.u_e = std::sqrt(p.n_bar * p.m_e) * s.u +
            (-d.b_bar * std::sqrt(p.n_bar / p.m_e)) * cb;
  out.u_i = std::sqrt(p.n_bar * p.m_i) * s.u +
            (d.b_bar * std::sqrt(p.n_bar / p.m_i)) * cb;
  out.B = b;
  out.rho_e.coeffs()[0] = std::sqrt(d.dp_e / p.n_bar) * density_offset;
  out.rho_i.coeffs()[0] = std::sqrt(d.dp_i / p.n_bar) * density_offset;
  return out;
}

XmhdState bridge_differential(const ModeWorkspace& ws, const State14& deriv) {
  const auto& p = ws.params();
  const auto& d = ws.consts();
  XmhdState out(deriv.grid());
  out.u = leray_project(
      (1.0 / (std::sqrt(p.n_bar) * (p.m_e + p.m_i))) *
      (std::sqrt(p.m_e) * deriv.u_e + std::sqrt(p.m_i) * deriv.u_i));
  out.b_star = helmholtz_apply(deriv.B, d.b_bar);
  return out;
}

State14 flm_rhs_quadrature(const EmtfSystem& sys, const State14& u0,
                           double t_avg, int nodes) {
  if (!(t_avg > 0.0)) throw Error("flm_rhs_quadrature: t_avg must be > 0");
  if (nodes < 16) throw Error("flm_rhs_quadrature: need at least 16 nodes");
  const ModeWorkspace& ws = sys.workspace();
  const double dt = t_avg / nodes;

  const auto integrand = [&](double tau) {
    const State14 w = ws.apply_group(tau, u0);
    return ws.apply_group(-tau, sys.rhs_nonstiff(0.0, w));
  };

  State14 acc = integrand(0.0);
  acc *= 0.5;
  for (int m = 1; m < nodes; ++m) {
    acc += integrand(dt * m);
  }
  State14 last = integrand(t_avg);
  last *= 0.5;
  acc += last;
  acc *= 1.0 / nodes;
  return acc;
}

double flm_quadrature_error_bound(const EmtfSystem& sys, const State14& u0,
                                  double t_avg, int nodes) {
  const ModeWorkspace& ws = sys.workspace();
  const State14 x = sys.rhs_nonstiff(0.0, u0);
  const double dt = t_avg / nodes;
  const std::size_t nm = x.grid()->size();
  double acc = 0.0;
  for (std::size_t m = 0; m < nm; ++m) {
    const Vec14 xm = x.mode(m);
    if (xm.squaredNorm() == 0.0) continue;
    const Vec14 y = ws.eigenvectors(m).adjoint() * xm;
    const auto& w = ws.frequencies(m);
    for (int a = 0; a < 14; ++a) {
      if (std::abs(w[a]) <= 1e-9) continue;
      // Exact trapezoid mean of exp(-i w tau) over [0, t_avg].
      const Complex z = std::exp(Complex{0.0, -w[a] * dt});
      Complex mean;
      if (std::abs(z - 1.0) < 1e-12) {
        mean = 1.0;
      } else {
        const Complex zn = std::pow(z, nodes);
        mean = (0.5 + z * (zn / z - 1.0) / (z - 1.0) + 0.5 * zn) /
               static_cast<double>(nodes);
      }
      acc += std::norm(mean) * std::norm(y[a]);
    }
  }
  const double two_pi_cubed = 248.05021344239853;
  return std::sqrt(two_pi_cubed * acc);
}

namespace {

struct PhysicalSpecies {
  PhysScalar n;
  PhysVector v;
};

PhysicalSpecies reconstruct_species(const PlasmaParams& p,
                                    const PressureLaw& law, double mass,
                                    const ScalarField& rho,
                                    const VectorField3& u, double eps) {
  PhysicalSpecies out;
  const double inv = 1.0 / std::sqrt(p.n_bar * mass);
  const PhysScalar q = to_phys(rho);
  out.n.resize(q.size());
  for (std::size_t m = 0; m < q.size(); ++m) {
    out.n[m] = g_inv(law, mass, p.n_bar, eps * q[m] * inv);
  }
  out.v = to_phys(u);
  for (std::size_t m = 0; m < q.size(); ++m) {
    out.v.x[m] *= eps * inv;
    out.v.y[m] *= eps * inv;
    out.v.z[m] *= eps * inv;
  }
  return out;
}

PhysVector j_over_rho(const PlasmaParams& p, const PhysicalSpecies& e,
                      const PhysicalSpecies& i) {
  const std::size_t n = e.n.size();
  PhysVector out{PhysScalar(n), PhysScalar(n), PhysScalar(n)};
  for (std::size_t m = 0; m < n; ++m) {
    const double rho = p.m_e * e.n[m] + p.m_i * i.n[m];
    out.x[m] = (i.n[m] * i.v.x[m] - e.n[m] * e.v.x[m]) / rho;
    out.y[m] = (i.n[m] * i.v.y[m] - e.n[m] * e.v.y[m]) / rho;
    out.z[m] = (i.n[m] * i.v.z[m] - e.n[m] * e.v.z[m]) / rho;
  }
  return out;
}

std::array<PhysVector, 3> jacobian_phys(const GridPtr& grid,
                                        const PhysVector& v) {
  const ScalarField fx = to_spec(grid, v.x, false);
  const ScalarField fy = to_spec(grid, v.y, false);
  const ScalarField fz = to_spec(grid, v.z, false);
  return {to_phys(grad(fx)), to_phys(grad(fy)), to_phys(grad(fz))};
}

PhysVector directional_derivative(const PhysVector& a,
                                  const std::array<PhysVector, 3>& jac) {
  // (a . grad) applied to the field whose jacobian is jac.
  const std::size_t n = a.x.size();
  PhysVector out{PhysScalar(n), PhysScalar(n), PhysScalar(n)};
  for (std::size_t m = 0; m < n; ++m) {
    out.x[m] = a.x[m] * jac[0].x[m] + a.y[m] * jac[0].y[m] +
               a.z[m] * jac[0].z[m];
    out.y[m] = a.x[m] * jac[1].x[m] + a.y[m] * jac[1].y[m] +
               a.z[m] * jac[1].z[m];
    out.z[m] = a.x[m] * jac[2].x[m] + a.y[m] * jac[2].y[m] +
               a.z[m] * jac[2].z[m];
  }
  return out;
}

}  // namespace

double gol_residual(const ModeWorkspace& ws, const State14& current,
                    const State14& previous, double dt_slow, double eps) {
  if (!(dt_slow > 0.0)) throw Error("gol_residual: snapshot spacing is 0");
  if (!(eps > 0.0)) throw Error("gol_residual: eps must be > 0");
  check_basis(current, Basis::symmetrized, "gol_residual");
  check_basis(previous, Basis::symmetrized, "gol_residual");
  const auto& p = ws.params();
  const auto& d = ws.consts();
  const GridPtr& grid = current.grid();

  const PhysicalSpecies e =
      reconstruct_species(p, p.pressure_e, p.m_e, current.rho_e, current.u_e,
                          eps);
  const PhysicalSpecies i =
      reconstruct_species(p, p.pressure_i, p.m_i, current.rho_i, current.u_i,
                          eps);
  const PhysicalSpecies e_prev =
      reconstruct_species(p, p.pressure_e, p.m_e, previous.rho_e,
                          previous.u_e, eps);
  const PhysicalSpecies i_prev =
      reconstruct_species(p, p.pressure_i, p.m_i, previous.rho_i,
                          previous.u_i, eps);

  const std::size_t n = e.n.size();
  PhysVector ef = to_phys(current.E);
  PhysVector bf = to_phys(current.B);
  for (std::size_t m = 0; m < n; ++m) {
    ef.x[m] *= eps;
    ef.y[m] *= eps;
    ef.z[m] *= eps;
    bf.x[m] *= eps;
    bf.y[m] *= eps;
    bf.z[m] *= eps;
  }

  PhysVector u{PhysScalar(n), PhysScalar(n), PhysScalar(n)};
  PhysScalar rho(n), pressure(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double re = p.m_e * e.n[m], ri = p.m_i * i.n[m];
    rho[m] = re + ri;
    u.x[m] = (re * e.v.x[m] + ri * i.v.x[m]) / rho[m];
    u.y[m] = (re * e.v.y[m] + ri * i.v.y[m]) / rho[m];
    u.z[m] = (re * e.v.z[m] + ri * i.v.z[m]) / rho[m];
    pressure[m] = p.pressure_e.p(e.n[m]) + p.pressure_i.p(i.n[m]);
  }

  const PhysVector jr = j_over_rho(p, e, i);
  const PhysVector jr_prev = j_over_rho(p, e_prev, i_prev);
  PhysVector djr_dtau = jr;
  for (std::size_t m = 0; m < n; ++m) {
    // fast-time derivative: d/dtau = eps * d/dt_slow
    djr_dtau.x[m] = eps * (jr.x[m] - jr_prev.x[m]) / dt_slow;
    djr_dtau.y[m] = eps * (jr.y[m] - jr_prev.y[m]) / dt_slow;
    djr_dtau.z[m] = eps * (jr.z[m] - jr_prev.z[m]) / dt_slow;
  }

  const PhysVector grad_p = to_phys(grad(to_spec(grid, pressure, false)));
  const std::array<PhysVector, 3> jac_jr = jacobian_phys(grid, jr);
  const std::array<PhysVector, 3> jac_u = jacobian_phys(grid, u);
  const PhysVector jr_grad_jr = directional_derivative(jr, jac_jr);
  const PhysVector u_grad_jr = directional_derivative(u, jac_jr);
  const PhysVector jr_grad_u = directional_derivative(jr, jac_u);
  const PhysVector uxb = cross(u, bf);
  const PhysVector jrxb = cross(jr, bf);

  const double de2 = d.d_e * d.d_e;
  PhysVector res{PhysScalar(n), PhysScalar(n), PhysScalar(n)};
  for (std::size_t m = 0; m < n; ++m) {
    const double rhs_x =
        -d.d_i / rho[m] * grad_p.x[m] + d.d_i * jrxb.x[m] -
        d.d_i * de2 * jr_grad_jr.x[m] +
        de2 * (djr_dtau.x[m] + u_grad_jr.x[m] + jr_grad_u.x[m]);
    const double rhs_y =
        -d.d_i / rho[m] * grad_p.y[m] + d.d_i * jrxb.y[m] -
        d.d_i * de2 * jr_grad_jr.y[m] +
        de2 * (djr_dtau.y[m] + u_grad_jr.y[m] + jr_grad_u.y[m]);
    const double rhs_z =
        -d.d_i / rho[m] * grad_p.z[m] + d.d_i * jrxb.z[m] -
        d.d_i * de2 * jr_grad_jr.z[m] +
        de2 * (djr_dtau.z[m] + u_grad_jr.z[m] + jr_grad_u.z[m]);
    res.x[m] = ef.x[m] + uxb.x[m] - rhs_x;
    res.y[m] = ef.y[m] + uxb.y[m] - rhs_y;
    res.z[m] = ef.z[m] + uxb.z[m] - rhs_z;
  }
  return l2_norm(to_spec(grid, res, false)) / eps;
}

IrrotationalReport irrotational_check(const ModeWorkspace& ws,
                                      const VectorField3& v_e,
                                      const VectorField3& v_i,
                                      const VectorField3& b) {
  const auto& p = ws.params();
  const auto& d = ws.consts();
  IrrotationalReport rep;

  const VectorField3 r1 = d.delta * curl(v_e) - b;
  const VectorField3 r2 = curl(v_i) + b;
  const VectorField3 r3 = curl(b) - p.n_bar * (v_i - v_e);
  const double scale = std::max(
      {l2_norm(b), p.n_bar * (l2_norm(v_e) + l2_norm(v_i)), 1e-30});
  rep.paupau_residual = std::max(l2_norm(r1), l2_norm(r2)) / scale;
  rep.ampere_residual = l2_norm(r3) / scale;
  rep.paupau_ok = rep.paupau_residual <= 1e-8;
  rep.compliant = rep.paupau_ok && rep.ampere_residual <= 1e-8;
  rep.b_norm = l2_norm(b);

  // (|k|^2 + n(1+delta)/delta) B_k, the combination forced to vanish.
  const double c0 = p.n_bar * (1.0 + d.delta) / d.delta;
  VectorField3 identity = c0 * b - laplacian(b);
  rep.mode_identity_norm = l2_norm(identity);

  if (rep.compliant) {
    // The data necessarily reduces to constants; the slow model freezes.
    VectorField3 ve_mean(v_e.grid()), vi_mean(v_i.grid());
    for (int c = 0; c < 3; ++c) {
      ve_mean[c].coeffs()[0] = v_e[c].mean();
      vi_mean[c].coeffs()[0] = v_i[c].mean();
    }
    const State14 constant_state =
        prepare_data(ws, ve_mean, vi_mean, 0.0);
    rep.eslm_rhs_norm = l2_norm(eslm_rhs(ws, constant_state));
  }
  return rep;
}

}  // namespace emtoro
