#include "emtoro/mode_ops.hpp"

#include <cmath>

#include "emtoro/operators.hpp"

namespace emtoro {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ModeWorkspace::ModeWorkspace(GridPtr grid, PlasmaParams params)
    : grid_(std::move(grid)),
      params_(params),
      consts_(derived_constants(params)) {
  const auto& g = *grid_;
  const int n = g.n();
  cache_.resize(g.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const Vec3i k(g.freq(i), g.freq(j), g.freq(l));
        const ModeMatrices mm = build_mode_matrices(k, params_);
        Eigen::SelfAdjointEigenSolver<Mat14> es(kI * mm.L);
        if (es.info() != Eigen::Success) {
          throw Error("mode eigendecomposition failed");
        }
        EigMode& em = cache_[g.index(i, j, l)];
        em.v = es.eigenvectors();
        em.w = -es.eigenvalues();
        if (g.in_dealias_band(i, j, l)) {
          max_band_freq_ =
              std::max(max_band_freq_, em.w.cwiseAbs().maxCoeff());
        }
      }
    }
  }
}

State14 ModeWorkspace::apply_group(double tau, const State14& s) const {
  check_basis(s, Basis::symmetrized, "apply_group");
  if (tau == 0.0) return s;
  State14 out(grid_, Basis::symmetrized);
  const std::size_t nm = grid_->size();
  for (std::size_t m = 0; m < nm; ++m) {
    const Vec14 x = s.mode(m);
    if (x.squaredNorm() == 0.0) continue;
    const EigMode& em = cache_[m];
    Vec14 y = em.v.adjoint() * x;
    for (int a = 0; a < 14; ++a) {
      y[a] *= std::exp(kI * (tau * em.w[a]));
    }
    out.set_mode(m, em.v * y);
  }
  return out;
}

namespace {

// y = sum_j (w_j^H x) w_j over the columns of a basis.
Vec14 project_onto(const Basis14& basis, const Vec14& x) {
  const Eigen::VectorXcd coef = basis.adjoint() * x;
  return basis * coef;
}

}  // namespace

State14 ModeWorkspace::apply_P(const State14& s) const {
  check_basis(s, Basis::symmetrized, "apply_P");
  State14 out(grid_, Basis::symmetrized);
  const auto& g = *grid_;
  const int n = g.n();
  Basis14 hb, kb;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t m = g.index(i, j, l);
        const Vec14 x = s.mode(m);
        if (x.squaredNorm() == 0.0) continue;
        explicit_bases(Vec3i(g.freq(i), g.freq(j), g.freq(l)), params_, hb, kb);
        out.set_mode(m, project_onto(kb, x));
      }
    }
  }
  return out;
}

State14 ModeWorkspace::apply_Pe_modewise(const State14& s) const {
  check_basis(s, Basis::symmetrized, "apply_Pe_modewise");
  State14 out(grid_, Basis::symmetrized);
  const auto& g = *grid_;
  const int n = g.n();
  Basis14 hb, kb;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t m = g.index(i, j, l);
        const Vec14 x = s.mode(m);
        if (x.squaredNorm() == 0.0) continue;
        explicit_bases(Vec3i(g.freq(i), g.freq(j), g.freq(l)), params_, hb, kb);
        out.set_mode(m, project_onto(hb, x));
      }
    }
  }
  return out;
}

State14 ModeWorkspace::apply_Pe(const State14& s) const {
  check_basis(s, Basis::symmetrized, "apply_Pe");
  const auto& d = consts_;
  const auto& p = params_;
  const double b = d.b_bar;

  State14 out(grid_, Basis::symmetrized);

  const VectorField3 usum = leray_project(std::sqrt(p.m_e) * s.u_e +
                                          std::sqrt(p.m_i) * s.u_i);
  const VectorField3 curl_b = curl(s.B);
  const VectorField3 lap_lue = laplacian(leray_project(s.u_e));
  const VectorField3 lap_lui = laplacian(leray_project(s.u_i));
  const VectorField3 j_sym = std::sqrt(p.n_bar / p.m_i) * s.u_i -
                             std::sqrt(p.n_bar / p.m_e) * s.u_e;

  const double msum = p.m_e + p.m_i;
  out.u_e = helmholtz_inverse(
      (-b * std::sqrt(p.n_bar / p.m_e)) * curl_b +
          (-b * b * p.n_bar / p.m_e) * lap_lue +
          (b * b * p.n_bar / std::sqrt(p.m_e * p.m_i)) * lap_lui,
      b);
  out.u_e += (std::sqrt(p.m_e) / msum) * usum;
  out.u_i = helmholtz_inverse(
      (b * std::sqrt(p.n_bar / p.m_i)) * curl_b +
          (b * b * p.n_bar / std::sqrt(p.m_e * p.m_i)) * lap_lue +
          (-b * b * p.n_bar / p.m_i) * lap_lui,
      b);
  out.u_i += (std::sqrt(p.m_i) / msum) * usum;
  out.B = helmholtz_inverse(leray_project(s.B) + b * curl(j_sym), b);

  // Density rows keep only the means, coupled through c_bar.
  const Complex re = s.rho_e.mean();
  const Complex ri = s.rho_i.mean();
  const double ratio = std::sqrt(d.dp_e / d.dp_i);
  out.rho_e.coeffs()[0] = d.c_bar * (ratio * re + ri);
  out.rho_i.coeffs()[0] = d.c_bar * (re + ri / ratio);
  return out;
}

State14 ModeWorkspace::apply_Pe_simplified(const State14& s) const {
  check_basis(s, Basis::symmetrized, "apply_Pe_simplified");
  const double defect = pe_defect(s);
  if (defect > 1e-6) {
    throw Error("apply_Pe_simplified: input not Pe-polarized, relative "
                "residual " +
                std::to_string(defect));
  }
  const auto& p = params_;
  const double b = consts_.b_bar;
  const double msum = p.m_e + p.m_i;

  State14 out(grid_, Basis::symmetrized);
  const VectorField3 usum = leray_project(std::sqrt(p.m_e) * s.u_e +
                                          std::sqrt(p.m_i) * s.u_i);
  const VectorField3 curl_b = curl(s.B);
  out.u_e = (std::sqrt(p.m_e) / msum) * usum +
            (-std::sqrt(p.n_bar / p.m_e) * b) * curl_b;
  out.u_i = (std::sqrt(p.m_i) / msum) * usum +
            (std::sqrt(p.n_bar / p.m_i) * b) * curl_b;
  out.B = leray_project(s.B);
  out.rho_e.coeffs()[0] = s.rho_e.mean();
  out.rho_i.coeffs()[0] = s.rho_i.mean();
  return out;
}

State14 ModeWorkspace::mean_value_quadrature(const State14& s, double t_avg,
                                             int nodes) const {
  if (!(t_avg > 0.0) || nodes < 2) {
    throw Error("mean_value_quadrature: need t_avg > 0 and nodes >= 2");
  }
  const double dt = t_avg / nodes;
  State14 acc = apply_group(0.0, s);
  acc *= 0.5;
  for (int m = 1; m < nodes; ++m) {
    acc += apply_group(dt * m, s);
  }
  State14 last = apply_group(t_avg, s);
  last *= 0.5;
  acc += last;
  acc *= 1.0 / nodes;
  return acc;
}

double ModeWorkspace::pe_defect(const State14& s) const {
  const double norm = l2_norm(s);
  if (norm == 0.0) return 0.0;
  return l2_norm(s - apply_Pe(s)) / norm;
}

}  // namespace emtoro
