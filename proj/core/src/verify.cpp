#include "emtoro/verify.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "emtoro/sampling.hpp"

namespace emtoro {

double orthonormality_defect(const Basis14& basis) {
  const Eigen::MatrixXcd gram = basis.adjoint() * basis;
  return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double annihilation_defect(const ModeMatrices& mm, const Basis14& basis,
                           bool with_gauss) {
  double worst = 0.0;
  for (int c = 0; c < basis.cols(); ++c) {
    worst = std::max(worst, (mm.L * basis.col(c)).norm());
    if (with_gauss) {
      worst = std::max(worst, (mm.G * basis.col(c)).norm());
    }
  }
  return worst;
}

namespace {

PlasmaParams random_params(Rng& rng, bool equal_masses) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PlasmaParams p;
  p.m_i = 0.5 + 1.5 * u(rng);
  p.m_e = equal_masses ? p.m_i : (0.05 + 0.9 * u(rng)) * p.m_i;
  p.n_bar = 0.5 + 1.5 * u(rng);
  const double gammas[4] = {1.0, 5.0 / 3.0, 2.0, 3.0};
  p.pressure_e.K = 0.1 + 0.9 * u(rng);
  p.pressure_e.gamma = gammas[static_cast<int>(4.0 * u(rng)) % 4];
  p.pressure_i.K = 0.1 + 0.9 * u(rng);
  p.pressure_i.gamma = gammas[static_cast<int>(4.0 * u(rng)) % 4];
  return p;
}

Eigen::MatrixXcd stack_lg(const ModeMatrices& mm) {
  Eigen::MatrixXcd a(16, 14);
  a.topRows(14) = mm.L;
  a.bottomRows(2) = mm.G;
  return a;
}

struct Accumulator {
  double worst = 0.0;
  void add(double v) { worst = std::max(worst, v); }
};

State14 kset_state(const GridPtr& grid, int kmax, Rng& rng) {
  // (0, 0, u_e, u_i, E, 0) with div E = 0.
  State14 s(grid, Basis::symmetrized);
  s.u_e = random_vector(grid, kmax, rng);
  s.u_i = random_vector(grid, kmax, rng);
  s.E = leray_project(random_vector(grid, kmax, rng));
  return s;
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& opt) {
  if (opt.kmax < 2) throw Error("verify_suite: kmax must be >= 2");
  VerifyReport rep;
  Rng rng(opt.seed);

  std::vector<PlasmaParams> draws{opt.params};
  for (int d = 1; d < opt.draws; ++d) {
    draws.push_back(random_params(rng, /*equal_masses=*/d == 1));
  }

  Accumulator dim_bad, ortho, annihilate, axioms, oracle;

  for (std::size_t di = 0; di < draws.size(); ++di) {
    const PlasmaParams& p = draws[di];
    for (int kx = -opt.kmax; kx <= opt.kmax; ++kx) {
      for (int ky = -opt.kmax; ky <= opt.kmax; ++ky) {
        for (int kz = -opt.kmax; kz <= opt.kmax; ++kz) {
          const Vec3i k(kx, ky, kz);
          const ModeMatrices mm = build_mode_matrices(k, p);
          const ModeBasis mb = kernel_bases(mm, p);

          const bool zero = k == Vec3i::Zero();
          const int want_h = zero ? 7 : 4;
          const int want_ker = zero ? 8 : 6;
          const int got_h = nullity(stack_lg(mm));
          const int got_ker = nullity(mm.L);
          dim_bad.add(std::abs(got_h - want_h) + std::abs(got_ker - want_ker) +
                      std::abs(static_cast<int>(mb.h_basis.cols()) - want_h) +
                      std::abs(static_cast<int>(mb.kernel_basis.cols()) -
                               want_ker));

          ortho.add(orthonormality_defect(mb.kernel_basis));
          annihilate.add(annihilation_defect(mm, mb.kernel_basis, false));
          annihilate.add(annihilation_defect(mm, mb.h_basis, true));

          const Mat14 pe = projector_Pe(mb);
          const Mat14 pk = projector_P(mb);
          axioms.add((pe - pe.adjoint()).norm());
          axioms.add((pe * pe - pe).norm());
          axioms.add((pk - pk.adjoint()).norm());
          axioms.add((pk * pk - pk).norm());
          axioms.add((pk * pe - pe).norm());

          const double dist_pe = (pe - nullspace_projector(stack_lg(mm))).norm();
          const double dist_p =
              (pk - nullspace_projector(Eigen::MatrixXcd(mm.L))).norm();
          oracle.add(dist_pe);
          oracle.add(dist_p);
          if (di == 0) {
            rep.mode_residuals.push_back(ModeResidual{k, dist_pe, dist_p});
          }
        }
      }
    }
  }

  const auto push = [&rep](const std::string& name, double worst, double tol) {
    rep.checks.push_back(CheckResult{name, worst, tol, worst <= tol});
  };
  push("dimension_counts", dim_bad.worst, 0.0);
  push("basis_orthonormality", ortho.worst, 1e-12);
  push("basis_annihilation", annihilate.worst, 1e-12);
  push("projector_axioms", axioms.worst, 1e-12);
  push("svd_oracle_distance", oracle.worst, 1e-10);

  // Field-level checks on a small grid with the configured parameters.
  GridSpec gs;
  gs.n = opt.field_grid_n;
  const GridPtr grid = Grid::make(gs);
  const ModeWorkspace ws(grid, opt.params);
  const int kband = std::min(4, grid->dealias_kmax());

  Accumulator dual, kset, isometry, group_law, mean_exact;
  std::uniform_real_distribution<double> tau_dist(-3.0, 3.0);
  for (int s = 0; s < opt.field_states; ++s) {
    const State14 x = random_state(grid, kband, rng);
    const double nx = l2_norm(x);

    dual.add(l2_norm(ws.apply_Pe(x) - ws.apply_Pe_modewise(x)) / nx);

    const State14 xk = kset_state(grid, kband, rng);
    kset.add(l2_norm(ws.apply_P(xk) - ws.apply_Pe(xk)) / l2_norm(xk));

    const double t1 = tau_dist(rng), t2 = tau_dist(rng);
    const State14 sx = ws.apply_group(t1, x);
    isometry.add(std::abs(l2_norm(sx) - nx) / nx);
    group_law.add(l2_norm(ws.apply_group(t2, sx) - ws.apply_group(t1 + t2, x)) /
                  nx);

    const State14 px = ws.apply_P(x);
    mean_exact.add(l2_norm(ws.mean_value_exact(px) - px) /
                   std::max(l2_norm(px), 1e-300));
    // Pure oscillatory part averages to zero under the exact mean.
    mean_exact.add(l2_norm(ws.mean_value_exact(x - px)) / nx);
  }
  push("dual_path_pe_agreement", dual.worst, 1e-11);
  push("kset_projector_coincidence", kset.worst, 1e-11);
  push("group_isometry", isometry.worst, 1e-12);
  push("group_law", group_law.worst, 1e-11);
  push("mean_value_identity", mean_exact.worst, 1e-12);

  // Quadrature mean decay: a single eigenvector state decays like 1/T when
  // the horizon ladder keeps exp(i w T) away from 1.
  {
    const int n = grid->n();
    const Vec3i k0(1, 2, 0);
    const std::size_t idx = grid->index(
        (k0[0] + n) % n, (k0[1] + n) % n, (k0[2] + n) % n);
    const std::size_t idx_m = grid->index(
        (n - k0[0]) % n, (n - k0[1]) % n, (n - k0[2]) % n);
    const auto& w = ws.frequencies(idx);
    int a = 0;
    for (int i = 1; i < 14; ++i) {
      if (std::abs(w[i]) > std::abs(w[a])) a = i;
    }
    const double lambda = std::abs(w[a]);
    const Vec14 v = ws.eigenvectors(idx).col(a);
    State14 q(grid, Basis::symmetrized);
    q.set_mode(idx, v);
    q.set_mode(idx_m, v.conjugate());

    std::vector<double> log_t, log_err;
    for (int j = 1; j <= 4; ++j) {
      const double horizon = std::numbers::pi * std::pow(3.0, j) / lambda;
      const int nodes =
          std::max(64, static_cast<int>(std::ceil(lambda * horizon / 0.05)));
      const double err = l2_norm(ws.mean_value_quadrature(q, horizon, nodes));
      log_t.push_back(std::log(horizon));
      log_err.push_back(std::log(std::max(err, 1e-300)));
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_t.size(); ++i) {
      sx += log_t[i];
      sy += log_err[i];
      sxx += log_t[i] * log_t[i];
      sxy += log_t[i] * log_err[i];
    }
    const double m = static_cast<double>(log_t.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    push("mean_value_quadrature_slope", std::abs(slope + 1.0), 0.1);
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

std::string verify_report_json(const VerifyReport& rep) {
  nlohmann::json j;
  j["all_pass"] = rep.all_pass;
  for (const auto& c : rep.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"worst", c.worst},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  for (const auto& m : rep.mode_residuals) {
    j["mode_residuals"].push_back(
        {m.k[0], m.k[1], m.k[2], m.pe_distance, m.p_distance});
  }
  return j.dump(2) + "\n";
}

int execute_verify(const VerifyOptions& opt, const std::string& out_path,
                   std::ostream& log) {
  const VerifyReport rep = verify_suite(opt);
  for (const auto& c : rep.checks) {
    log << (c.pass ? "PASS " : "FAIL ") << c.name << "  worst " << c.worst
        << "  tol " << c.tolerance << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write report to '" + out_path + "'");
    out << verify_report_json(rep);
    log << "report written to " << out_path << "\n";
  }
  return rep.all_pass ? 0 : 2;
}

}  // namespace emtoro
