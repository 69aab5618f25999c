#include <doctest.h>

#include <cmath>
#include <numbers>

#include "emtoro/limit_models.hpp"
#include "emtoro/runner.hpp"
#include "emtoro/sampling.hpp"
#include "test_util.hpp"

using namespace emtoro;
using emtoro::testing::cubic_params;
using emtoro::testing::generic_params;

namespace {

GridPtr small_grid(int n = 16) {
  GridSpec gs;
  gs.n = n;
  return Grid::make(gs);
}

std::shared_ptr<const EmtfSystem> make_system(const GridPtr& g,
                                              const PlasmaParams& p) {
  return std::make_shared<const EmtfSystem>(
      std::make_shared<const ModeWorkspace>(g, p));
}

// ---------------------------------------------------------------------------
// Finite-difference oracle for the quasilinear form. Works entirely on grid
// samples with 8th-order centered differences; valid only well inside the
// resolution limit, so callers pass very smooth (|k| <= 1) data.
struct FdOracle {
  const Grid& g;
  int n;
  double h;

  explicit FdOracle(const Grid& grid)
      : g(grid), n(grid.n()), h(2.0 * std::numbers::pi / grid.n()) {}

  double sample(const PhysScalar& f, int i, int j, int l) const {
    return f[g.index((i % n + n) % n, (j % n + n) % n, (l % n + n) % n)];
  }

  double deriv(const PhysScalar& f, int axis, int i, int j, int l) const {
    static const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0,
                                -1.0 / 280.0};
    double acc = 0.0;
    for (int m = 1; m <= 4; ++m) {
      const int di = axis == 0 ? m : 0;
      const int dj = axis == 1 ? m : 0;
      const int dl = axis == 2 ? m : 0;
      acc += c[m - 1] *
             (sample(f, i + di, j + dj, l + dl) -
              sample(f, i - di, j - dj, l - dl));
    }
    return acc / h;
  }
};

}  // namespace

TEST_CASE("non-stiff right-hand side basics") {
  const GridPtr g = small_grid();
  const auto sys = make_system(g, generic_params());

  SUBCASE("zero state maps to zero") {
    State14 z(g, Basis::symmetrized);
    CHECK(l2_norm(sys->rhs_nonstiff(0.1, z)) == 0.0);
  }

  SUBCASE("magnetic-only state maps to zero") {
    Rng rng(3);
    State14 s(g, Basis::symmetrized);
    s.B = random_vector(g, 4, rng);
    CHECK(l2_norm(sys->rhs_nonstiff(0.1, s)) == 0.0);
  }

  SUBCASE("negative eps rejected") {
    State14 z(g, Basis::symmetrized);
    CHECK_THROWS_AS(sys->rhs_nonstiff(-0.1, z), Error);
  }
}

TEST_CASE("right-hand side matches the finite-difference oracle") {
  const GridPtr g = small_grid();
  const PlasmaParams p = generic_params();
  const auto sys = make_system(g, p);
  const double eps = 0.08;

  // |k| <= 1 data with small amplitude keeps the FD truncation error of the
  // oracle far below the tolerance.
  Rng rng(7);
  State14 s = random_state(g, 1, rng);
  s *= 0.01 / l2_norm(s);

  const State14 rhs = sys->rhs_nonstiff(eps, s);

  const FdOracle fd(*g);
  const double se = 1.0 / std::sqrt(p.n_bar * p.m_e);
  const double si = 1.0 / std::sqrt(p.n_bar * p.m_i);
  const PhysScalar re = to_phys(s.rho_e), ri = to_phys(s.rho_i);
  const PhysVector ue = to_phys(s.u_e), ui = to_phys(s.u_i),
                   b = to_phys(s.B);
  const PhysScalar out_re = to_phys(rhs.rho_e);
  const PhysVector out_ue = to_phys(rhs.u_e);
  const PhysVector out_e = to_phys(rhs.E);

  double worst = 0.0;
  const int n = g->n();
  for (int i = 0; i < n; i += 3) {
    for (int j = 0; j < n; j += 3) {
      for (int l = 0; l < n; l += 3) {
        const std::size_t m = g->index(i, j, l);
        const double qe = re[m] * se;
        const double qi = ri[m] * si;
        const double rae = remainder_a(p.pressure_e, p.m_e, p.n_bar, eps, qe);
        const double rge =
            remainder_g_inv(p.pressure_e, p.m_e, p.n_bar, eps, qe);
        const double rgi =
            remainder_g_inv(p.pressure_i, p.m_i, p.n_bar, eps, qi);

        const double vex = ue.x[m] * se, vey = ue.y[m] * se,
                     vez = ue.z[m] * se;
        // density row
        const double drho =
            -(vex * fd.deriv(re, 0, i, j, l) + vey * fd.deriv(re, 1, i, j, l) +
              vez * fd.deriv(re, 2, i, j, l)) -
            rae * (fd.deriv(ue.x, 0, i, j, l) + fd.deriv(ue.y, 1, i, j, l) +
                   fd.deriv(ue.z, 2, i, j, l));
        worst = std::max(worst, std::abs(drho - out_re[m]));

        // electron momentum row, x component
        const double due_x =
            -(vex * fd.deriv(ue.x, 0, i, j, l) +
              vey * fd.deriv(ue.x, 1, i, j, l) +
              vez * fd.deriv(ue.x, 2, i, j, l)) -
            rae * fd.deriv(re, 0, i, j, l) -
            (ue.y[m] * b.z[m] - ue.z[m] * b.y[m]) / p.m_e;
        worst = std::max(worst, std::abs(due_x - out_ue.x[m]));

        // displacement row, y component
        const double de_y = rge * ue.y[m] * se - rgi * ui.y[m] * si;
        worst = std::max(worst, std::abs(de_y - out_e.y[m]));
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("filtered right-hand side") {
  const GridPtr g = small_grid(8);
  const auto sys = make_system(g, generic_params());
  Rng rng(11);
  State14 v = random_state(g, 2, rng);
  v *= 0.1 / l2_norm(v);

  SUBCASE("t = 0 coincides with the unfiltered evaluation") {
    const State14 a = sys->filtered_rhs(0.0, 0.05, v);
    const State14 b = sys->rhs_nonstiff(0.05, v);
    CHECK(l2_norm(a - b) == 0.0);
  }

  SUBCASE("no 1/eps blow-up along an eps ladder") {
    const double t = 0.37;
    double base = 0.0;
    for (double eps : {0.1, 0.01, 0.001}) {
      const double norm = l2_norm(sys->filtered_rhs(t, eps, v));
      if (base == 0.0) base = norm;
      CHECK(norm < 3.0 * base);
      CHECK(norm > base / 3.0);
    }
  }

  SUBCASE("conjugation is exact: group then rhs then inverse group") {
    const double t = 0.23, eps = 0.05;
    const State14 direct = sys->filtered_rhs(t, eps, v);
    const State14 w = sys->workspace().apply_group(t / eps, v);
    const State14 manual =
        sys->workspace().apply_group(-t / eps, sys->rhs_nonstiff(eps, w));
    CHECK(l2_norm(direct - manual) == 0.0);
  }
}

TEST_CASE("time stepping") {
  const GridPtr g = small_grid();
  const PlasmaParams p = generic_params();
  const auto sys = make_system(g, p);

  SUBCASE("zero state stays zero") {
    EmtfSystem::RunState rs{0.1, 0.0, 0.01, State14(g, Basis::symmetrized)};
    rs = sys->step(rs);
    CHECK(l2_norm(rs.v) == 0.0);
    CHECK(rs.t == doctest::Approx(0.01));
  }

  SUBCASE("dt halving gains a factor near 16 against a fine reference") {
    Rng rng(13);
    VectorField3 ve = random_divfree(g, 2, rng);
    VectorField3 vi = random_divfree(g, 2, rng);
    normalize_h1_pair(ve, vi);
    ve *= 0.1;
    vi *= 0.1;
    const ModeWorkspace& ws = sys->workspace();
    const double eps = 0.5;
    const State14 v0 = prepare_data_at_eps(ws, ve, vi, 0.05, eps);
    const double T = 0.12;

    const auto integrate = [&](double dt) {
      EmtfSystem::RunState rs{eps, 0.0, dt, v0};
      const int steps = static_cast<int>(std::lround(T / dt));
      for (int s = 0; s < steps; ++s) rs = sys->step(rs);
      return rs.v;
    };
    const State14 ref = integrate(0.00125);
    const double e1 = l2_norm(integrate(0.01) - ref);
    const double e2 = l2_norm(integrate(0.005) - ref);
    CHECK(e1 / e2 > 10.0);
    CHECK(e1 / e2 < 22.0);
  }

  SUBCASE("energy-norm growth stays modest over a short horizon") {
    Rng rng(17);
    VectorField3 ve = random_divfree(g, 2, rng);
    VectorField3 vi = random_divfree(g, 2, rng);
    normalize_h1_pair(ve, vi);
    ve *= 0.1;
    vi *= 0.1;
    const double eps = 0.1;
    const State14 v0 = prepare_data_at_eps(sys->workspace(), ve, vi, 0.05, eps);
    EmtfSystem::RunState rs{eps, 0.0, 0.005, v0};
    const double n0 = l2_norm(rs.v);
    for (int s = 0; s < 20; ++s) rs = sys->step(rs);
    CHECK(l2_norm(rs.v) < 1.05 * n0);
    CHECK(l2_norm(rs.v) > 0.95 * n0);
  }
}

TEST_CASE("gauss residuals") {
  const GridPtr g = small_grid();
  const PlasmaParams p = cubic_params();
  const auto sys = make_system(g, p);
  const ModeWorkspace& ws = sys->workspace();
  Rng rng(19);
  VectorField3 ve = random_divfree(g, 3, rng);
  VectorField3 vi = random_divfree(g, 3, rng);
  normalize_h1_pair(ve, vi);
  ve *= 0.1;
  vi *= 0.1;

  SUBCASE("constructed data satisfies both laws") {
    const double eps = 0.1;
    const State14 s = prepare_data_at_eps(ws, ve, vi, 0.05, eps);
    const GaussResidual r = sys->gauss_residual(s, eps);
    CHECK(r.div_b <= 1e-12);
    CHECK(r.charge <= 1e-12);
  }

  SUBCASE("injected divergence is reported verbatim") {
    State14 s = prepare_data(ws, ve, vi, 0.05);
    ScalarField phi = random_scalar(g, 3, rng);
    const VectorField3 gphi = grad(phi);
    s.B += gphi;
    const GaussResidual r = sys->gauss_residual(s, 0.0);
    CHECK(r.div_b == doctest::Approx(l2_norm(div(gphi))).epsilon(1e-12));
  }

  SUBCASE("residuals stay at machine level along a cubic-law run") {
    const double eps = 0.1;
    const State14 v0 = prepare_data_at_eps(ws, ve, vi, 0.05, eps);
    EmtfSystem::RunState rs{eps, 0.0, 0.004, v0};
    const GaussResidual r0 = sys->gauss_residual(rs.v, eps);
    double worst_div = r0.div_b, worst_charge = r0.charge;
    for (int s = 0; s < 25; ++s) {
      rs = sys->step(rs);
      const GaussResidual r = sys->gauss_residual(sys->unfilter(rs), eps);
      worst_div = std::max(worst_div, r.div_b);
      worst_charge = std::max(worst_charge, r.charge);
    }
    CHECK(worst_div <= 10.0 * std::max(r0.div_b, 1e-15));
    CHECK(worst_charge <= 10.0 * std::max(r0.charge, 1e-15));
  }
}

TEST_CASE("run driver") {
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.plasma = generic_params();
  cfg.model = Model::emtf;
  cfg.epsilon_ladder = {0.1};
  cfg.T = 0.05;
  cfg.amplitude = 0.05;
  cfg.band_kmax = 2;
  cfg.seed = 5;
  const RunContext ctx(cfg);

  SUBCASE("T = 0 yields only the initial snapshot") {
    RunConfig c0 = cfg;
    c0.T = 0.0;
    const RunContext ctx0(c0);
    const Trajectory t = run_emtf(ctx0, 0.1);
    CHECK(t.rows.size() == 1);
    CHECK(t.rows[0].t == 0.0);
  }

  SUBCASE("identical config and seed reproduce diagnostics bit for bit") {
    const Trajectory a = run_emtf(ctx, 0.1);
    const Trajectory b = run_emtf(ctx, 0.1);
    CHECK(diagnostics_csv(a) == diagnostics_csv(b));
    CHECK(!a.aborted);
  }

  SUBCASE("filtered variable drifts slowly from its initial value") {
    const RunContext ctx2(cfg);
    const State14 v0 = ctx2.initial_state(0.1);
    double max_drift = 0.0;
    run_emtf(ctx2, 0.1, [&](const EmtfSnapshotView& view) {
      max_drift = std::max(max_drift, l2_norm(view.filtered - v0));
    });
    CHECK(max_drift < 0.5 * l2_norm(v0));
  }
}
