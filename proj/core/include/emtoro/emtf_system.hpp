#pragma once

#include <memory>

#include "emtoro/mode_ops.hpp"

namespace emtoro {

/// Classical 4th-order one-step method. F is t, y -> dy/dt over any state
/// type supporting +=, *= and copy.
template <typename StateT, typename F>
StateT rk4_step(F&& f, double t, const StateT& y, double dt) {
  StateT k1 = f(t, y);
  StateT y2 = y;
  y2 += 0.5 * dt * k1;
  StateT k2 = f(t + 0.5 * dt, y2);
  StateT y3 = y;
  y3 += 0.5 * dt * k2;
  StateT k3 = f(t + 0.5 * dt, y3);
  StateT y4 = y;
  y4 += dt * k3;
  StateT k4 = f(t + dt, y4);

  StateT out = y;
  k2 *= 2.0;
  k3 *= 2.0;
  k1 += k2;
  k1 += k3;
  k1 += k4;
  k1 *= dt / 6.0;
  out += k1;
  return out;
}

bool state_finite(const State14& s);

struct GaussResidual {
  double div_b;
  double charge;
};

/// L2 norms of the two constraint residuals div B = 0 and
/// div E + R(g_e^{-1}) - R(g_i^{-1}) = 0; eps = 0 uses the linearized
/// charge law.
GaussResidual gauss_residual(const ModeWorkspace& ws, const State14& w,
                             double eps);

/// Solution blew up or produced non-finite values; the driver keeps the last
/// valid state.
struct InstabilityError : Error {
  using Error::Error;
};

/// Time integration of the symmetrized penalized two-fluid system in the
/// filtered variable V(t) = S(-t/eps) W(t): the stiff term never appears in
/// any discrete operator, only the group conjugation depends on eps.
class EmtfSystem {
 public:
  explicit EmtfSystem(std::shared_ptr<const ModeWorkspace> ws);

  const ModeWorkspace& workspace() const { return *ws_; }

  /// Non-penalized right-hand side sum_j A_j(eps, W) d_j W + F(eps, W),
  /// evaluated pseudo-spectrally with every product dealiased. eps = 0 gives
  /// the limit coefficients.
  State14 rhs_nonstiff(double eps, const State14& w) const;

  /// S(-t/eps) applied to rhs_nonstiff at S(t/eps) V.
  State14 filtered_rhs(double t, double eps, const State14& v) const;

  struct RunState {
    double eps;
    double t;
    double dt;
    State14 v;  // filtered variable
  };

  /// One RK4 step of the filtered equation; throws InstabilityError on
  /// non-finite output.
  RunState step(const RunState& rs) const;

  /// Reconstruct the unfiltered state W(t) = S(t/eps) V(t).
  State14 unfilter(const RunState& rs) const;

  GaussResidual gauss_residual(const State14& w, double eps) const {
    return emtoro::gauss_residual(*ws_, w, eps);
  }

  /// Advection-limited default step: 0.5 dx / (max |v| + max sound speed).
  double advective_dt(const State14& w) const;
  /// Step resolving the fastest in-band oscillation of the filtered
  /// integrand, (pi/2) eps / w_max.
  double fast_scale_dt(double eps) const;

 private:
  std::shared_ptr<const ModeWorkspace> ws_;
};

}  // namespace emtoro
