#pragma once

#include "emtoro/errors.hpp"

namespace emtoro {

/// Barotropic gamma-law pressure p(n) = K n^gamma with K > 0, gamma >= 1.
/// The family keeps the density change of variables and its inverse in
/// closed form.
struct PressureLaw {
  double K = 1.0;
  double gamma = 2.0;

  void validate() const;
  double p(double n) const;
  double dp(double n) const;  // p'(n) = K*gamma*n^(gamma-1)
};

/// Physical parameters of the two-fluid system. The charge number is fixed
/// to Z = 1; the ion rescaling (n_i, m_i, p_i) -> (Z n_i, m_i/Z, p_i(./Z))
/// that reduces the general case to Z = 1 is documented, not implemented.
struct PlasmaParams {
  double m_e = 1.0;
  double m_i = 1.0;
  double n_bar = 1.0;  // background density, > 0
  PressureLaw pressure_e;
  PressureLaw pressure_i;

  static constexpr int Z = 1;
  void validate() const;
};

struct DerivedConstants {
  double delta;    // Z m_e / m_i
  double rho_bar;  // n_bar (m_e + m_i)
  double d_e;      // sqrt(delta) m_i / Z, electron skin depth
  double d_i;      // (1 - delta) m_i / Z, ion skin depth
  double b_bar;    // d_e^2 / rho_bar = (n_bar/m_e + n_bar/m_i)^{-1}
  double c_bar;    // (sqrt(pe'/pi') + sqrt(pi'/pe'))^{-1}
  double dp_e, dp_i;      // p_s'(n_bar)
  double abar_e, abar_i;  // sqrt(p_s'(n_bar)/m_s)
};

/// Computes all derived coefficients and checks the algebraic identity
/// b_bar = d_e^2 / rho_bar to 1e-14 relative.
DerivedConstants derived_constants(const PlasmaParams& p);

// Density change of variables q = g(n) and its companions, per species
// (law, mass). g(n_bar) = 0 and a(0) = sqrt(p'(n_bar)/m).
//
// gamma != 1: g(n) = sqrt(K gamma/m) (2/(gamma-1)) (n^((gamma-1)/2)
//                     - n_bar^((gamma-1)/2))
// gamma == 1: g(n) = sqrt(K/m) log(n/n_bar)
//
// Any evaluation reaching n <= n_bar * 1e-6 throws VacuumError.
double g_of_n(const PressureLaw& law, double m, double n_bar, double n);
double g_inv(const PressureLaw& law, double m, double n_bar, double q);
/// Sound-speed ratio a(q) = sqrt(p'(n)/m) at n = g^{-1}(q); affine in q:
/// a(q) = a(0) + (gamma-1)/2 q.
double sound_ratio(const PressureLaw& law, double m, double n_bar, double q);

// First-order remainders R(h)(eps, q) = (h(eps q) - h(0))/eps with the
// analytic limit h'(0) q at eps = 0; continuous in eps.
double remainder_a(const PressureLaw& law, double m, double n_bar, double eps,
                   double q);
double remainder_g_inv(const PressureLaw& law, double m, double n_bar,
                       double eps, double q);

}  // namespace emtoro
