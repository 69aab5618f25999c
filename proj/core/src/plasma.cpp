#include "emtoro/plasma.hpp"

#include <cmath>
#include <string>

namespace emtoro {

namespace {
constexpr double kVacuumGuard = 1e-6;

void check_density(double n, double n_bar) {
  if (!(n > n_bar * kVacuumGuard)) {
    throw VacuumError("density " + std::to_string(n) +
                      " at or below the vacuum guard " +
                      std::to_string(n_bar * kVacuumGuard));
  }
}
}  // namespace

void PressureLaw::validate() const {
  if (!(K > 0.0)) throw ConfigError("pressure law requires K > 0");
  if (!(gamma >= 1.0)) throw ConfigError("pressure law requires gamma >= 1");
}

double PressureLaw::p(double n) const { return K * std::pow(n, gamma); }

double PressureLaw::dp(double n) const {
  return K * gamma * std::pow(n, gamma - 1.0);
}

void PlasmaParams::validate() const {
  if (!(m_e > 0.0) || !(m_i > 0.0)) throw ConfigError("masses must be > 0");
  if (!(n_bar > 0.0)) throw ConfigError("background density must be > 0");
  pressure_e.validate();
  pressure_i.validate();
}

DerivedConstants derived_constants(const PlasmaParams& p) {
  p.validate();
  DerivedConstants d{};
  d.delta = PlasmaParams::Z * p.m_e / p.m_i;
  d.rho_bar = p.n_bar * (p.m_e + p.m_i);
  d.d_e = std::sqrt(d.delta) * p.m_i / PlasmaParams::Z;
  d.d_i = (1.0 - d.delta) * p.m_i / PlasmaParams::Z;
  d.b_bar = 1.0 / (p.n_bar / p.m_e + p.n_bar / p.m_i);
  d.dp_e = p.pressure_e.dp(p.n_bar);
  d.dp_i = p.pressure_i.dp(p.n_bar);
  const double r = std::sqrt(d.dp_e / d.dp_i);
  d.c_bar = 1.0 / (r + 1.0 / r);
  d.abar_e = std::sqrt(d.dp_e / p.m_e);
  d.abar_i = std::sqrt(d.dp_i / p.m_i);

  const double alt = d.d_e * d.d_e / d.rho_bar;
  if (std::abs(alt - d.b_bar) > 1e-14 * std::abs(d.b_bar)) {
    throw Error("derived constant identity b = d_e^2/rho failed");
  }
  return d;
}

double g_of_n(const PressureLaw& law, double m, double n_bar, double n) {
  check_density(n, n_bar);
  const double c = std::sqrt(law.K * law.gamma / m);
  if (law.gamma == 1.0) return c * std::log(n / n_bar);
  const double e = 0.5 * (law.gamma - 1.0);
  return c / e * (std::pow(n, e) - std::pow(n_bar, e));
}

double g_inv(const PressureLaw& law, double m, double n_bar, double q) {
  if (q == 0.0) return n_bar;  // fixed point, kept exact
  const double c = std::sqrt(law.K * law.gamma / m);
  double n;
  if (law.gamma == 1.0) {
    n = n_bar * std::exp(q / c);
  } else {
    const double e = 0.5 * (law.gamma - 1.0);
    const double base = std::pow(n_bar, e) + e * q / c;
    if (!(base > 0.0)) {
      throw VacuumError("g_inv: vacuum breach at q = " + std::to_string(q));
    }
    n = std::pow(base, 1.0 / e);
  }
  check_density(n, n_bar);
  return n;
}

double sound_ratio(const PressureLaw& law, double m, double n_bar, double q) {
  const double abar = std::sqrt(law.dp(n_bar) / m);
  return abar + 0.5 * (law.gamma - 1.0) * q;
}

double remainder_a(const PressureLaw& law, double m, double n_bar, double eps,
                   double q) {
  // a is affine in q for the gamma-law, so the quotient is eps-independent.
  (void)m;
  (void)n_bar;
  (void)eps;
  return 0.5 * (law.gamma - 1.0) * q;
}

double remainder_g_inv(const PressureLaw& law, double m, double n_bar,
                       double eps, double q) {
  if (eps < 0.0) throw Error("remainder: eps must be >= 0");
  if (q == 0.0) return 0.0;
  if (eps == 0.0) {
    // (g^{-1})'(0) = n_bar / a(0)
    const double abar = std::sqrt(law.dp(n_bar) / m);
    return n_bar / abar * q;
  }
  return (g_inv(law, m, n_bar, eps * q) - n_bar) / eps;
}

}  // namespace emtoro
