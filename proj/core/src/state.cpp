#include "emtoro/state.hpp"

#include <cmath>
#include <numbers>

namespace emtoro {

State14::State14(const GridPtr& grid, Basis b)
    : basis(b),
      rho_e(grid),
      rho_i(grid),
      u_e(grid),
      u_i(grid),
      E(grid),
      B(grid) {}

Vec14 State14::mode(std::size_t m) const {
  Vec14 v;
  v[0] = rho_e.coeffs()[m];
  v[1] = rho_i.coeffs()[m];
  for (int i = 0; i < 3; ++i) {
    v[2 + i] = u_e[i].coeffs()[m];
    v[5 + i] = u_i[i].coeffs()[m];
    v[8 + i] = E[i].coeffs()[m];
    v[11 + i] = B[i].coeffs()[m];
  }
  return v;
}

void State14::set_mode(std::size_t m, const Vec14& v) {
  rho_e.coeffs()[m] = v[0];
  rho_i.coeffs()[m] = v[1];
  for (int i = 0; i < 3; ++i) {
    u_e[i].coeffs()[m] = v[2 + i];
    u_i[i].coeffs()[m] = v[5 + i];
    E[i].coeffs()[m] = v[8 + i];
    B[i].coeffs()[m] = v[11 + i];
  }
}

State14& State14::operator+=(const State14& o) {
  if (basis != o.basis) throw Error("basis mismatch in state arithmetic");
  rho_e += o.rho_e;
  rho_i += o.rho_i;
  u_e += o.u_e;
  u_i += o.u_i;
  E += o.E;
  B += o.B;
  return *this;
}

State14& State14::operator-=(const State14& o) {
  if (basis != o.basis) throw Error("basis mismatch in state arithmetic");
  rho_e -= o.rho_e;
  rho_i -= o.rho_i;
  u_e -= o.u_e;
  u_i -= o.u_i;
  E -= o.E;
  B -= o.B;
  return *this;
}

State14& State14::operator*=(double s) {
  rho_e *= s;
  rho_i *= s;
  u_e *= s;
  u_i *= s;
  E *= s;
  B *= s;
  return *this;
}

void check_basis(const State14& s, Basis expected, const char* where) {
  if (s.basis != expected) {
    throw Error(std::string(where) + ": state is in the wrong basis");
  }
}

namespace {

State14 scale_blocks(const State14& s, double fe, double fi, Basis out_basis) {
  State14 out = s;
  out.basis = out_basis;
  out.rho_e *= fe;
  out.rho_i *= fi;
  out.u_e *= fe;
  out.u_i *= fi;
  return out;
}

}  // namespace

State14 symmetrize(const State14& original, const PlasmaParams& p) {
  check_basis(original, Basis::original, "symmetrize");
  const double fe = std::sqrt(p.n_bar * p.m_e);
  const double fi = std::sqrt(p.n_bar * p.m_i);
  return scale_blocks(original, fe, fi, Basis::symmetrized);
}

State14 desymmetrize(const State14& symmetrized, const PlasmaParams& p) {
  check_basis(symmetrized, Basis::symmetrized, "desymmetrize");
  const double fe = 1.0 / std::sqrt(p.n_bar * p.m_e);
  const double fi = 1.0 / std::sqrt(p.n_bar * p.m_i);
  return scale_blocks(symmetrized, fe, fi, Basis::original);
}

State14 dealias(const State14& s) {
  State14 out = s;
  out.rho_e = dealias(s.rho_e);
  out.rho_i = dealias(s.rho_i);
  out.u_e = dealias(s.u_e);
  out.u_i = dealias(s.u_i);
  out.E = dealias(s.E);
  out.B = dealias(s.B);
  return out;
}

double l2_norm(const State14& s) { return hsigma_norm(s, 0.0); }

double hsigma_norm(const State14& s, double sigma) {
  const auto& g = *s.grid();
  const int n = g.n();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double kx = g.freq(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.freq(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.freq(l);
        const double w =
            sigma == 0.0
                ? 1.0
                : std::pow(1.0 + kx * kx + ky * ky + kz * kz, sigma);
        const Vec14 v = s.mode(g.index(i, j, l));
        acc += w * v.squaredNorm();
      }
    }
  }
  const double two_pi_cubed =
      8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  return std::sqrt(two_pi_cubed * acc);
}

double hermitian_defect(const State14& s) {
  double worst = hermitian_defect(s.rho_e);
  worst = std::max(worst, hermitian_defect(s.rho_i));
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, hermitian_defect(s.u_e[i]));
    worst = std::max(worst, hermitian_defect(s.u_i[i]));
    worst = std::max(worst, hermitian_defect(s.E[i]));
    worst = std::max(worst, hermitian_defect(s.B[i]));
  }
  return worst;
}

}  // namespace emtoro
