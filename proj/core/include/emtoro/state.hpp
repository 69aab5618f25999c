#pragma once

#include <Eigen/Dense>

#include "emtoro/field.hpp"
#include "emtoro/operators.hpp"
#include "emtoro/plasma.hpp"

namespace emtoro {

using Vec14 = Eigen::Matrix<Complex, 14, 1>;
using Mat14 = Eigen::Matrix<Complex, 14, 14>;

/// Which representation the 14 components live in:
///   original    U = (q_e, q_i, v_e, v_i, E, B)
///   symmetrized W = A0^{1/2} U = (rho_e, rho_i, u_e, u_i, E, B)
/// with the diagonal scaling sqrt(n_bar m_s) on density/velocity blocks.
enum class Basis { original, symmetrized };

/// 14-component state on the torus: two scalars and four 3-vectors, all
/// real-valued (Hermitian-symmetric spectrally). Component packing order for
/// per-mode work is [rho_e, rho_i, u_e, u_i, E, B].
struct State14 {
  Basis basis = Basis::symmetrized;
  ScalarField rho_e, rho_i;
  VectorField3 u_e, u_i, E, B;

  State14() = default;
  State14(const GridPtr& grid, Basis b);

  const GridPtr& grid() const { return rho_e.grid(); }

  Vec14 mode(std::size_t m) const;
  void set_mode(std::size_t m, const Vec14& v);

  State14& operator+=(const State14& o);
  State14& operator-=(const State14& o);
  State14& operator*=(double s);
  friend State14 operator+(State14 a, const State14& b) { return a += b; }
  friend State14 operator-(State14 a, const State14& b) { return a -= b; }
  friend State14 operator*(double s, State14 a) { return a *= s; }
};

void check_basis(const State14& s, Basis expected, const char* where);

State14 symmetrize(const State14& original, const PlasmaParams& p);
State14 desymmetrize(const State14& symmetrized, const PlasmaParams& p);

State14 dealias(const State14& s);

double l2_norm(const State14& s);
/// Discrete Sobolev norm (sum_k (1+|k|^2)^sigma |c_k|^2)^(1/2) over all 14
/// components, scaled by (2 pi)^(3/2) like the L2 norm.
double hsigma_norm(const State14& s, double sigma);
double hermitian_defect(const State14& s);

}  // namespace emtoro
