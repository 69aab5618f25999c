#pragma once

#include <Eigen/Dense>

#include "emtoro/plasma.hpp"
#include "emtoro/state.hpp"

namespace emtoro {

using Vec3i = Eigen::Vector3i;
using Mat2x14 = Eigen::Matrix<Complex, 2, 14>;
using Basis14 = Eigen::Matrix<Complex, 14, Eigen::Dynamic>;

/// Per-mode symbol of the penalization operator and of the Gauss constraint
/// rows, on the component order [rho_e, rho_i, u_e, u_i, E, B].
struct ModeMatrices {
  Vec3i k;
  Mat14 L;    // skew-Hermitian
  Mat2x14 G;  // div B row, charge law row
};

/// Cross-product generator R_j v = e^j x v.
Eigen::Matrix3d rotation_generator(int j);
/// The constant-coefficient blocks: L_k = i (k1 C1 + k2 C2 + k3 C3) + D.
Mat14 coefficient_matrix_C(int j, const PlasmaParams& p);
Mat14 coefficient_matrix_D(const PlasmaParams& p);

ModeMatrices build_mode_matrices(const Vec3i& k, const PlasmaParams& p);

/// Right-handed orthonormal frame with e1 = k/|k|. The completion is fixed
/// by e2 = normalize(e1 x a) with a = (0,0,1), falling back to a = (1,0,0)
/// when k is nearly parallel to the z axis; projectors are frame-independent.
struct ModeFrame {
  Eigen::Vector3d e1, e2, e3;
};
ModeFrame mode_frame(const Vec3i& k);

/// Orthonormal bases of H_k = Ker L_k  ∩  Ker G_k and of Ker L_k, plus the
/// numerically computed unitary eigendecomposition of L_k.
/// Dimensions: (7, 8) at k = 0 and (4, 6) at k != 0.
struct ModeBasis {
  Vec3i k;
  Basis14 h_basis;
  Basis14 kernel_basis;
  Mat14 eigvec;                       // columns V with L = V diag(i w) V^H
  Eigen::Matrix<double, 14, 1> eigw;  // real frequencies w
};

/// The closed-form vectors alone (no eigendecomposition); cheap enough to
/// build per mode inside field loops.
void explicit_bases(const Vec3i& k, const PlasmaParams& p, Basis14& h_basis,
                    Basis14& kernel_basis);

ModeBasis kernel_bases(const ModeMatrices& mm, const PlasmaParams& p);

Mat14 projector_Pe(const ModeBasis& mb);
Mat14 projector_P(const ModeBasis& mb);

// Brute-force oracles: orthogonal projector onto the nullspace of a stacked
// constraint matrix via SVD, with the rank cutoff at 1e-10 relative to the
// largest singular value.
Eigen::MatrixXcd nullspace_basis(const Eigen::MatrixXcd& A);
Mat14 nullspace_projector(const Eigen::MatrixXcd& A);
int nullity(const Eigen::MatrixXcd& A);

}  // namespace emtoro
