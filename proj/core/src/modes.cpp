#include "emtoro/modes.hpp"

#include <cmath>

namespace emtoro {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Eigen::Matrix3d rotation_generator(int j) {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  a[j] = 1.0;
  Eigen::Matrix3d r;
  r << 0.0, -a.z(), a.y(), a.z(), 0.0, -a.x(), -a.y(), a.x(), 0.0;
  return r;
}

Mat14 coefficient_matrix_C(int j, const PlasmaParams& p) {
  const auto d = derived_constants(p);
  Mat14 c = Mat14::Zero();
  c(0, 2 + j) = -d.abar_e;
  c(2 + j, 0) = -d.abar_e;
  c(1, 5 + j) = -d.abar_i;
  c(5 + j, 1) = -d.abar_i;
  const Eigen::Matrix3d r = rotation_generator(j);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      c(8 + a, 11 + b) = -r(b, a);  // -transpose(R_j) = R_j, kept explicit
      c(11 + a, 8 + b) = -r(a, b);
    }
  }
  return c;
}

Mat14 coefficient_matrix_D(const PlasmaParams& p) {
  const double se = std::sqrt(p.n_bar / p.m_e);
  const double si = std::sqrt(p.n_bar / p.m_i);
  Mat14 d = Mat14::Zero();
  for (int a = 0; a < 3; ++a) {
    d(2 + a, 8 + a) = -se;
    d(5 + a, 8 + a) = si;
    d(8 + a, 2 + a) = se;
    d(8 + a, 5 + a) = -si;
  }
  return d;
}

ModeMatrices build_mode_matrices(const Vec3i& k, const PlasmaParams& p) {
  ModeMatrices mm;
  mm.k = k;
  mm.L = coefficient_matrix_D(p).cast<Complex>();
  for (int j = 0; j < 3; ++j) {
    if (k[j] != 0) {
      mm.L += kI * static_cast<double>(k[j]) *
              coefficient_matrix_C(j, p).cast<Complex>();
    }
  }

  const auto d = derived_constants(p);
  mm.G = Mat2x14::Zero();
  const double ge = std::sqrt(p.n_bar / d.dp_e);
  const double gi = std::sqrt(p.n_bar / d.dp_i);
  mm.G(1, 0) = ge;
  mm.G(1, 1) = -gi;
  for (int a = 0; a < 3; ++a) {
    mm.G(0, 11 + a) = kI * static_cast<double>(k[a]);
    mm.G(1, 8 + a) = kI * static_cast<double>(k[a]);
  }
  return mm;
}

ModeFrame mode_frame(const Vec3i& k) {
  if (k == Vec3i::Zero()) throw Error("mode_frame: k must be nonzero");
  ModeFrame f;
  f.e1 = k.cast<double>().normalized();
  Eigen::Vector3d a(0.0, 0.0, 1.0);
  if (f.e1.cross(a).norm() < 1e-8) a = Eigen::Vector3d(1.0, 0.0, 0.0);
  f.e2 = f.e1.cross(a).normalized();
  f.e3 = f.e1.cross(f.e2);
  return f;
}

namespace {

Vec14 pack(Complex rho_e, Complex rho_i, const Eigen::Vector3cd& ue,
           const Eigen::Vector3cd& ui, const Eigen::Vector3cd& e,
           const Eigen::Vector3cd& b) {
  Vec14 v;
  v[0] = rho_e;
  v[1] = rho_i;
  v.segment<3>(2) = ue;
  v.segment<3>(5) = ui;
  v.segment<3>(8) = e;
  v.segment<3>(11) = b;
  return v;
}

const Eigen::Vector3cd kZero3 = Eigen::Vector3cd::Zero();

}  // namespace

void explicit_bases(const Vec3i& k, const PlasmaParams& p, Basis14& h_basis,
                    Basis14& kernel_basis) {
  const auto d = derived_constants(p);

  if (k == Vec3i::Zero()) {
    h_basis.resize(14, 7);
    kernel_basis.resize(14, 8);
    const double ratio = std::sqrt(d.dp_e / d.dp_i);
    const double nd = 1.0 / std::sqrt(1.0 + ratio * ratio);
    h_basis.col(0) =
        pack(nd * ratio, nd, kZero3, kZero3, kZero3, kZero3);
    const double nv = std::sqrt(p.m_i / (p.m_e + p.m_i));
    const double rv = std::sqrt(p.m_e / p.m_i);
    for (int j = 0; j < 3; ++j) {
      Eigen::Vector3cd ej = Eigen::Vector3cd::Zero();
      ej[j] = 1.0;
      h_basis.col(1 + j) = pack(0.0, 0.0, nv * rv * ej, nv * ej, kZero3, kZero3);
      h_basis.col(4 + j) = pack(0.0, 0.0, kZero3, kZero3, kZero3, ej);
    }
    kernel_basis.leftCols(7) = h_basis;
    kernel_basis.col(7) =
        pack(-nd, nd * ratio, kZero3, kZero3, kZero3, kZero3);
    return;
  }

  const ModeFrame fr = mode_frame(k);
  const double kn = k.cast<double>().norm();
  const Eigen::Vector3cd e1 = fr.e1.cast<Complex>();
  const Eigen::Vector3cd e2 = fr.e2.cast<Complex>();
  const Eigen::Vector3cd e3 = fr.e3.cast<Complex>();

  const double se = std::sqrt(p.n_bar / p.m_e);
  const double si = std::sqrt(p.n_bar / p.m_i);

  h_basis.resize(14, 4);
  kernel_basis.resize(14, 6);

  const double n12 = 1.0 / std::sqrt(p.m_e + p.m_i);
  h_basis.col(0) = pack(0.0, 0.0, std::sqrt(p.m_e) * n12 * e2,
                        std::sqrt(p.m_i) * n12 * e2, kZero3, kZero3);
  h_basis.col(1) = pack(0.0, 0.0, std::sqrt(p.m_e) * n12 * e3,
                        std::sqrt(p.m_i) * n12 * e3, kZero3, kZero3);

  const double bk = d.b_bar * kn;
  const double n34 =
      1.0 / std::sqrt(1.0 / d.b_bar + 1.0 / (d.b_bar * d.b_bar * kn * kn));
  h_basis.col(2) = pack(0.0, 0.0, n34 * se * e2, -n34 * si * e2, kZero3,
                        -kI / bk * n34 * e3);
  h_basis.col(3) = pack(0.0, 0.0, n34 * se * e3, -n34 * si * e3, kZero3,
                        kI / bk * n34 * e2);

  kernel_basis.leftCols(4) = h_basis;
  kernel_basis.col(4) = pack(0.0, 0.0, kZero3, kZero3, kZero3, e1);
  const double n6 = 1.0 / std::sqrt(p.n_bar * d.dp_e + p.n_bar * d.dp_i +
                                    kn * kn * d.dp_e * d.dp_i);
  kernel_basis.col(5) =
      pack(-n6 * std::sqrt(p.n_bar * d.dp_i), n6 * std::sqrt(p.n_bar * d.dp_e),
           kZero3, kZero3, kI * kn * std::sqrt(d.dp_e * d.dp_i) * n6 * e1,
           kZero3);
}

ModeBasis kernel_bases(const ModeMatrices& mm, const PlasmaParams& p) {
  ModeBasis mb;
  mb.k = mm.k;
  explicit_bases(mm.k, p, mb.h_basis, mb.kernel_basis);

  // Hermitian eigenproblem for i L_k; frequencies w with L v = i w v.
  Eigen::SelfAdjointEigenSolver<Mat14> es(kI * mm.L);
  if (es.info() != Eigen::Success) throw Error("mode eigendecomposition failed");
  mb.eigvec = es.eigenvectors();
  mb.eigw = -es.eigenvalues();
  return mb;
}

Mat14 projector_Pe(const ModeBasis& mb) {
  return mb.h_basis * mb.h_basis.adjoint();
}

Mat14 projector_P(const ModeBasis& mb) {
  return mb.kernel_basis * mb.kernel_basis.adjoint();
}

Eigen::MatrixXcd nullspace_basis(const Eigen::MatrixXcd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? 1e-10 * sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

Mat14 nullspace_projector(const Eigen::MatrixXcd& A) {
  const Eigen::MatrixXcd ns = nullspace_basis(A);
  return ns * ns.adjoint();
}

int nullity(const Eigen::MatrixXcd& A) {
  return static_cast<int>(nullspace_basis(A).cols());
}

}  // namespace emtoro
