#include "emtoro/operators.hpp"

#include <cmath>

namespace emtoro {

namespace {

constexpr Complex kI{0.0, 1.0};

// Applies op(kx, ky, kz, in...) over the lattice with derivative wavenumbers.
template <typename F>
void for_each_mode(const Grid& g, F&& op) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const int kx = g.freq_deriv(i);
    for (int j = 0; j < n; ++j) {
      const int ky = g.freq_deriv(j);
      std::size_t base = g.index(i, j, 0);
      for (int l = 0; l < n; ++l) {
        op(kx, ky, g.freq_deriv(l), base + static_cast<std::size_t>(l));
      }
    }
  }
}

void require_positive(double b) {
  if (!(b > 0.0)) throw Error("helmholtz operators require b > 0");
}

}  // namespace

VectorField3 grad(const ScalarField& f) {
  VectorField3 out(f.grid());
  const auto& c = f.coeffs();
  for_each_mode(*f.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const Complex v = kI * c[m];
    out[0].coeffs()[m] = static_cast<double>(kx) * v;
    out[1].coeffs()[m] = static_cast<double>(ky) * v;
    out[2].coeffs()[m] = static_cast<double>(kz) * v;
  });
  return out;
}

ScalarField div(const VectorField3& v) {
  ScalarField out(v.grid());
  for_each_mode(*v.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    out.coeffs()[m] = kI * (static_cast<double>(kx) * v[0].coeffs()[m] +
                            static_cast<double>(ky) * v[1].coeffs()[m] +
                            static_cast<double>(kz) * v[2].coeffs()[m]);
  });
  return out;
}

VectorField3 curl(const VectorField3& v) {
  VectorField3 out(v.grid());
  for_each_mode(*v.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const Complex vx = v[0].coeffs()[m], vy = v[1].coeffs()[m],
                  vz = v[2].coeffs()[m];
    out[0].coeffs()[m] = kI * (static_cast<double>(ky) * vz -
                               static_cast<double>(kz) * vy);
    out[1].coeffs()[m] = kI * (static_cast<double>(kz) * vx -
                               static_cast<double>(kx) * vz);
    out[2].coeffs()[m] = kI * (static_cast<double>(kx) * vy -
                               static_cast<double>(ky) * vx);
  });
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  ScalarField out(f.grid());
  for_each_mode(*f.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
    out.coeffs()[m] = -k2 * f.coeffs()[m];
  });
  return out;
}

VectorField3 laplacian(const VectorField3& v) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = laplacian(v[i]);
  return out;
}

ScalarField inv_laplacian(const ScalarField& f) {
  ScalarField out(f.grid());
  for_each_mode(*f.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
    out.coeffs()[m] = k2 == 0.0 ? Complex{0.0, 0.0} : -f.coeffs()[m] / k2;
  });
  return out;
}

VectorField3 inv_laplacian(const VectorField3& v) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = inv_laplacian(v[i]);
  return out;
}

VectorField3 leray_project(const VectorField3& v) {
  VectorField3 out(v.grid());
  for_each_mode(*v.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
    const Complex vx = v[0].coeffs()[m], vy = v[1].coeffs()[m],
                  vz = v[2].coeffs()[m];
    if (k2 == 0.0) {
      out[0].coeffs()[m] = vx;
      out[1].coeffs()[m] = vy;
      out[2].coeffs()[m] = vz;
      return;
    }
    const Complex kv = (static_cast<double>(kx) * vx +
                        static_cast<double>(ky) * vy +
                        static_cast<double>(kz) * vz) /
                       k2;
    out[0].coeffs()[m] = vx - static_cast<double>(kx) * kv;
    out[1].coeffs()[m] = vy - static_cast<double>(ky) * kv;
    out[2].coeffs()[m] = vz - static_cast<double>(kz) * kv;
  });
  return out;
}

namespace {

template <typename Factor>
ScalarField apply_factor(const ScalarField& f, Factor&& factor) {
  ScalarField out(f.grid());
  for_each_mode(*f.grid(), [&](int kx, int ky, int kz, std::size_t m) {
    const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
    out.coeffs()[m] = factor(k2) * f.coeffs()[m];
  });
  return out;
}

}  // namespace

ScalarField helmholtz_inverse(const ScalarField& f, double b) {
  require_positive(b);
  return apply_factor(f, [b](double k2) { return 1.0 / (1.0 + b * k2); });
}

VectorField3 helmholtz_inverse(const VectorField3& v, double b) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = helmholtz_inverse(v[i], b);
  return out;
}

ScalarField helmholtz_ratio(const ScalarField& f, double b) {
  require_positive(b);
  return apply_factor(f, [b](double k2) { return -b * k2 / (1.0 + b * k2); });
}

VectorField3 helmholtz_ratio(const VectorField3& v, double b) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = helmholtz_ratio(v[i], b);
  return out;
}

ScalarField helmholtz_apply(const ScalarField& f, double b) {
  require_positive(b);
  return apply_factor(f, [b](double k2) { return 1.0 + b * k2; });
}

VectorField3 helmholtz_apply(const VectorField3& v, double b) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = helmholtz_apply(v[i], b);
  return out;
}

ScalarField dealias(const ScalarField& f) {
  const auto& g = *f.grid();
  ScalarField out = f;
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (!g.in_dealias_band(i, j, l)) {
          out.coeffs()[g.index(i, j, l)] = Complex{0.0, 0.0};
        }
      }
    }
  }
  return out;
}

VectorField3 dealias(const VectorField3& v) {
  VectorField3 out(v.grid());
  for (int i = 0; i < 3; ++i) out[i] = dealias(v[i]);
  return out;
}

ScalarField product(const ScalarField& a, const ScalarField& b) {
  check_same_grid(a, b);
  return to_spec(a.grid(), mul(to_phys(a), to_phys(b)));
}

PhysScalar to_phys(const ScalarField& f) { return f.to_physical(); }

PhysVector to_phys(const VectorField3& v) {
  return PhysVector{to_phys(v[0]), to_phys(v[1]), to_phys(v[2])};
}

ScalarField to_spec(const GridPtr& grid, const PhysScalar& s, bool truncate) {
  ScalarField f = ScalarField::from_physical(grid, s);
  return truncate ? dealias(f) : f;
}

VectorField3 to_spec(const GridPtr& grid, const PhysVector& v, bool truncate) {
  VectorField3 out(grid);
  out[0] = to_spec(grid, v.x, truncate);
  out[1] = to_spec(grid, v.y, truncate);
  out[2] = to_spec(grid, v.z, truncate);
  return out;
}

PhysVector cross(const PhysVector& a, const PhysVector& b) {
  const std::size_t n = a.x.size();
  PhysVector out{PhysScalar(n), PhysScalar(n), PhysScalar(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.x[i] = a.y[i] * b.z[i] - a.z[i] * b.y[i];
    out.y[i] = a.z[i] * b.x[i] - a.x[i] * b.z[i];
    out.z[i] = a.x[i] * b.y[i] - a.y[i] * b.x[i];
  }
  return out;
}

PhysScalar dot(const PhysVector& a, const PhysVector& b) {
  const std::size_t n = a.x.size();
  PhysScalar out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a.x[i] * b.x[i] + a.y[i] * b.y[i] + a.z[i] * b.z[i];
  }
  return out;
}

PhysScalar mul(const PhysScalar& a, const PhysScalar& b) {
  PhysScalar out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

void axpy(double alpha, const PhysScalar& x, PhysScalar& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void axpy(double alpha, const PhysVector& x, PhysVector& y) {
  axpy(alpha, x.x, y.x);
  axpy(alpha, x.y, y.y);
  axpy(alpha, x.z, y.z);
}

PhysVector scale(const PhysScalar& s, const PhysVector& v) {
  return PhysVector{mul(s, v.x), mul(s, v.y), mul(s, v.z)};
}

}  // namespace emtoro
